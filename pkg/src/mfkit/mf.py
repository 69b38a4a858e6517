"""Matrix factorizations and their homotopy category.

A matrix factorization of f is a pair (A, B) of square matrices over
S = K[x,y,z] with AB = BA = f*I.  Morphisms are pairs (X, Y) making the two
evident squares commute; the homotopy category quotients by null-homotopic
morphisms.  This module implements Hom spaces with exact coordinates,
null-homotopy and isomorphism tests, radical series, Auslander-Reiten
triangles, summand splitting, and cokernel presentations, following the
Groebner-based pipeline end to end.

Everything here is pure and exact; caches (Hom-space Groebner data,
null-homotopy solvers) are write-once and safe under concurrent reads.
"""

from __future__ import annotations

from itertools import combinations

from .errors import (
    MixedHypersurface,
    NoScalarBlock,
    NotASummand,
    NotHomFinite,
    NotScalarPlusNilpotent,
    NotZeroDimensional,
    PreconditionViolated,
    SocleEmpty,
    UnrecognizedSummand,
)
from .groebner import (
    FreeVector,
    LiftSolver,
    Submodule,
    colon_module,
    groebner_basis,
    ideal,
    normal_form,
    std_monomials,
    syzygies,
)
from .linalg import KMatrix, unique_eigenvalue
from .matrices import PolyMatrix, block_diag, constant_part, hstack, kronecker, vectorize, vstack
from .poly import Poly, PolyContext


class MatrixFactorization:
    """A pair (A, B) of size-m square polynomial matrices with AB = BA = f I."""

    __slots__ = ("ctx", "f", "A", "B", "size", "reduced_entries", "_cache")

    def __init__(self, f, a, b, check=True):
        self.ctx = f.ctx
        self.f = f
        self.A = a
        self.B = b
        self.size = a.rows
        if a.rows != a.cols or b.rows != b.cols or a.rows != b.rows:
            raise ValueError("factors must be square matrices of equal size")
        if check and not mf_verify(self):
            raise ValueError("not a matrix factorization: AB = BA = f*I fails")
        if check and f.is_zero():
            raise ValueError("the factored polynomial must be nonzero")
        self.reduced_entries = not (a.has_constant_terms() or b.has_constant_terms())
        self._cache = {}

    def __eq__(self, other):
        return (
            isinstance(other, MatrixFactorization)
            and self.f == other.f
            and self.A == other.A
            and self.B == other.B
        )

    def __repr__(self):
        return f"MF(size={self.size}, f={self.f})"

    def is_trivial_size(self):
        return self.size == 0


def mf_verify(m):
    """True exactly when A B = B A = f I."""
    if m.size == 0:
        return True
    f_id = PolyMatrix.identity(m.ctx, m.size, scale=m.f)
    return m.A * m.B == f_id and m.B * m.A == f_id


def shift(m):
    """The suspension [1]: swaps the pair.  An exact involution on objects."""
    return MatrixFactorization(m.f, m.B, m.A, check=False)


def direct_sum(m, n):
    if m.f != n.f or m.ctx != n.ctx:
        raise MixedHypersurface("direct sum requires the same polynomial and ring")
    return MatrixFactorization(
        m.f,
        block_diag([m.A, n.A], ctx=m.ctx),
        block_diag([m.B, n.B], ctx=m.ctx),
        check=False,
    )


class Morphism:
    """A strict morphism (X, Y): (A, B) -> (A', B') with Y B = B' X, X A = A' Y."""

    __slots__ = ("source", "target", "X", "Y")

    def __init__(self, source, target, x, y, check=True):
        self.source = source
        self.target = target
        self.X = x
        self.Y = y
        if check:
            if x.rows != target.size or x.cols != source.size:
                raise ValueError("X has the wrong shape")
            if not (y * source.B == target.B * x and x * source.A == target.A * y):
                raise ValueError("commuting squares fail: not a morphism")

    @staticmethod
    def identity(m):
        i = PolyMatrix.identity(m.ctx, m.size)
        return Morphism(m, m, i, i, check=False)

    @staticmethod
    def zero(source, target):
        z = PolyMatrix.zeros(source.ctx, target.size, source.size)
        return Morphism(source, target, z, z, check=False)

    def __add__(self, other):
        return Morphism(self.source, self.target, self.X + other.X, self.Y + other.Y, check=False)

    def __sub__(self, other):
        return Morphism(self.source, self.target, self.X - other.X, self.Y - other.Y, check=False)

    def scale(self, c):
        return Morphism(self.source, self.target, self.X.scale(c), self.Y.scale(c), check=False)

    def is_zero(self):
        return self.X.is_zero() and self.Y.is_zero()

    def __repr__(self):
        return f"Morphism({self.source.size} -> {self.target.size})"


def compose(psi, phi):
    """psi after phi."""
    if psi.source.size != phi.target.size:
        raise ValueError("composition shape mismatch")
    return Morphism(phi.source, psi.target, psi.X * phi.X, psi.Y * phi.Y, check=False)


def f_times_identity(m):
    """f * id, the canonical null-homotopic endomorphism."""
    i = PolyMatrix.identity(m.ctx, m.size, scale=m.f)
    return Morphism(m, m, i, i, check=False)


class Homotopy:
    """Witness (H_A, H_B) for X = H_B B + A' H_A and Y = B' H_B + H_A A."""

    __slots__ = ("HA", "HB")

    def __init__(self, ha, hb):
        self.HA = ha
        self.HB = hb


def cone(phi):
    """Mapping cone of a morphism; satisfies the factorization identity by
    the two commuting squares."""
    m, n = phi.source, phi.target
    ctx = m.ctx
    size = m.size + n.size
    a = PolyMatrix.zeros(ctx, size, size)
    b = PolyMatrix.zeros(ctx, size, size)
    for i in range(m.size):
        for j in range(m.size):
            a.entries[i][j] = -m.B.entries[i][j]
            b.entries[i][j] = -m.A.entries[i][j]
    for i in range(n.size):
        for j in range(n.size):
            a.entries[m.size + i][m.size + j] = n.A.entries[i][j]
            b.entries[m.size + i][m.size + j] = n.B.entries[i][j]
    for i in range(n.size):
        for j in range(m.size):
            a.entries[m.size + i][j] = phi.X.entries[i][j]
            b.entries[m.size + i][j] = phi.Y.entries[i][j]
    return MatrixFactorization(m.f, a, b)


def reduce_constant_pivots(m):
    """Split off contractible blocks headed by nonzero constant entries.

    Repeatedly clears the row and column of a constant pivot of A or B by
    elementary operations over S (the inverse operations act on the partner
    matrix), then drops the resulting 1x1 block.  The result is homotopy
    equivalent to the input; entries like 1 + x are not pivots.
    """
    a, b = m.A, m.B
    while True:
        found = _find_constant_pivot(a)
        if found is not None:
            a, b = _split_pivot(a, b, *found)
            continue
        found = _find_constant_pivot(b)
        if found is not None:
            b, a = _split_pivot(b, a, *found)
            continue
        break
    out = MatrixFactorization(m.f, a, b, check=False)
    if not mf_verify(out):
        raise AssertionError("pivot reduction broke the factorization identity")
    return out


def _find_constant_pivot(p):
    for i in range(p.rows):
        for j in range(p.cols):
            e = p.entries[i][j]
            if not e.is_zero() and e.is_constant():
                return i, j
    return None


def _split_pivot(p, q, i, j):
    """Clear row i / column j of p around the constant pivot, mirror the
    inverse operations on q, and drop the split 1x1 block."""
    ctx = p.ctx
    F = ctx.field
    p = PolyMatrix(ctx, p.entries)
    q = PolyMatrix(ctx, q.entries)
    n = p.rows
    c_inv = F.inv(p.entries[i][j].constant_coeff())
    for i2 in range(n):
        if i2 == i or p.entries[i2][j].is_zero():
            continue
        lam = p.entries[i2][j].scale(c_inv)
        for col in range(n):
            p.entries[i2][col] = p.entries[i2][col] - lam * p.entries[i][col]
        for row in range(n):
            q.entries[row][i] = q.entries[row][i] + lam * q.entries[row][i2]
    for j2 in range(n):
        if j2 == j or p.entries[i][j2].is_zero():
            continue
        lam = p.entries[i][j2].scale(c_inv)
        for row in range(n):
            p.entries[row][j2] = p.entries[row][j2] - lam * p.entries[row][j]
        for col in range(n):
            q.entries[j][col] = q.entries[j][col] + lam * q.entries[j2][col]
    keep_r = [r for r in range(n) if r != i]
    keep_c = [c for c in range(n) if c != j]
    return p.submatrix(keep_r, keep_c), q.submatrix([r for r in range(n) if r != j], [c for c in range(n) if c != i])


# ---------------------------------------------------------------------------
# Hom spaces
# ---------------------------------------------------------------------------


class HomSpace:
    """A K-basis of Hom in the homotopy category with exact coordinates.

    ``basis`` are strict morphisms whose normal-form vectorizations are
    K-linearly independent modulo the image of the homotopy map; ``support``
    and ``nf_matrix`` hold the coordinates enabling linear algebra on
    morphism classes.
    """

    __slots__ = ("source", "target", "basis", "support", "nf_matrix", "gb_beta", "_solve_matrix")

    def __init__(self, source, target, basis, support, nf_matrix, gb_beta):
        self.source = source
        self.target = target
        self.basis = basis
        self.support = support
        self.nf_matrix = nf_matrix
        self.gb_beta = gb_beta
        self._solve_matrix = None

    @property
    def dim(self):
        return len(self.basis)

    def vectorize_morphism(self, phi):
        return _stack_xy(phi.X, phi.Y)

    def coordinates(self, phi):
        return coordinates(phi, self)

    def __repr__(self):
        return f"HomSpace(dim={self.dim})"


def _stack_xy(x, y):
    """FreeVector (v(X); v(Y)) in S^(2 n m)."""
    polys = vectorize(x) + vectorize(y)
    return FreeVector.from_polys(polys)


def _morphism_matrix(m, n):
    """Columns span {(v(X), v(Y)) : X A - A' Y = 0} as kernel directions."""
    ctx = m.ctx
    i_n = PolyMatrix.identity(ctx, n.size)
    i_m = PolyMatrix.identity(ctx, m.size)
    return hstack([kronecker(i_n, m.A.transpose()), -kronecker(n.A, i_m)])


def _homotopy_target_matrix(m, n):
    """C = [I (x) A^T | B' (x) I]; null-homotopies of (X, Y) solve C h = v(Y)."""
    ctx = m.ctx
    i_n = PolyMatrix.identity(ctx, n.size)
    i_m = PolyMatrix.identity(ctx, m.size)
    return hstack([kronecker(i_n, m.A.transpose()), kronecker(n.B, i_m)])


def _beta_image_matrix(m, n):
    """Vectorized homotopy map: columns span v(Im beta) in S^(2 n m)."""
    ctx = m.ctx
    i_n = PolyMatrix.identity(ctx, n.size)
    i_m = PolyMatrix.identity(ctx, m.size)
    top = hstack([kronecker(n.A, i_m), kronecker(i_n, m.B.transpose())])
    bot = hstack([kronecker(i_n, m.A.transpose()), kronecker(n.B, i_m)])
    return vstack([top, bot])


def _unstack(vec, nrows, ncols, ctx):
    """Inverse of row-major vectorization starting at component 0."""
    entries = [[None] * ncols for _ in range(nrows)]
    for r in range(nrows):
        for c in range(ncols):
            entries[r][c] = vec.component(r * ncols + c)
    return PolyMatrix(ctx, entries, cols=ncols)


def hom_space(m, n, maxdeg=None, shuffle=None):
    """K-basis of Hom(M, N) in the (completed) homotopy category.

    Pipeline: syzygies of [I (x) A^T | -A' (x) I] give S-module generators
    (X_i, Y_i) of strict morphisms; each colon ideal (Im C : v(Y_i)) has
    finitely many standard monomials g_i^(j) (else the computation is not
    Hom-finite); the normal forms of v(g_i^(j) (X_i, Y_i)) against a GB of
    v(Im beta) are K-vectors whose independent subset indexes the basis.

    ``shuffle`` (a random.Random) permutes the syzygy generators, for
    stability testing; dimensions do not depend on it.
    """
    if m.f != n.f or m.ctx != n.ctx:
        raise MixedHypersurface("Hom requires the same polynomial and ring")
    ctx = m.ctx
    if m.size == 0 or n.size == 0:
        empty = Submodule(ctx, max(2 * m.size * n.size, 1), [])
        groebner_basis(empty)
        return HomSpace(m, n, [], [], KMatrix.zeros(ctx.field, 0, 0), empty)

    t1 = _morphism_matrix(m, n)
    strict_gens = syzygies(
        [FreeVector.from_polys([t1.entries[i][j] for i in range(t1.rows)]) for j in range(t1.cols)],
        maxdeg=maxdeg,
        verify=False,
    ).generators
    gens = list(strict_gens)
    if shuffle is not None:
        gens = list(gens)
        shuffle.shuffle(gens)

    c_mat = _homotopy_target_matrix(m, n)
    im_c = Submodule.from_columns(c_mat)
    groebner_basis(im_c, maxdeg=maxdeg)

    nm = m.size * n.size
    spanning = []
    for h in gens:
        x = _unstack(h, n.size, m.size, ctx)
        y_vec = FreeVector(
            ctx, nm, {(c - nm, mo): a for (c, mo), a in h.terms.items() if c >= nm}
        )
        y = _unstack(y_vec, n.size, m.size, ctx)
        try:
            ni = colon_module(im_c, y_vec, maxdeg=maxdeg)
            basis_monos = std_monomials(ni, maxdeg=maxdeg)
        except NotZeroDimensional as exc:
            raise NotHomFinite(
                "Hom is not finite-dimensional; the hypersurface is not "
                "isolated-singular at the origin or the input is invalid"
            ) from exc
        for mono, _comp in basis_monos:
            g = ctx.monomial(mono)
            spanning.append(Morphism(m, n, x.scale(g), y.scale(g), check=False))

    beta = _beta_image_matrix(m, n)
    gb_beta = Submodule.from_columns(beta)
    groebner_basis(gb_beta, maxdeg=maxdeg)

    nfs = [normal_form(_stack_xy(phi.X, phi.Y), gb_beta, maxdeg=maxdeg) for phi in spanning]
    support = sorted({k for nf in nfs for k in nf.terms})
    index = {k: i for i, k in enumerate(support)}
    field = ctx.field

    basis = []
    rows = []
    work = []  # eliminated copies of the kept rows
    pivots = []
    for phi, nf in zip(spanning, nfs):
        row = [field.zero] * len(support)
        for k, a in nf.terms.items():
            row[index[k]] = a
        red = row[:]
        for (pc, wrow) in zip(pivots, work):
            c = red[pc]
            if c != 0:
                red = [field.sub(x2, field.mul(c, y2)) for x2, y2 in zip(red, wrow)]
        pc = next((i for i, v in enumerate(red) if v != 0), None)
        if pc is None:
            continue
        inv = field.inv(red[pc])
        work.append([field.mul(v, inv) for v in red])
        pivots.append(pc)
        basis.append(phi)
        rows.append(row)

    kept_support = sorted({k for nf_row in rows for k, v in zip(support, nf_row) if v != 0})
    kidx = [index[k] for k in kept_support]
    nf_matrix = KMatrix(field, [[r[i] for i in kidx] for r in rows], cols=len(kidx))
    return HomSpace(m, n, basis, kept_support, nf_matrix, gb_beta)


def hom_dim(m, n, maxdeg=None):
    return hom_space(m, n, maxdeg=maxdeg).dim


def coordinates(phi, hs):
    """Unique coefficients of a morphism in the basis of its Hom space.

    The reconstruction identity NF(v(phi)) = sum c_i NF_i is checked exactly,
    which certifies that phi minus the reconstruction is null-homotopic.
    """
    if phi.source is not hs.source and phi.source != hs.source:
        raise ValueError("morphism source does not match the Hom space")
    if phi.target is not hs.target and phi.target != hs.target:
        raise ValueError("morphism target does not match the Hom space")
    field = hs.source.ctx.field
    nf = normal_form(_stack_xy(phi.X, phi.Y), hs.gb_beta)
    if hs.dim == 0:
        if not nf.is_zero():
            raise AssertionError("nonzero class in a zero Hom space")
        return []
    index = {k: i for i, k in enumerate(hs.support)}
    target = [field.zero] * len(hs.support)
    for k, a in nf.terms.items():
        if k not in index:
            raise AssertionError("normal form leaves the basis support")
        target[index[k]] = a
    sol = hs.nf_matrix.transpose().solve(target)
    if sol is None:
        raise AssertionError("morphism class is outside the computed basis span")
    recon = hs.nf_matrix.transpose().mul_vector(sol)
    if recon != target:
        raise AssertionError("coordinate reconstruction mismatch")
    return sol


def relations(hs, morphisms):
    """Basis of the K-linear relations among the given morphisms in the
    homotopy category: the kernel of their normal-form coordinate matrix."""
    field = hs.source.ctx.field
    coords = [coordinates(phi, hs) for phi in morphisms]
    if not coords:
        return []
    mat = KMatrix(field, coords, cols=hs.dim).transpose()
    return mat.kernel_basis()


def _nullhomotopy_solver(m, n, maxdeg=None):
    key = ("nullhtp", id(n))
    hit = m._cache.get(key)
    if hit is not None and hit[0] is n:
        return hit[1]
    c_mat = _homotopy_target_matrix(m, n)
    cols = [
        FreeVector.from_polys([c_mat.entries[i][j] for i in range(c_mat.rows)])
        for j in range(c_mat.cols)
    ]
    solver = LiftSolver(cols, maxdeg=maxdeg)
    m._cache[key] = (n, solver)
    return solver


def is_null_homotopic(phi, maxdeg=None):
    """A verified homotopy witness (H_A, H_B) for phi, or None.

    phi is zero in the homotopy category precisely when C h = v(Y) is
    solvable; the witness is checked against both homotopy identities.
    """
    m, n = phi.source, phi.target
    if m.size == 0 or n.size == 0:
        z = PolyMatrix.zeros(m.ctx, n.size, m.size)
        return Homotopy(z, z)
    solver = _nullhomotopy_solver(m, n, maxdeg=maxdeg)
    h = solver.solve(FreeVector.from_polys(vectorize(phi.Y)))
    if h is None:
        return None
    nm = m.size * n.size
    ha = PolyMatrix(m.ctx, [h[r * m.size : (r + 1) * m.size] for r in range(n.size)])
    hb = PolyMatrix(m.ctx, [h[nm + r * m.size : nm + (r + 1) * m.size] for r in range(n.size)])
    if phi.Y != n.B * hb + ha * m.A:
        raise AssertionError("homotopy witness fails the Y identity")
    if phi.X != hb * m.B + n.A * ha:
        raise AssertionError("homotopy witness fails the X identity")
    return Homotopy(ha, hb)


# ---------------------------------------------------------------------------
# isomorphisms and radicals
# ---------------------------------------------------------------------------


def is_isomorphism(phi):
    """Invertibility in the homotopy category, for reduced endpoints of equal
    size: both constant parts must be invertible over K."""
    m, n = phi.source, phi.target
    if not (m.reduced_entries and n.reduced_entries):
        raise PreconditionViolated("isomorphism test requires entries without constant terms")
    if m.size != n.size:
        return False
    if m.size == 0:
        return True
    return constant_part(phi.X).det() != 0 and constant_part(phi.Y).det() != 0


def _generic_dets(phis, field):
    """det X_0(lambda), det Y_0(lambda) for the generic combination of the
    given morphisms, as polynomials in fresh lambda variables."""
    l = len(phis)
    lam_ctx = PolyContext(field, tuple(f"l{i+1}" for i in range(l)))
    size = phis[0].target.size
    x0 = PolyMatrix.zeros(lam_ctx, size, size)
    y0 = PolyMatrix.zeros(lam_ctx, size, size)
    for i, phi in enumerate(phis):
        cx = constant_part(phi.X)
        cy = constant_part(phi.Y)
        lam = lam_ctx.var(i)
        for r in range(size):
            for c in range(size):
                if cx.data[r][c] != 0:
                    x0.entries[r][c] = x0.entries[r][c] + lam.scale(cx.data[r][c])
                if cy.data[r][c] != 0:
                    y0.entries[r][c] = y0.entries[r][c] + lam.scale(cy.data[r][c])
    return lam_ctx, x0.det_bareiss(), y0.det_bareiss()


def iso_test(m, n, strict=False, maxdeg=None, _hom=None):
    """Isomorphism of reduced matrix factorizations in the completed homotopy
    category.

    Default: the product det X_0(lambda) det Y_0(lambda) over the generic
    morphism is nonzero as a polynomial (equivalent over an infinite
    algebraically closed base).  ``strict`` additionally runs the
    Rabinowitsch-ideal Groebner test and returns its verdict.
    """
    if not (m.reduced_entries and n.reduced_entries):
        raise PreconditionViolated("isomorphism test requires entries without constant terms")
    if m.size != n.size:
        return False
    if m.size == 0:
        return True
    hs = hom_space(m, n, maxdeg=maxdeg) if _hom is None else _hom
    back = hom_space(n, m, maxdeg=maxdeg)
    if hs.dim != back.dim or hs.dim == 0:
        return False
    lam_ctx, det_x, det_y = _generic_dets(hs.basis, m.ctx.field)
    plain = not det_x.is_zero() and not det_y.is_zero()
    if not strict:
        return plain
    big = PolyContext(m.ctx.field, lam_ctx.names + ("muX", "muY"))

    def lift(p):
        return Poly(big, {mono + (0, 0): c for mono, c in p.terms.items()})

    mu_x = big.var(big.nvars - 2)
    mu_y = big.var(big.nvars - 1)
    rab = ideal([mu_x * lift(det_x) - big.one(), mu_y * lift(det_y) - big.one()])
    groebner_basis(rab, maxdeg=maxdeg)
    whole_ring = any(
        gb.leading_term()[0][1] == (0,) * big.nvars for gb in rab.gb
    )
    strict_verdict = not whole_ring
    if strict_verdict != plain:
        raise AssertionError("strict and generic isomorphism tests disagree")
    return strict_verdict


def eigenvalue_of(phi):
    """The scalar part of an endomorphism of an indecomposable reduced object."""
    lam = unique_eigenvalue(constant_part(phi.X))
    lam_y = unique_eigenvalue(constant_part(phi.Y))
    if lam != lam_y:
        raise NotScalarPlusNilpotent("X_0 and Y_0 disagree on the eigenvalue")
    return lam


class HomSubspace:
    """A subspace of a Hom space: morphisms plus their coordinate vectors."""

    __slots__ = ("hom", "basis", "coords")

    def __init__(self, hom, basis, coords):
        self.hom = hom
        self.basis = basis
        self.coords = coords

    @property
    def dim(self):
        return len(self.basis)


def radical_space(m, n, maxdeg=None, hom=None, check=True):
    """Basis of rad(M, N) for indecomposable reduced representatives.

    For distinct non-isomorphic objects this is the full Hom space; on an
    endomorphism space it is the span of basis elements minus their unique
    eigenvalues times the identity.
    """
    same = m is n or m == n
    hs = hom_space(m, n, maxdeg=maxdeg) if hom is None else hom
    field = m.ctx.field
    if not same:
        if check and iso_test(m, n, maxdeg=maxdeg):
            raise PreconditionViolated(
                "radical between distinct isomorphic representatives is unsupported; "
                "pass equal objects or non-isomorphic ones"
            )
        coords = KMatrix.identity(field, hs.dim)
        return HomSubspace(hs, list(hs.basis), coords)
    ident = Morphism.identity(m)
    id_coords = coordinates(ident, hs)
    gens = []
    rows = []
    for i, phi in enumerate(hs.basis):
        lam = eigenvalue_of(phi)
        rho = phi - ident.scale(lam)
        row = [field.sub(field.one if j == i else field.zero, field.mul(lam, id_coords[j])) for j in range(hs.dim)]
        gens.append((rho, row))
        rows.append(row)
    basis = []
    kept_rows = []
    work = []
    pivots = []
    for rho, row in gens:
        red = row[:]
        for pc, wrow in zip(pivots, work):
            c = red[pc]
            if c != 0:
                red = [field.sub(x2, field.mul(c, y2)) for x2, y2 in zip(red, wrow)]
        pc = next((i for i, v in enumerate(red) if v != 0), None)
        if pc is None:
            continue
        inv = field.inv(red[pc])
        work.append([field.mul(v, inv) for v in red])
        pivots.append(pc)
        basis.append(rho)
        kept_rows.append(row)
    coords = KMatrix(field, kept_rows, cols=hs.dim) if kept_rows else KMatrix.zeros(field, 0, hs.dim)
    return HomSubspace(hs, basis, coords)


def is_indecomposable(m, maxdeg=None, hom=None):
    """Generic-unit test: every eigenvalue-zero combination of End basis
    elements must have singular constant parts.  Requires reduced entries."""
    if not m.reduced_entries:
        raise PreconditionViolated("indecomposability test requires reduced entries")
    if m.size == 0:
        return False
    try:
        rad = radical_space(m, m, maxdeg=maxdeg, hom=hom)
    except NotScalarPlusNilpotent:
        return False
    if rad.hom.dim == 0:
        return False  # contractible
    if rad.dim == 0:
        return True
    _, det_x, det_y = _generic_dets(rad.basis, m.ctx.field)
    return det_x.is_zero() and det_y.is_zero()


def rad_power_dims(indecs, maxdeg=None, homs=None):
    """dim rad and dim rad/rad^2 for every ordered pair of the given pairwise
    non-isomorphic indecomposables.

    rad^2(M_i, M_j) is spanned by composites through every listed object;
    dimensions are computed on exact coordinates.  Returns (dim_rad,
    dim_rad_mod_rad2) as nested lists.
    """
    t = len(indecs)
    if homs is None:
        homs = {}
    rads = {}
    for i in range(t):
        for j in range(t):
            key = (i, j)
            if key not in homs:
                homs[key] = hom_space(indecs[i], indecs[j], maxdeg=maxdeg)
            rads[key] = radical_space(
                indecs[i], indecs[j], maxdeg=maxdeg, hom=homs[key], check=False
            )
    dim_rad = [[rads[(i, j)].dim for j in range(t)] for i in range(t)]
    dim_irr = [[0] * t for _ in range(t)]
    field = indecs[0].ctx.field
    for i in range(t):
        for j in range(t):
            hs = homs[(i, j)]
            vectors = []
            for l in range(t):
                for phi in rads[(i, l)].basis:
                    for psi in rads[(l, j)].basis:
                        vectors.append(coordinates(compose(psi, phi), hs))
            if vectors:
                rank = KMatrix(field, vectors, cols=hs.dim).rank()
            else:
                rank = 0
            dim_irr[i][j] = dim_rad[i][j] - rank
    return dim_rad, dim_irr


# ---------------------------------------------------------------------------
# Auslander-Reiten triangles, multiplicities, splitting
# ---------------------------------------------------------------------------


def ar_triangle(m, maxdeg=None):
    """The AR connecting morphism psi: M -> M[1] and a representative of the
    middle term.

    The translation is the identity here (surfaces: tau = [d-2] with d = 2),
    so the target of psi is the shift.  psi spans the socle: it is nonzero
    and kills the radical of End(M).  Returns (psi, L_raw, degenerate) where
    L_raw = shift(cone(psi)) and ``degenerate`` flags rad End(M) = 0.
    """
    if not m.reduced_entries:
        raise PreconditionViolated("AR triangle construction requires reduced entries")
    rad = radical_space(m, m, maxdeg=maxdeg)
    sm = shift(m)
    hs = hom_space(m, sm, maxdeg=maxdeg)
    if hs.dim == 0:
        raise SocleEmpty("Hom(M, M[1]) vanishes; input is contractible or invalid")
    field = m.ctx.field
    rows = []
    for phi in rad.basis:
        # block C_i: column j holds the coordinates of psi_j after phi
        cols = [coordinates(compose(hs.basis[j], phi), hs) for j in range(hs.dim)]
        for r in range(hs.dim):
            rows.append([cols[j][r] for j in range(hs.dim)])
    degenerate = not rows
    if degenerate:
        # rad End(M) = 0: the kernel of an empty stack is everything
        lam = [field.one] + [field.zero] * (hs.dim - 1)
    else:
        stacked = KMatrix(field, rows, cols=hs.dim)
        kernel = stacked.kernel_basis()
        if not kernel:
            raise SocleEmpty("stacked pairing matrix has trivial kernel")
        lam = kernel[0]
    psi = Morphism.zero(m, sm)
    for c, base in zip(lam, hs.basis):
        if c != 0:
            psi = psi + base.scale(c)
    if is_null_homotopic(psi, maxdeg=maxdeg) is not None:
        raise SocleEmpty("socle candidate is null-homotopic")
    l_raw = shift(cone(psi))
    return psi, l_raw, degenerate


def _pairing_matrix(m, e, maxdeg=None, fwd=None, bwd=None):
    """Scalar parts of all pairings Hom(M,E) x Hom(E,M) -> End(M)/rad."""
    fwd = hom_space(m, e, maxdeg=maxdeg) if fwd is None else fwd
    bwd = hom_space(e, m, maxdeg=maxdeg) if bwd is None else bwd
    field = m.ctx.field
    data = []
    for phi in fwd.basis:
        row = []
        for psi in bwd.basis:
            row.append(eigenvalue_of(compose(psi, phi)))
        data.append(row)
    return fwd, bwd, KMatrix(field, data, cols=bwd.dim)


def multiplicity(m_indec, e, maxdeg=None, _pairing=None):
    """Krull-Schmidt multiplicity of an indecomposable reduced M inside E,
    as the rank of the scalar pairing matrix between Hom(M,E) and Hom(E,M)."""
    if not m_indec.reduced_entries:
        raise PreconditionViolated("multiplicity requires a reduced indecomposable")
    if m_indec.f != e.f:
        raise MixedHypersurface("multiplicity requires the same polynomial")
    if e.size == 0:
        return 0
    if _pairing is None:
        _pairing = _pairing_matrix(m_indec, e, maxdeg=maxdeg)
    _, _, p = _pairing
    return p.rank()


def split_summand(m_indec, e, maxdeg=None, verify=True):
    """A representative of a complement of M inside E.

    Finds a basis pair whose pairing scalar is a unit (it exists whenever the
    multiplicity is positive, End(M) being local) and returns the cone of the
    resulting splitting monomorphism."""
    pairing = _pairing_matrix(m_indec, e, maxdeg=maxdeg)
    fwd, bwd, p = pairing
    before = p.rank()
    if before == 0:
        raise NotASummand("object has multiplicity zero in the target")
    found = None
    for a in range(fwd.dim):
        for b in range(bwd.dim):
            if p.data[a][b] != 0:
                found = (a, b)
                break
        if found:
            break
    phi = fwd.basis[found[0]]
    complement = cone(phi)
    if verify and multiplicity(m_indec, complement, maxdeg=maxdeg) != before - 1:
        raise AssertionError("complement does not drop the multiplicity by one")
    return complement


def decompose(e, candidates, maxdeg=None, dims=None):
    """Multiplicities of the candidate indecomposables inside E, with the
    dimension consistency check dim Hom(E, M_j) = sum_i c_i dim Hom(M_i, M_j).

    ``dims``: optional precomputed matrix of dim Hom(M_i, M_j).
    Raises UnrecognizedSummand when E contains anything outside candidates.
    """
    t = len(candidates)
    counts = []
    bwd_dims = []
    for mi in candidates:
        if not mi.reduced_entries:
            raise PreconditionViolated("candidates must be reduced indecomposables")
        fwd, bwd, p = _pairing_matrix(mi, e, maxdeg=maxdeg)
        counts.append(p.rank())
        bwd_dims.append(bwd.dim)
    if dims is None:
        dims = [
            [hom_dim(candidates[i], candidates[j], maxdeg=maxdeg) for j in range(t)]
            for i in range(t)
        ]
    for j in range(t):
        rhs = sum(counts[i] * dims[i][j] for i in range(t))
        if bwd_dims[j] != rhs:
            raise UnrecognizedSummand(
                f"dimension check failed against candidate {j}: {bwd_dims[j]} != {rhs}"
            )
    return counts


# ---------------------------------------------------------------------------
# cokernel presentations and ranks
# ---------------------------------------------------------------------------


class CokerPresentation:
    """Generators of Coker(A, B) as a submodule of R^n, R = S/(f)."""

    __slots__ = ("ambient_rank", "generators", "variant", "scalar")

    def __init__(self, ambient_rank, generators, variant, scalar):
        self.ambient_rank = ambient_rank
        self.generators = generators
        self.variant = variant
        self.scalar = scalar


def coker_presentation(m, variant=None):
    """Half-size presentation of the cokernel module.

    Variant 1 requires the lower-right half block of A to be g I_n (g != 0)
    and takes the first n rows of B as generator columns; variant 2 mirrors
    with the upper-left block and the last n rows.  A 1x1 factorization (g, f/g)
    is presented by the single entry of B.
    """
    a, b = m.A, m.B
    if m.size == 1:
        return CokerPresentation(1, [[b.entries[0][0]]], 1, a.entries[0][0])
    if m.size % 2 != 0:
        raise NoScalarBlock("size is odd; no half-size scalar block")
    n = m.size // 2

    def block_scalar(rows, cols):
        g = a.entries[rows[0]][cols[0]]
        if g.is_zero():
            return None
        for i, r in enumerate(rows):
            for j, c in enumerate(cols):
                want = g if i == j else None
                e = a.entries[r][c]
                if want is None:
                    if not e.is_zero():
                        return None
                elif e != g:
                    return None
        return g

    lower = block_scalar(range(n, 2 * n), range(n, 2 * n))
    upper = block_scalar(range(n), range(n))
    if variant == 1 or (variant is None and lower is not None):
        if lower is None:
            raise NoScalarBlock("lower-right block is not a nonzero scalar block")
        rows = range(n)
        g = lower
        variant = 1
    elif variant == 2 or (variant is None and upper is not None):
        if upper is None:
            raise NoScalarBlock("upper-left block is not a nonzero scalar block")
        rows = range(n, 2 * n)
        g = upper
        variant = 2
    else:
        raise NoScalarBlock("neither half block of A is a nonzero scalar block")
    gens = [[b.entries[r][c] for r in rows] for c in range(2 * n)]
    return CokerPresentation(n, gens, variant, g)


def mcm_rank(m, maxdeg=None):
    """Rank over Frac(S/f) of the cokernel module: size minus the largest t
    such that some t x t minor of A avoids the ideal (f)."""
    if m.size == 0:
        return 0
    from .groebner import ideal as make_ideal

    f_ideal = make_ideal([m.f])
    groebner_basis(f_ideal, maxdeg=maxdeg)

    def minor_nonzero(t):
        for rows in combinations(range(m.size), t):
            for cols in combinations(range(m.size), t):
                d = m.A.submatrix(rows, cols).det_bareiss()
                if d.is_zero():
                    continue
                if not normal_form(FreeVector.from_polys([d]), f_ideal).is_zero():
                    return True
        return False

    rank = 0
    for t in range(1, m.size + 1):
        if minor_nonzero(t):
            rank = t
        else:
            break
    return m.size - rank
