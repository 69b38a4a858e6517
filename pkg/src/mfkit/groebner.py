"""Groebner bases for submodules of free modules S^n over S = K[x_1..x_k].

The module order is term-over-position degrevlex with lower component index
winning ties; elimination variants (a dominant block of components) drive the
syzygy and colon computations.  Internally every module term (component,
monomial) is packed into a single integer whose numeric order realises the
term order, so the hot loops are plain dict arithmetic on int keys.

All functions are pure; :class:`Submodule` caches its (canonical, reduced)
Groebner basis, and the cache write is idempotent so concurrent readers are
safe.
"""

from __future__ import annotations

import os

from .errors import DegreeGuardExceeded, NotZeroDimensional
from .poly import Poly, drl_key, mono_divides, mono_lcm

DEFAULT_MAXDEG = 64

_EXP_BITS = 16
_B = 1 << _EXP_BITS
_COMP_BITS = 20
_MAXCOMP = 1 << _COMP_BITS
_DEG_BITS = 24


def _maxdeg_default():
    raw = os.environ.get("MFKIT_GB_MAXDEG", "")
    return int(raw) if raw else DEFAULT_MAXDEG


def term_offset(nvars, mono):
    """Additive key shift realising multiplication by a monomial."""
    code = 0
    for i, e in enumerate(mono):
        code |= e << (_EXP_BITS * i)
    return (sum(mono) << (_EXP_BITS * nvars + _COMP_BITS)) - (code << _COMP_BITS)


class TermCoder:
    """Packs (component, monomial) into one int; larger int = larger term."""

    __slots__ = ("nvars", "rank", "main_rank", "_base_code")

    def __init__(self, nvars, rank, main_rank=None):
        if rank >= _MAXCOMP:
            raise ValueError("module rank too large")
        self.nvars = nvars
        self.rank = rank
        self.main_rank = rank if main_rank is None else main_rank
        code = 0
        for i in range(nvars):
            code |= (_B - 1) << (_EXP_BITS * i)
        self._base_code = code

    def key(self, comp, mono):
        block = 1 if comp < self.main_rank else 0
        code = self._base_code
        for i, e in enumerate(mono):
            code -= e << (_EXP_BITS * i)
        head = ((block << _DEG_BITS) | sum(mono)) << (_EXP_BITS * self.nvars)
        return ((head | code) << _COMP_BITS) | (_MAXCOMP - 1 - comp)

    def decode(self, key):
        comp = _MAXCOMP - 1 - (key & (_MAXCOMP - 1))
        rest = key >> _COMP_BITS
        mono = tuple(
            (_B - 1) - ((rest >> (_EXP_BITS * i)) & (_B - 1)) for i in range(self.nvars)
        )
        return comp, mono

    def degree(self, key):
        return (key >> (_COMP_BITS + _EXP_BITS * self.nvars)) & ((1 << _DEG_BITS) - 1)


class FreeVector:
    """Element of a free module S^n, stored as {(component, monomial): coeff}."""

    __slots__ = ("ctx", "rank", "terms")

    def __init__(self, ctx, rank, terms=None):
        self.ctx = ctx
        self.rank = rank
        self.terms = {} if terms is None else terms

    @staticmethod
    def from_polys(polys, rank=None):
        ctx = polys[0].ctx
        rank = len(polys) if rank is None else rank
        terms = {}
        for c, p in enumerate(polys):
            for m, a in p.terms.items():
                terms[(c, m)] = a
        return FreeVector(ctx, rank, terms)

    def component(self, i):
        return Poly(self.ctx, {m: a for (c, m), a in self.terms.items() if c == i})

    def components(self):
        return [self.component(i) for i in range(self.rank)]

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        return (
            isinstance(other, FreeVector)
            and self.ctx == other.ctx
            and self.rank == other.rank
            and self.terms == other.terms
        )

    def __add__(self, other):
        F = self.ctx.field
        out = dict(self.terms)
        for k, c in other.terms.items():
            s = F.add(out.get(k, F.zero), c)
            if s == 0:
                out.pop(k, None)
            else:
                out[k] = s
        return FreeVector(self.ctx, self.rank, out)

    def __sub__(self, other):
        F = self.ctx.field
        out = dict(self.terms)
        for k, c in other.terms.items():
            s = F.sub(out.get(k, F.zero), c)
            if s == 0:
                out.pop(k, None)
            else:
                out[k] = s
        return FreeVector(self.ctx, self.rank, out)

    def scale(self, c):
        F = self.ctx.field
        if c == 0:
            return FreeVector(self.ctx, self.rank, {})
        return FreeVector(self.ctx, self.rank, {k: F.mul(a, c) for k, a in self.terms.items()})

    def mul_poly(self, p):
        F = self.ctx.field
        out = {}
        for (c, m), a in self.terms.items():
            for m2, b in p.terms.items():
                k = (c, tuple(e1 + e2 for e1, e2 in zip(m, m2)))
                s = F.add(out.get(k, F.zero), F.mul(a, b))
                if s == 0:
                    out.pop(k, None)
                else:
                    out[k] = s
        return FreeVector(self.ctx, self.rank, out)

    def leading_term(self):
        """((component, monomial), coeff) maximal in the module order."""
        if not self.terms:
            return None
        best = max(self.terms, key=lambda k: (drl_key(k[1]), -k[0]))
        return best, self.terms[best]

    def __str__(self):
        if not self.terms:
            return "(" + ", ".join("0" for _ in range(self.rank)) + ")"
        return "(" + ", ".join(str(c) for c in self.components()) + ")"

    def __repr__(self):
        return f"FreeVector{self}"


class Submodule:
    """Submodule of S^n given by generators, with a cached reduced GB."""

    __slots__ = ("ctx", "rank", "generators", "_gb")

    def __init__(self, ctx, rank, generators):
        self.ctx = ctx
        self.rank = rank
        self.generators = tuple(generators)
        for g in self.generators:
            if g.rank != rank:
                raise ValueError("generator rank mismatch")
        self._gb = None

    @staticmethod
    def from_columns(matrix):
        """Submodule of S^rows spanned by the columns of a PolyMatrix."""
        cols = [
            FreeVector.from_polys([matrix.entries[i][j] for i in range(matrix.rows)])
            for j in range(matrix.cols)
        ]
        return Submodule(matrix.ctx, matrix.rows, cols)

    @property
    def gb(self):
        if self._gb is None:
            raise ValueError("Groebner basis not computed; call groebner_basis first")
        return self._gb

    def has_gb(self):
        return self._gb is not None


def ideal(polys):
    """Rank-1 submodule (an ideal of S)."""
    ctx = polys[0].ctx
    return Submodule(ctx, 1, [FreeVector.from_polys([p]) for p in polys if not p.is_zero()])


# ---------------------------------------------------------------------------
# engine
# ---------------------------------------------------------------------------


class _Element:
    __slots__ = ("vec", "tail", "ltkey", "comp", "mono")

    def __init__(self, vec, tail, ltkey, comp, mono):
        self.vec = vec
        self.tail = tail
        self.ltkey = ltkey
        self.comp = comp
        self.mono = mono


class _Engine:
    """Buchberger with normal selection and chain-criterion pair pruning.

    ``track_tails`` mirrors every operation into a lift vector per element, so
    each basis element knows its expression in the input generators.
    """

    def __init__(self, coder, field, maxdeg, track_tails=False):
        self.coder = coder
        self.field = field
        self.maxdeg = maxdeg
        self.track_tails = track_tails
        self.G = []
        self.by_comp = {}
        self.pairs = {}
        p = field.p if field.kind == "prime" else None
        self._p = p

    # coefficient kernels ---------------------------------------------------

    def _axpy(self, dst, src, c, off, skip_key=None):
        """dst -= c * x^u * src, where off encodes x^u."""
        p = self._p
        if p is not None:
            for k, a in src.items():
                if k == skip_key:
                    continue
                kk = k + off
                v = (dst.get(kk, 0) - c * a) % p
                if v:
                    dst[kk] = v
                else:
                    dst.pop(kk, None)
        else:
            for k, a in src.items():
                if k == skip_key:
                    continue
                kk = k + off
                v = dst.get(kk, 0) - c * a
                if v:
                    dst[kk] = v
                else:
                    dst.pop(kk, None)

    def _scale(self, vec, c):
        p = self._p
        if p is not None:
            return {k: (a * c) % p for k, a in vec.items()}
        return {k: a * c for k, a in vec.items()}

    # reduction ---------------------------------------------------------------

    def reduce_full(self, vec, tail=None):
        """Full normal form; mutates and consumes ``vec``.  Returns (nf, tail)."""
        coder = self.coder
        nvars = coder.nvars
        out = {}
        while vec:
            k = max(vec)
            c = vec.pop(k)
            comp, mono = coder.decode(k)
            red = None
            for gi in self.by_comp.get(comp, ()):
                g = self.G[gi]
                gm = g.mono
                ok = True
                for a, b in zip(gm, mono):
                    if a > b:
                        ok = False
                        break
                if ok:
                    red = g
                    break
            if red is None:
                out[k] = c
                continue
            off = term_offset(nvars, tuple(b - a for a, b in zip(red.mono, mono)))
            self._axpy(vec, red.vec, c, off, skip_key=red.ltkey)
            if tail is not None and red.tail:
                self._axpy(tail, red.tail, c, off)
        return out, tail

    # pair bookkeeping ----------------------------------------------------------

    def _add_element(self, vec, tail):
        """Insert a (nonzero, already fully reduced) vector, updating pairs."""
        coder = self.coder
        ltkey = max(vec)
        comp, mono = coder.decode(ltkey)
        if sum(mono) > self.maxdeg:
            raise DegreeGuardExceeded(
                f"leading term degree {sum(mono)} exceeds cap {self.maxdeg}"
            )
        c = vec[ltkey]
        if c != self.field.one:
            inv = self.field.inv(c)
            vec = self._scale(vec, inv)
            if tail is not None:
                tail = self._scale(tail, inv)
        el = _Element(vec, tail, ltkey, comp, mono)
        t = len(self.G)

        # new candidate pairs against same-component elements
        cand = []
        for gi in self.by_comp.get(comp, ()):
            g = self.G[gi]
            cand.append((mono_lcm(mono, g.mono), gi))

        # chain criteria (Gebauer-Moeller M and F); the coprime-product
        # criterion is invalid over modules and deliberately absent
        keep = []
        for lcm1, gi in cand:
            redundant = False
            for lcm2, gj in cand:
                if gj == gi:
                    continue
                if lcm2 != lcm1 and mono_divides(lcm2, lcm1):
                    redundant = True
                    break
            if not redundant:
                keep.append((lcm1, gi))
        seen = {}
        for lcm1, gi in keep:
            if lcm1 not in seen:
                seen[lcm1] = gi
        kept = [(lcm1, gi) for lcm1, gi in keep if seen[lcm1] == gi]

        # B criterion against existing pairs
        for (i, j) in list(self.pairs):
            gi, gj = self.G[i], self.G[j]
            if gi.comp != comp:
                continue
            lcm_ij = self.pairs[(i, j)]
            if (
                mono_divides(mono, lcm_ij)
                and mono_lcm(mono, gi.mono) != lcm_ij
                and mono_lcm(mono, gj.mono) != lcm_ij
            ):
                del self.pairs[(i, j)]

        self.G.append(el)
        self.by_comp.setdefault(comp, []).append(t)
        for lcm1, gi in kept:
            self.pairs[(gi, t)] = lcm1

    def _spair(self, i, j):
        f, g = self.G[i], self.G[j]
        lcm = mono_lcm(f.mono, g.mono)
        nvars = self.coder.nvars
        off_f = term_offset(nvars, tuple(b - a for a, b in zip(f.mono, lcm)))
        off_g = term_offset(nvars, tuple(b - a for a, b in zip(g.mono, lcm)))
        vec = {}
        self._axpy(vec, f.vec, self.field.neg(self.field.one), off_f)
        self._axpy(vec, g.vec, self.field.one, off_g)
        tail = None
        if self.track_tails:
            tail = {}
            if f.tail:
                self._axpy(tail, f.tail, self.field.neg(self.field.one), off_f)
            if g.tail:
                self._axpy(tail, g.tail, self.field.one, off_g)
        return vec, tail

    def run(self, vectors, tails=None):
        """Compute the GB of the given encoded vectors (with optional tails)."""
        order = sorted(range(len(vectors)), key=lambda i: max(vectors[i]) if vectors[i] else -1)
        for i in order:
            vec = dict(vectors[i])
            tail = dict(tails[i]) if tails is not None else ({} if self.track_tails else None)
            nf, tail = self.reduce_full(vec, tail)
            if nf:
                self._add_element(nf, tail)
        while self.pairs:
            (i, j) = min(
                self.pairs,
                key=lambda ij: (self.coder.key(self.G[ij[0]].comp, self.pairs[ij]), ij),
            )
            del self.pairs[(i, j)]
            vec, tail = self._spair(i, j)
            nf, tail = self.reduce_full(vec, tail)
            if nf:
                self._add_element(nf, tail)
        return self._reduced()

    def _reduced(self):
        """Canonical reduced basis: minimal leading terms, fully tail-reduced,
        sorted ascending by leading term."""
        order = sorted(range(len(self.G)), key=lambda i: self.G[i].ltkey)
        kept = []
        for i in order:
            g = self.G[i]
            if any(
                k.comp == g.comp and mono_divides(k.mono, g.mono) for k in kept
            ):
                continue
            kept.append(g)
        self.G = kept
        self.by_comp = {}
        for idx, g in enumerate(self.G):
            self.by_comp.setdefault(g.comp, []).append(idx)
        final = []
        for idx, g in enumerate(self.G):
            save = self.by_comp
            self.by_comp = {
                c: [i for i in lst if i != idx] for c, lst in save.items()
            }
            vec = dict(g.vec)
            tail = dict(g.tail) if g.tail is not None else None
            nf, tail = self.reduce_full(vec, tail)
            self.by_comp = save
            final.append(_Element(nf, tail, g.ltkey, g.comp, g.mono))
        for idx, g in enumerate(final):
            self.G[idx] = g
        return self.G


# ---------------------------------------------------------------------------
# encoding helpers
# ---------------------------------------------------------------------------


def _encode(coder, fv, comp_shift=0):
    return {coder.key(c + comp_shift, m): a for (c, m), a in fv.terms.items()}

def _decode(coder, ctx, rank, vec, comp_shift=0, keep=None):
    terms = {}
    for k, a in vec.items():
        c, m = coder.decode(k)
        c -= comp_shift
        if keep is not None and (c < keep[0] or c >= keep[1]):
            continue
        terms[(c, m)] = a
    return FreeVector(ctx, rank, terms)


# ---------------------------------------------------------------------------
# public operations
# ---------------------------------------------------------------------------


def groebner_basis(sub, maxdeg=None):
    """Attach (and return) the reduced, monic, deterministic GB of a submodule."""
    if sub._gb is None:
        maxdeg = _maxdeg_default() if maxdeg is None else maxdeg
        coder = TermCoder(sub.ctx.nvars, sub.rank)
        eng = _Engine(coder, sub.ctx.field, maxdeg)
        basis = eng.run([_encode(coder, g) for g in sub.generators])
        sub._gb = tuple(
            _decode(coder, sub.ctx, sub.rank, g.vec) for g in basis
        )
    return sub


def normal_form(v, sub, maxdeg=None):
    """Full normal form of v against the (cached) GB of the submodule."""
    groebner_basis(sub, maxdeg=maxdeg)
    coder = TermCoder(sub.ctx.nvars, sub.rank)
    eng = _Engine(coder, sub.ctx.field, _maxdeg_default() if maxdeg is None else maxdeg)
    for g in sub._gb:
        vec = _encode(coder, g)
        ltkey = max(vec)
        comp, mono = coder.decode(ltkey)
        eng.G.append(_Element(vec, None, ltkey, comp, mono))
        eng.by_comp.setdefault(comp, []).append(len(eng.G) - 1)
    nf, _ = eng.reduce_full(_encode(coder, v))
    return _decode(coder, sub.ctx, sub.rank, nf)


class LiftSolver:
    """Reusable membership-with-witness solver for a fixed generator list.

    Computes one Groebner basis with division lifts; every subsequent
    :meth:`solve` is a single normal-form pass.
    """

    def __init__(self, gens, maxdeg=None):
        self.gens = list(gens)
        self.ctx = gens[0].ctx
        self.rank = gens[0].rank
        self.ngens = len(gens)
        maxdeg = _maxdeg_default() if maxdeg is None else maxdeg
        self.coder = TermCoder(self.ctx.nvars, self.rank)
        self.tail_coder = TermCoder(self.ctx.nvars, self.ngens)
        self.engine = _Engine(self.coder, self.ctx.field, maxdeg, track_tails=True)
        vectors = [_encode(self.coder, g) for g in self.gens]
        tails = [
            {self.tail_coder.key(i, (0,) * self.ctx.nvars): self.ctx.field.one}
            for i in range(self.ngens)
        ]
        self.engine.run(vectors, tails)

    def solve(self, v):
        """Polynomials h with sum(h_i * gens_i) = v, or None if v is outside."""
        nf, tail = self.engine.reduce_full(_encode(self.coder, v), {})
        if nf:
            return None
        # the reduction invariant is v = nf - tail . gens, so negate
        lift = _decode(self.tail_coder, self.ctx, self.ngens, tail).scale(
            self.ctx.field.neg(self.ctx.field.one)
        )
        return lift.components()


def member_with_lift(v, gens, maxdeg=None, solver=None, verify=True):
    """Explicit membership: coefficients h with sum(h_i gens_i) = v, else None.

    The returned witness is re-verified by exact multiplication.
    """
    solver = LiftSolver(gens, maxdeg=maxdeg) if solver is None else solver
    h = solver.solve(v)
    if h is None:
        return None
    if verify:
        acc = FreeVector(v.ctx, v.rank, {})
        for hi, gi in zip(h, gens):
            acc = acc + gi.mul_poly(hi)
        if acc != v:
            raise AssertionError("lift verification failed")
    return h


def _elimination_gb(main_vectors, tail_vectors, rank, ngens, ctx, maxdeg, tracked):
    """GB of the module generated by main_i + tail_i in S^(rank+tracked),
    with the first ``rank`` components dominant."""
    coder = TermCoder(ctx.nvars, rank + tracked, main_rank=rank)
    eng = _Engine(coder, ctx.field, maxdeg)
    vectors = []
    for mv, tv in zip(main_vectors, tail_vectors):
        vec = _encode(coder, mv)
        vec.update(_encode(coder, tv, comp_shift=rank))
        vectors.append(vec)
    return coder, eng.run(vectors)


def syzygies(gens, maxdeg=None, verify=True):
    """Generators of the relation module {h in S^l : sum h_i gens_i = 0}."""
    maxdeg = _maxdeg_default() if maxdeg is None else maxdeg
    ctx = gens[0].ctx
    rank = gens[0].rank
    l = len(gens)
    tails = [
        FreeVector(ctx, l, {(i, (0,) * ctx.nvars): ctx.field.one}) for i in range(l)
    ]
    coder, basis = _elimination_gb(gens, tails, rank, l, ctx, maxdeg, l)
    out = []
    for g in basis:
        if g.comp >= rank:  # leading term in the tail block => main part is zero
            fv = _decode(coder, ctx, l, g.vec, comp_shift=rank)
            out.append(fv)
    if verify:
        for h in out:
            acc = FreeVector(ctx, rank, {})
            for i, gen in enumerate(gens):
                hi = h.component(i)
                if not hi.is_zero():
                    acc = acc + gen.mul_poly(hi)
            if not acc.is_zero():
                raise AssertionError("syzygy verification failed")
    return Submodule(ctx, l, out)


def colon_module(w, v, maxdeg=None):
    """The ideal {g in S : g*v in W}, via syzygies of (v, gens of W) projected
    onto the first coordinate (only that coordinate is tracked)."""
    maxdeg = _maxdeg_default() if maxdeg is None else maxdeg
    ctx = w.ctx
    rank = w.rank
    base = list(w._gb) if w._gb is not None else list(w.generators)
    gens = [v] + base
    one = FreeVector(ctx, 1, {(0, (0,) * ctx.nvars): ctx.field.one})
    zero = FreeVector(ctx, 1, {})
    tails = [one] + [zero] * len(base)
    coder, basis = _elimination_gb(gens, tails, rank, len(gens), ctx, maxdeg, 1)
    out = []
    for g in basis:
        if g.comp >= rank:
            fv = _decode(coder, ctx, 1, g.vec, comp_shift=rank)
            if not fv.is_zero():
                out.append(fv)
    return Submodule(ctx, 1, out)


def std_monomials(sub, maxdeg=None):
    """Standard monomials of a zero-dimensional quotient S^n / W.

    Returns (monomial, component) pairs whose residues form a K-basis.
    Raises :class:`NotZeroDimensional` when for some component and variable no
    pure power of that variable occurs among the leading terms.
    """
    groebner_basis(sub, maxdeg=maxdeg)
    ctx = sub.ctx
    nvars = ctx.nvars
    lts = {}
    for g in sub.gb:
        (comp, mono), _ = g.leading_term()
        lts.setdefault(comp, []).append(mono)
    out = []
    for comp in range(sub.rank):
        monos = lts.get(comp, [])
        bounds = []
        for v in range(nvars):
            pure = [
                m[v]
                for m in monos
                if all(e == 0 for i, e in enumerate(m) if i != v)
            ]
            if not pure:
                raise NotZeroDimensional(
                    f"no pure power of variable {ctx.names[v]!r} leads in component {comp}"
                )
            bounds.append(min(pure))
        box = [()]
        for v in range(nvars):
            box = [m + (e,) for m in box for e in range(bounds[v])]
        for m in box:
            if not any(mono_divides(lt, m) for lt in monos):
                out.append((m, comp))
    out.sort(key=lambda mc: (drl_key(mc[0]), mc[1]))
    return out
