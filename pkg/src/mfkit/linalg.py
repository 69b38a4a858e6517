"""Dense exact linear algebra over a coefficient field.

Everything is classical Gaussian elimination on lists of lists; sizes here
are small (Hom-space dimensions, pairing matrices), so clarity wins over
asymptotics.
"""

from __future__ import annotations

from .errors import NotScalarPlusNilpotent
from .fields import Field


class KMatrix:
    """Dense matrix over a :class:`Field`.  Rows are lists of field elements."""

    __slots__ = ("field", "rows", "cols", "data")

    def __init__(self, field, data, cols=None):
        self.field = field
        self.data = [list(r) for r in data]
        self.rows = len(self.data)
        if self.rows:
            self.cols = len(self.data[0])
            if any(len(r) != self.cols for r in self.data):
                raise ValueError("ragged rows")
        else:
            self.cols = 0 if cols is None else cols

    @staticmethod
    def zeros(field, rows, cols):
        z = field.zero
        return KMatrix(field, [[z] * cols for _ in range(rows)], cols=cols)

    @staticmethod
    def identity(field, n):
        m = KMatrix.zeros(field, n, n)
        for i in range(n):
            m.data[i][i] = field.one
        return m

    def copy(self):
        return KMatrix(self.field, self.data, cols=self.cols)

    def __eq__(self, other):
        return (
            isinstance(other, KMatrix)
            and self.field == other.field
            and self.rows == other.rows
            and self.cols == other.cols
            and self.data == other.data
        )

    def __repr__(self):
        return f"KMatrix({self.data})"

    def __getitem__(self, ij):
        return self.data[ij[0]][ij[1]]

    def is_zero(self):
        return all(c == 0 for row in self.data for c in row)

    def transpose(self):
        return KMatrix(
            self.field,
            [[self.data[i][j] for i in range(self.rows)] for j in range(self.cols)],
            cols=self.rows,
        )

    def __add__(self, other):
        F = self.field
        return KMatrix(
            F,
            [[F.add(a, b) for a, b in zip(r1, r2)] for r1, r2 in zip(self.data, other.data)],
            cols=self.cols,
        )

    def __sub__(self, other):
        F = self.field
        return KMatrix(
            F,
            [[F.sub(a, b) for a, b in zip(r1, r2)] for r1, r2 in zip(self.data, other.data)],
            cols=self.cols,
        )

    def __neg__(self):
        F = self.field
        return KMatrix(F, [[F.neg(a) for a in r] for r in self.data], cols=self.cols)

    def scale(self, c):
        F = self.field
        return KMatrix(F, [[F.mul(a, c) for a in r] for r in self.data], cols=self.cols)

    def __mul__(self, other):
        F = self.field
        if not isinstance(other, KMatrix):
            return self.scale(other)
        if self.cols != other.rows:
            raise ValueError("dimension mismatch")
        out = KMatrix.zeros(F, self.rows, other.cols)
        for i in range(self.rows):
            row = self.data[i]
            orow = out.data[i]
            for k in range(self.cols):
                a = row[k]
                if a == 0:
                    continue
                brow = other.data[k]
                for j in range(other.cols):
                    b = brow[j]
                    if b != 0:
                        orow[j] = F.add(orow[j], F.mul(a, b))
        return out

    def mul_vector(self, v):
        F = self.field
        return [
            _dot(F, row, v)
            for row in self.data
        ]

    def power(self, e):
        out = KMatrix.identity(self.field, self.rows)
        base = self
        while e:
            if e & 1:
                out = out * base
            e >>= 1
            if e:
                base = base * base
        return out

    def trace(self):
        F = self.field
        t = F.zero
        for i in range(self.rows):
            t = F.add(t, self.data[i][i])
        return t

    # elimination --------------------------------------------------------------

    def rref(self):
        """(reduced row echelon form, pivot column list)."""
        F = self.field
        m = [row[:] for row in self.data]
        pivots = []
        r = 0
        for c in range(self.cols):
            pr = next((i for i in range(r, self.rows) if m[i][c] != 0), None)
            if pr is None:
                continue
            m[r], m[pr] = m[pr], m[r]
            inv = F.inv(m[r][c])
            m[r] = [F.mul(x, inv) for x in m[r]]
            for i in range(self.rows):
                if i != r and m[i][c] != 0:
                    f = m[i][c]
                    m[i] = [F.sub(x, F.mul(f, y)) for x, y in zip(m[i], m[r])]
            pivots.append(c)
            r += 1
            if r == self.rows:
                break
        return KMatrix(F, m, cols=self.cols), pivots

    def rank(self):
        return len(self.rref()[1])

    def kernel_basis(self):
        """Basis of the right kernel {v : Mv = 0}, one vector per free column."""
        F = self.field
        red, pivots = self.rref()
        pivot_set = set(pivots)
        free = [c for c in range(self.cols) if c not in pivot_set]
        basis = []
        for fc in free:
            v = [F.zero] * self.cols
            v[fc] = F.one
            for r, pc in enumerate(pivots):
                v[pc] = F.neg(red.data[r][fc])
            basis.append(v)
        return basis

    def solve(self, b):
        """A particular solution of Mx = b, or None when inconsistent."""
        F = self.field
        aug = KMatrix(F, [row + [bb] for row, bb in zip(self.data, b)], cols=self.cols + 1)
        red, pivots = aug.rref()
        if self.cols in pivots:
            return None
        x = [F.zero] * self.cols
        for r, pc in enumerate(pivots):
            x[pc] = red.data[r][self.cols]
        return x

    def det(self):
        if self.rows != self.cols:
            raise ValueError("determinant of a non-square matrix")
        F = self.field
        m = [row[:] for row in self.data]
        det = F.one
        for c in range(self.cols):
            pr = next((i for i in range(c, self.rows) if m[i][c] != 0), None)
            if pr is None:
                return F.zero
            if pr != c:
                m[c], m[pr] = m[pr], m[c]
                det = F.neg(det)
            det = F.mul(det, m[c][c])
            inv = F.inv(m[c][c])
            for i in range(c + 1, self.rows):
                if m[i][c] != 0:
                    f = F.mul(m[i][c], inv)
                    m[i] = [F.sub(x, F.mul(f, y)) for x, y in zip(m[i], m[c])]
        return det

    def is_scalar(self):
        """The diagonal value if the matrix is c*I, else None."""
        if self.rows != self.cols or self.rows == 0:
            return None
        c = self.data[0][0]
        for i in range(self.rows):
            for j in range(self.cols):
                want = c if i == j else self.field.zero
                if self.data[i][j] != want:
                    return None
        return c


def _dot(F, row, v):
    s = F.zero
    for a, b in zip(row, v):
        if a != 0 and b != 0:
            s = F.add(s, F.mul(a, b))
    return s


def kernel_basis(m):
    """Basis of {v : Mv = 0}; empty exactly when M is injective."""
    return m.kernel_basis()


def unique_eigenvalue(m):
    """The unique eigenvalue of a scalar-plus-nilpotent matrix.

    Characteristic zero: trace/size, then verify (M - tI)^size = 0.
    Characteristic p over GF(q): the smallest power q' = q^e >= size forces
    M^{q'} = t*I; read t off the diagonal.  Raises
    :class:`NotScalarPlusNilpotent` when verification fails, which signals a
    decomposable object (or caller misuse).
    """
    if m.rows != m.cols:
        raise ValueError("eigenvalue of a non-square matrix")
    F = m.field
    n = m.rows
    if n == 0:
        raise NotScalarPlusNilpotent("empty matrix has no eigenvalue")
    if F.kind == "rationals":
        lam = m.trace() / n
        shifted = m - KMatrix.identity(F, n).scale(lam)
        if not shifted.power(n).is_zero():
            raise NotScalarPlusNilpotent("matrix is not scalar plus nilpotent")
        return lam
    q = F.p
    qp = 1
    while qp < n:
        qp *= q
    powered = m.power(qp)
    lam = powered.is_scalar()
    if lam is None:
        raise NotScalarPlusNilpotent("matrix power is not scalar")
    return lam
