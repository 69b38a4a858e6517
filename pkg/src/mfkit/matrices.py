"""Dense matrices with polynomial entries: products, Kronecker products,
row-vectorization, constant parts, and fraction-free determinants."""

from __future__ import annotations

from .linalg import KMatrix
from .poly import Poly


class PolyMatrix:
    """Dense matrix over a polynomial ring."""

    __slots__ = ("ctx", "rows", "cols", "entries")

    def __init__(self, ctx, entries, cols=None):
        self.ctx = ctx
        self.entries = [list(r) for r in entries]
        self.rows = len(self.entries)
        if self.rows:
            self.cols = len(self.entries[0])
            if any(len(r) != self.cols for r in self.entries):
                raise ValueError("ragged rows")
        else:
            self.cols = 0 if cols is None else cols

    @staticmethod
    def from_strings(ctx, grid):
        return PolyMatrix(ctx, [[ctx.parse(s) for s in row] for row in grid])

    @staticmethod
    def zeros(ctx, rows, cols):
        return PolyMatrix(ctx, [[ctx.zero() for _ in range(cols)] for _ in range(rows)], cols=cols)

    @staticmethod
    def identity(ctx, n, scale=None):
        m = PolyMatrix.zeros(ctx, n, n)
        diag = ctx.one() if scale is None else scale
        for i in range(n):
            m.entries[i][i] = diag
        return m

    def __getitem__(self, ij):
        return self.entries[ij[0]][ij[1]]

    def __eq__(self, other):
        return (
            isinstance(other, PolyMatrix)
            and self.ctx == other.ctx
            and self.rows == other.rows
            and self.cols == other.cols
            and self.entries == other.entries
        )

    def __repr__(self):
        body = "; ".join(", ".join(str(e) for e in row) for row in self.entries)
        return f"PolyMatrix[{body}]"

    def is_zero(self):
        return all(e.is_zero() for row in self.entries for e in row)

    def transpose(self):
        return PolyMatrix(
            self.ctx,
            [[self.entries[i][j] for i in range(self.rows)] for j in range(self.cols)],
            cols=self.rows,
        )

    def __add__(self, other):
        return PolyMatrix(
            self.ctx,
            [[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.entries, other.entries)],
            cols=self.cols,
        )

    def __sub__(self, other):
        return PolyMatrix(
            self.ctx,
            [[a - b for a, b in zip(r1, r2)] for r1, r2 in zip(self.entries, other.entries)],
            cols=self.cols,
        )

    def __neg__(self):
        return PolyMatrix(self.ctx, [[-a for a in r] for r in self.entries], cols=self.cols)

    def scale(self, p):
        if isinstance(p, Poly):
            return PolyMatrix(self.ctx, [[a * p for a in r] for r in self.entries], cols=self.cols)
        return PolyMatrix(self.ctx, [[a.scale(p) for a in r] for r in self.entries], cols=self.cols)

    def __mul__(self, other):
        if not isinstance(other, PolyMatrix):
            return self.scale(other)
        if self.cols != other.rows:
            raise ValueError("dimension mismatch")
        zero = self.ctx.zero()
        out = []
        for i in range(self.rows):
            row = self.entries[i]
            orow = []
            for j in range(other.cols):
                s = zero
                for k in range(self.cols):
                    a = row[k]
                    b = other.entries[k][j]
                    if a.terms and b.terms:
                        s = s + a * b
                orow.append(s)
            out.append(orow)
        return PolyMatrix(self.ctx, out, cols=other.cols)

    def map_entries(self, fn):
        return PolyMatrix(self.ctx, [[fn(e) for e in row] for row in self.entries], cols=self.cols)

    def submatrix(self, row_idx, col_idx):
        return PolyMatrix(
            self.ctx,
            [[self.entries[i][j] for j in col_idx] for i in row_idx],
            cols=len(col_idx),
        )

    def has_constant_terms(self):
        return any(e.constant_coeff() != 0 for row in self.entries for e in row)

    def det_bareiss(self):
        """Fraction-free determinant over the polynomial ring."""
        if self.rows != self.cols:
            raise ValueError("determinant of a non-square matrix")
        n = self.rows
        if n == 0:
            return self.ctx.one()
        m = [row[:] for row in self.entries]
        sign = 1
        prev = self.ctx.one()
        for k in range(n - 1):
            if m[k][k].is_zero():
                pr = next((i for i in range(k + 1, n) if not m[i][k].is_zero()), None)
                if pr is None:
                    return self.ctx.zero()
                m[k], m[pr] = m[pr], m[k]
                sign = -sign
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    num = m[k][k] * m[i][j] - m[i][k] * m[k][j]
                    m[i][j] = num.divmod_exact(prev)
            prev = m[k][k]
        d = m[n - 1][n - 1]
        return -d if sign < 0 else d


def constant_part(x):
    """Entry-wise constant coefficients, i.e. the matrix evaluated at the origin."""
    F = x.ctx.field
    return KMatrix(F, [[e.constant_coeff() for e in row] for row in x.entries], cols=x.cols)


def kronecker(a, b):
    """Block matrix (a_ij * B), an (m p) x (n q) polynomial matrix."""
    out = PolyMatrix.zeros(a.ctx, a.rows * b.rows, a.cols * b.cols)
    for i in range(a.rows):
        for j in range(a.cols):
            aij = a.entries[i][j]
            if aij.is_zero():
                continue
            for k in range(b.rows):
                for l in range(b.cols):
                    out.entries[i * b.rows + k][j * b.cols + l] = aij * b.entries[k][l]
    return out


def vectorize(x):
    """Rows of the matrix concatenated in order; satisfies
    v(P X Q) = (P tensor Q^T) v(X) for all conformable P, Q."""
    return [e for row in x.entries for e in row]


def hstack(blocks):
    rows = blocks[0].rows
    out = []
    for i in range(rows):
        row = []
        for b in blocks:
            row.extend(b.entries[i])
        out.append(row)
    return PolyMatrix(blocks[0].ctx, out, cols=sum(b.cols for b in blocks))


def vstack(blocks):
    out = []
    for b in blocks:
        out.extend(row[:] for row in b.entries)
    return PolyMatrix(blocks[0].ctx, out, cols=blocks[0].cols)


def block_diag(blocks, ctx=None):
    ctx = blocks[0].ctx if blocks else ctx
    rows = sum(b.rows for b in blocks)
    cols = sum(b.cols for b in blocks)
    out = PolyMatrix.zeros(ctx, rows, cols)
    r = c = 0
    for b in blocks:
        for i in range(b.rows):
            for j in range(b.cols):
                out.entries[r + i][c + j] = b.entries[i][j]
        r += b.rows
        c += b.cols
    return out
