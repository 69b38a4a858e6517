import pytest

from mfkit.fields import Field
from mfkit.linalg import KMatrix
from mfkit.matrices import PolyMatrix, constant_part, kronecker, vectorize

from conftest import random_poly


def rand_matrix(ctx, rng, rows, cols):
    return PolyMatrix(
        ctx, [[random_poly(ctx, rng, max_deg=2, terms=2) for _ in range(cols)] for _ in range(rows)]
    )


def test_constant_part_no_constants(qq_ctx):
    m = PolyMatrix.from_strings(qq_ctx, [["z", "-y"], ["x", "z"]])
    assert constant_part(m).is_zero()


def test_constant_part_readoff(qq_ctx):
    m = PolyMatrix.from_strings(qq_ctx, [["1+x", "2"], ["0", "3*y"]])
    expected = KMatrix(qq_ctx.field, [[1, 2], [0, 0]])
    got = constant_part(m)
    assert [[int(c) for c in row] for row in got.data] == [[1, 2], [0, 0]]
    assert got == KMatrix(qq_ctx.field, [[e for e in row] for row in expected.data])


def test_constant_part_is_ring_map(f5_ctx, rng):
    for _ in range(15):
        p = rand_matrix(f5_ctx, rng, 3, 2)
        q = rand_matrix(f5_ctx, rng, 2, 3)
        assert constant_part(p * q) == constant_part(p) * constant_part(q)
        p2 = rand_matrix(f5_ctx, rng, 3, 2)
        assert constant_part(p + p2) == constant_part(p) + constant_part(p2)


def test_kronecker_identity_factor(qq_ctx):
    m = PolyMatrix.from_strings(qq_ctx, [["x", "y"], ["z", "1"]])
    i2 = PolyMatrix.identity(qq_ctx, 2)
    k = kronecker(i2, m)
    assert k.rows == 4 and k.cols == 4
    assert k.entries[0][0] == m.entries[0][0]
    assert k.entries[2][2] == m.entries[0][0]
    assert k.entries[0][2].is_zero()


def test_kronecker_1x1(qq_ctx):
    a = PolyMatrix.from_strings(qq_ctx, [["x"]])
    b = PolyMatrix.from_strings(qq_ctx, [["y"]])
    assert kronecker(a, b).entries[0][0] == qq_ctx.parse("x*y")


def test_kronecker_mixed_product(f5_ctx, rng):
    for _ in range(8):
        a = rand_matrix(f5_ctx, rng, 2, 2)
        c = rand_matrix(f5_ctx, rng, 2, 2)
        b = rand_matrix(f5_ctx, rng, 2, 3)
        d = rand_matrix(f5_ctx, rng, 3, 2)
        left = kronecker(a, b) * kronecker(c, d)
        right = kronecker(a * c, b * d)
        assert left == right


def test_vectorize_definition(qq_ctx):
    m = PolyMatrix.from_strings(qq_ctx, [["x", "y"], ["z", "1"]])
    v = vectorize(m)
    assert [str(p) for p in v] == ["x", "y", "z", "1"]


def test_vectorize_identity_sandwich(f5_ctx, rng):
    x = rand_matrix(f5_ctx, rng, 3, 3)
    i3 = PolyMatrix.identity(f5_ctx, 3)
    assert vectorize(i3 * x * i3) == vectorize(x)


def test_vectorize_sandwich_law(f5_ctx, rng):
    # v(P X Q) = (P kron Q^T) v(X), checked by brute-force expansion of both
    # sides on random 2x2 and 3x3 samples
    for rows, cols in ((2, 2), (3, 3), (2, 3)):
        for _ in range(6):
            p = rand_matrix(f5_ctx, rng, rows, rows)
            x = rand_matrix(f5_ctx, rng, rows, cols)
            q = rand_matrix(f5_ctx, rng, cols, cols)
            lhs = vectorize(p * x * q)
            big = kronecker(p, q.transpose())
            vx = vectorize(x)
            rhs = []
            for r in range(big.rows):
                acc = f5_ctx.zero()
                for c in range(big.cols):
                    acc = acc + big.entries[r][c] * vx[c]
                rhs.append(acc)
            assert lhs == rhs


def test_det_bareiss_matches_cofactor(qq_ctx, rng):
    for _ in range(6):
        m = rand_matrix(qq_ctx, rng, 3, 3)
        det = m.det_bareiss()
        # cofactor expansion along the first row
        def det2(a, b, c, d):
            return a * d - b * c

        e = m.entries
        cof = (
            e[0][0] * det2(e[1][1], e[1][2], e[2][1], e[2][2])
            - e[0][1] * det2(e[1][0], e[1][2], e[2][0], e[2][2])
            + e[0][2] * det2(e[1][0], e[1][1], e[2][0], e[2][1])
        )
        assert det == cof


def test_product_dimension_check(qq_ctx):
    a = PolyMatrix.zeros(qq_ctx, 2, 3)
    b = PolyMatrix.zeros(qq_ctx, 2, 3)
    with pytest.raises(ValueError):
        a * b
