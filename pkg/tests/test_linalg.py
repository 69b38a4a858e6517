import random

import pytest

from mfkit.errors import NotScalarPlusNilpotent
from mfkit.fields import Field
from mfkit.linalg import KMatrix, kernel_basis, unique_eigenvalue


def test_kernel_identity():
    m = KMatrix.identity(Field.rationals(), 3)
    assert kernel_basis(m) == []


def test_kernel_zero_matrix():
    m = KMatrix.zeros(Field.rationals(), 2, 2)
    basis = kernel_basis(m)
    assert len(basis) == 2


def test_kernel_f2_hand_check():
    f2 = Field.prime(2)
    m = KMatrix(f2, [[1, 1], [1, 1]])
    basis = kernel_basis(m)
    assert basis == [[1, 1]]


def test_kernel_vectors_annihilated(rng):
    f5 = Field.prime(5)
    for _ in range(20):
        data = [[rng.randrange(5) for _ in range(4)] for _ in range(3)]
        m = KMatrix(f5, data)
        for v in kernel_basis(m):
            assert all(c == 0 for c in m.mul_vector(v))
        assert m.rank() + len(kernel_basis(m)) == 4


def test_solve_and_det():
    qq = Field.rationals()
    from fractions import Fraction

    m = KMatrix(qq, [[Fraction(2), Fraction(1)], [Fraction(1), Fraction(3)]])
    x = m.solve([Fraction(5), Fraction(10)])
    assert m.mul_vector(x) == [Fraction(5), Fraction(10)]
    assert m.det() == Fraction(5)
    singular = KMatrix(qq, [[Fraction(1), Fraction(2)], [Fraction(2), Fraction(4)]])
    assert singular.det() == 0
    assert singular.solve([Fraction(1), Fraction(0)]) is None


def test_unique_eigenvalue_identity():
    for field in (Field.rationals(), Field.prime(5), Field.prime(2)):
        m = KMatrix.identity(field, 4)
        assert unique_eigenvalue(m) == field.one


def test_unique_eigenvalue_unipotent_f2():
    f2 = Field.prime(2)
    m = KMatrix(f2, [[1, 1], [0, 1]])
    assert unique_eigenvalue(m) == 1


def test_unique_eigenvalue_rejects_two_eigenvalues():
    f3 = Field.prime(3)
    m = KMatrix(f3, [[0, 1], [1, 0]])  # eigenvalues +-1
    with pytest.raises(NotScalarPlusNilpotent):
        unique_eigenvalue(m)
    qq = Field.rationals()
    from fractions import Fraction

    m2 = KMatrix(qq, [[Fraction(1), Fraction(0)], [Fraction(0), Fraction(2)]])
    with pytest.raises(NotScalarPlusNilpotent):
        unique_eigenvalue(m2)


def test_trace_and_power_methods_agree(rng):
    # char p with p not dividing the size: trace/size must match the power method
    f5 = Field.prime(5)
    for _ in range(25):
        n = rng.choice([2, 3, 4])  # sizes coprime-friendly with 5
        lam = rng.randrange(5)
        nil = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(i + 1, n):
                nil[i][j] = rng.randrange(5)
        m = KMatrix(f5, [[(lam if i == j else 0) + nil[i][j] for j in range(n)] for i in range(n)])
        lam_power = unique_eigenvalue(m)
        lam_trace = f5.div(m.trace(), f5.from_int(n))
        assert lam_power == lam == lam_trace
