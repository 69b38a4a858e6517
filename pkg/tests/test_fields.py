import random

import pytest

from mfkit.fields import Field, is_prime


def test_prime_validation():
    Field.prime(2)
    Field.prime(7919)
    with pytest.raises(ValueError):
        Field.prime(4)
    with pytest.raises(ValueError):
        Field.prime(1)
    with pytest.raises(ValueError):
        Field.prime(2**63)


def test_is_prime_small():
    primes = [2, 3, 5, 7, 11, 13, 97, 7919]
    composites = [0, 1, 4, 6, 9, 91, 7917]
    assert all(is_prime(p) for p in primes)
    assert not any(is_prime(c) for c in composites)


@pytest.mark.parametrize("field", [Field.prime(5), Field.prime(2), Field.rationals()])
def test_field_axioms_random(field):
    rng = random.Random(7)
    for _ in range(200):
        a = field.random_element(rng)
        b = field.random_element(rng)
        c = field.random_element(rng)
        assert field.add(a, field.add(b, c)) == field.add(field.add(a, b), c)
        assert field.mul(a, field.mul(b, c)) == field.mul(field.mul(a, b), c)
        assert field.mul(a, field.add(b, c)) == field.add(field.mul(a, b), field.mul(a, c))
        assert field.add(a, field.neg(a)) == field.zero
        if a != 0:
            assert field.mul(a, field.inv(a)) == field.one


def test_canonical_forms():
    f5 = Field.prime(5)
    assert f5.from_int(12) == 2
    assert f5.neg(2) == 3
    qq = Field.rationals()
    x = qq.from_fraction(4, -6)
    assert x.numerator == -2 and x.denominator == 3


def test_characteristic():
    assert Field.prime(3).characteristic == 3
    assert Field.rationals().characteristic == 0
