import random

import pytest

from mfkit.fields import Field
from mfkit.poly import Poly, PolyContext


@pytest.fixture
def rng():
    return random.Random(20240817)


@pytest.fixture
def qq_ctx():
    return PolyContext(Field.rationals(), ("x", "y", "z"))


@pytest.fixture
def f5_ctx():
    return PolyContext(Field.prime(5), ("x", "y", "z"))


def random_poly(ctx, rng, max_deg=3, terms=4):
    """Small random polynomial with total degree bounded by max_deg."""
    out = {}
    for _ in range(terms):
        deg = rng.randint(0, max_deg)
        mono = [0] * ctx.nvars
        for _ in range(deg):
            mono[rng.randrange(ctx.nvars)] += 1
        c = ctx.field.random_element(rng)
        if c != 0:
            out[tuple(mono)] = c
    return Poly(ctx, out)
