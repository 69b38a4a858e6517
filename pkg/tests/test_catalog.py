import pytest

from mfkit.catalog import (
    SingularityType,
    catalog_all,
    catalog_mf,
    defining_poly,
    parse_spec_string,
)
from mfkit.errors import IndexOutOfRange, InvalidTypeCombination
from mfkit.matrices import PolyMatrix
from mfkit.mf import mf_verify


def test_defining_poly_a3():
    t = SingularityType("A", 3, 0, 0)
    assert defining_poly(t) == t.context().parse("z^4+x*y")


def test_defining_poly_e7_2_char2():
    t = SingularityType("E", 7, 2, 2)
    assert defining_poly(t) == t.context().parse("z^2+x^3+x*y^3+y^3*z")


def test_defining_poly_d_series():
    t = SingularityType("D", 8, 2, 3)  # 2n = 8, eps exponent n - r = 2
    assert defining_poly(t) == t.context().parse("z^2+x^2*y+x*y^4+x*y^2*z")
    t = SingularityType("D", 9, 1, 2)  # 2n + 1 = 9
    assert defining_poly(t) == t.context().parse("z^2+x^2*y+y^4*z+x*y^3*z")


def test_invalid_combinations():
    with pytest.raises(InvalidTypeCombination):
        SingularityType("E", 6, 1, 5)
    with pytest.raises(InvalidTypeCombination):
        SingularityType("E", 6, 2, 3)
    with pytest.raises(InvalidTypeCombination):
        SingularityType("E", 7, 1, 5)
    with pytest.raises(InvalidTypeCombination):
        SingularityType("E", 8, 3, 3)
    with pytest.raises(InvalidTypeCombination):
        SingularityType("A", 2, 1, 0)
    with pytest.raises(InvalidTypeCombination):
        SingularityType("D", 3, 0, 0)
    with pytest.raises(InvalidTypeCombination):
        SingularityType("D", 8, 4, 0)  # eps exponent would drop to zero
    with pytest.raises(InvalidTypeCombination):
        SingularityType("E", 9, 0, 0)
    with pytest.raises(InvalidTypeCombination):
        SingularityType("A", 1, 0, 4)  # characteristic must be prime


def test_catalog_counts():
    assert len(catalog_all(SingularityType("A", 5, 0, 0))) == 5
    assert len(catalog_all(SingularityType("D", 9, 1, 2))) == 9
    assert len(catalog_all(SingularityType("E", 8, 4, 2))) == 8


def test_index_range():
    t = SingularityType("A", 3, 0, 0)
    with pytest.raises(IndexOutOfRange):
        catalog_mf(t, 0)
    with pytest.raises(IndexOutOfRange):
        catalog_mf(t, 4)


def test_golden_a2_m1():
    t = SingularityType("A", 2, 0, 0)
    e = catalog_mf(t, 1)
    ctx = t.context()
    assert e.mf.A == PolyMatrix.from_strings(ctx, [["z^2", "-y"], ["x", "z"]])
    assert e.mf.B == PolyMatrix.from_strings(ctx, [["z", "y"], ["-x", "z^2"]])


def test_golden_d8_m2():
    # the first 4x4 block entry of the even family at co-index 0
    t = SingularityType("D", 8, 0, 0)
    e = catalog_mf(t, 2)
    ctx = t.context()
    expected_a = PolyMatrix.from_strings(
        ctx,
        [
            ["z", "0", "x*y", "y"],
            ["0", "z", "-x*y^3", "x"],
            ["-x", "y", "z", "0"],
            ["-x*y^3", "-x*y", "0", "z"],
        ],
    )
    assert e.mf.A == expected_a


def test_golden_e8_m7():
    t = SingularityType("E", 8, 0, 0)
    e = catalog_mf(t, 7)
    ctx = t.context()
    expected_a = PolyMatrix.from_strings(
        ctx,
        [
            ["z", "0", "-x^2", "-y^4"],
            ["0", "z", "-y", "x"],
            ["x", "y^4", "z", "0"],
            ["y", "-x^2", "0", "z"],
        ],
    )
    assert e.mf.A == expected_a


def test_entry_sizes():
    assert [e.mf.size for e in catalog_all(SingularityType("A", 4, 0, 0))] == [2, 2, 2, 2]
    assert [e.mf.size for e in catalog_all(SingularityType("D", 6, 0, 0))] == [2, 4, 4, 4, 2, 2]
    assert [e.mf.size for e in catalog_all(SingularityType("E", 6, 0, 0))] == [2, 4, 6, 4, 2, 4]
    assert [e.mf.size for e in catalog_all(SingularityType("E", 7, 0, 0))] == [4, 6, 8, 6, 4, 2, 4]
    assert [e.mf.size for e in catalog_all(SingularityType("E", 8, 0, 0))] == [4, 8, 12, 10, 8, 6, 4, 6]


def test_eps_zero_matches_generic_form():
    # for co-index 0 the deformed templates collapse onto the classical ones
    d0 = catalog_all(SingularityType("D", 6, 0, 3))
    for e in d0:
        assert "y^0" not in str(e.mf.A.entries)
    e6 = catalog_mf(SingularityType("E", 6, 0, 7), 1)
    assert e6.mf.A == PolyMatrix.from_strings(
        e6.type.context(), [["z", "x^2"], ["-x", "z+y^2"]]
    )


def test_all_entries_verify_and_reduced():
    specs = [
        SingularityType("A", 7, 0, 2),
        SingularityType("D", 7, 2, 5),
        SingularityType("E", 7, 3, 2),
        SingularityType("E", 8, 1, 3),
    ]
    for t in specs:
        for e in catalog_all(t):
            assert mf_verify(e.mf)
            assert e.mf.reduced_entries


def test_parse_spec_string():
    t = parse_spec_string("D8^2@2")
    assert (t.series, t.n, t.r, t.char) == ("D", 8, 2, 2)
    t = parse_spec_string("A5@0")
    assert (t.series, t.n, t.r, t.char) == ("A", 5, 0, 0)
    t = parse_spec_string("E7^1@3")
    assert (t.series, t.n, t.r, t.char) == ("E", 7, 1, 3)
    with pytest.raises(InvalidTypeCombination):
        parse_spec_string("A5")
    with pytest.raises(InvalidTypeCombination):
        parse_spec_string("X5@0")
    assert str(t) == "E7^1@3"
