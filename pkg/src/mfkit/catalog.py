"""The ADE catalog: defining polynomials and the indecomposable matrix
factorizations for every encoded (series, rank, co-index, characteristic)
combination.

Matrices are generated from structured templates in the family parameters, so
every rank is produced programmatically; the factorization identity is
verified at construction.  The D and E families carry an eps flag (0 for the
classical r = 0 forms, 1 otherwise) plus, for the characteristic-2 E forms,
an extra z-linear term g.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import IndexOutOfRange, InvalidTypeCombination
from .fields import Field, is_prime
from .matrices import PolyMatrix
from .mf import MatrixFactorization
from .poly import PolyContext

VARIABLES = ("x", "y", "z")

# explicit co-index bounds per characteristic for the E series; D bounds are
# the template shape constraint 1 <= n - r encoded in valid_r
_E_COMBOS = {
    (6, 0): None,  # any characteristic
    (6, 1): {2, 3},
    (7, 0): None,
    (7, 1): {2, 3},
    (7, 2): {2},
    (7, 3): {2},
    (8, 0): None,
    (8, 1): {2, 3, 5},
    (8, 2): {2, 3},
    (8, 3): {2},
    (8, 4): {2},
}


@dataclass(frozen=True)
class SingularityType:
    """A rational double point label: series A/D/E, Dynkin rank n, Artin
    co-index r (0 = generic form), and the coefficient characteristic."""

    series: str
    n: int
    r: int = 0
    char: int = 0

    def __post_init__(self):
        if self.series not in ("A", "D", "E"):
            raise InvalidTypeCombination(f"unknown series {self.series!r}")
        if self.char != 0 and not is_prime(self.char):
            raise InvalidTypeCombination("characteristic must be 0 or prime")
        if self.series == "A":
            if self.n < 1 or self.r != 0:
                raise InvalidTypeCombination("A series requires n >= 1 and r = 0")
        elif self.series == "D":
            if self.n < 4:
                raise InvalidTypeCombination("D series requires n >= 4")
            half = self.n // 2
            if self.r < 0 or (self.r > 0 and half - self.r < 1):
                raise InvalidTypeCombination(
                    f"co-index {self.r} leaves no positive exponent in the D_{self.n} form"
                )
        else:
            allowed = _E_COMBOS.get((self.n, self.r))
            if (self.n, self.r) not in _E_COMBOS:
                raise InvalidTypeCombination(f"E_{self.n}^{self.r} is not in the catalog")
            if allowed is not None and self.char not in allowed:
                raise InvalidTypeCombination(
                    f"E_{self.n}^{self.r} is not defined in characteristic {self.char}"
                )

    @property
    def rank(self):
        return self.n

    def context(self):
        field = Field.rationals() if self.char == 0 else Field.prime(self.char)
        return PolyContext(field, VARIABLES)

    def __str__(self):
        core = f"{self.series}{self.n}"
        if self.r:
            core += f"^{self.r}"
        return f"{core}@{self.char}"


def parse_spec_string(text):
    """Parse '<series><n>[^<r>]@<char>', e.g. 'A5@0', 'D8^2@2', 'E7^1@3'."""
    body = text.strip()
    if "@" not in body:
        raise InvalidTypeCombination(f"missing '@<char>' in {text!r}")
    head, _, char_s = body.partition("@")
    r = 0
    if "^" in head:
        head, _, r_s = head.partition("^")
        r = int(r_s)
    if not head or head[0] not in "ADE":
        raise InvalidTypeCombination(f"bad series in {text!r}")
    return SingularityType(head[0], int(head[1:]), r, int(char_s))


def defining_poly(t):
    """The hypersurface polynomial of the family, over its prime field."""
    ctx = t.context()
    return ctx.parse(_poly_text(t))


def _poly_text(t):
    if t.series == "A":
        return f"z^{t.n + 1}+x*y"
    if t.series == "D":
        half = t.n // 2
        eps = f"+x*y^{half - t.r}*z" if t.r else ""
        if t.n % 2 == 0:
            return f"z^2+x^2*y+x*y^{half}" + eps
        return f"z^2+x^2*y+y^{half}*z" + eps
    if t.n == 6:
        return "z^2+x^3+y^2*z" + ("+x*y*z" if t.r else "")
    if t.n == 7:
        base = "z^2+x^3+x*y^3"
        if t.r == 0:
            return base
        if t.char == 3:
            return base + "+x^2*y^2"
        return base + "+z*" + _e7_char2_g(t.r)
    base = "z^2+x^3+y^5"
    if t.r == 0:
        return base
    if t.char == 5:
        return base + "+x*y^4"
    if t.char == 3:
        return base + ("+x^2*y^3" if t.r == 1 else "+x^2*y^2")
    return base + "+z*" + _e8_char2_g(t.r)


def _e7_char2_g(r):
    return {1: "x^2*y", 2: "y^3", 3: "x*y"}[r]


def _e8_char2_g(r):
    return {1: "x*y^3", 2: "x*y^2", 3: "y^3", 4: "x*y"}[r]


@dataclass(frozen=True)
class CatalogEntry:
    type: SingularityType
    index: int
    mf: MatrixFactorization

    @property
    def label(self):
        return f"M{self.index}"


def catalog_mf(t, i):
    """The i-th indecomposable matrix factorization of the family (1-based)."""
    if not 1 <= i <= t.n:
        raise IndexOutOfRange(f"index {i} outside 1..{t.n}")
    ctx = t.context()
    f = defining_poly(t)
    a_txt, b_txt = _entry_templates(t, i)
    a = PolyMatrix.from_strings(ctx, a_txt)
    b = PolyMatrix.from_strings(ctx, b_txt)
    mf = MatrixFactorization(f, a, b)
    if not mf.reduced_entries:
        raise AssertionError("catalog entries must have no constant terms")
    return CatalogEntry(t, i, mf)


def catalog_all(t):
    return [catalog_mf(t, i) for i in range(1, t.n + 1)]


# ---------------------------------------------------------------------------
# templates; strings mirror the published normal forms entry by entry
# ---------------------------------------------------------------------------


def _entry_templates(t, i):
    if t.series == "A":
        return _a_entry(t.n, i)
    if t.series == "D":
        return _d_even_entry(t.n // 2, t.r, i) if t.n % 2 == 0 else _d_odd_entry(t.n // 2, t.r, i)
    if t.n == 6:
        return _e6_entry(t.r, i)
    if t.n == 7:
        if t.r == 0 and t.char != 2:
            return _e7_entry(i)
        if t.char == 3:
            return _e7_char3_entry(i)
        return _e7_char2_entry(t.r, i)
    if t.r == 0 and t.char != 2:
        return _e8_entry(i)
    if t.char == 5:
        return _e8_char5_entry(i)
    if t.char == 3:
        return _e8_char3_entry(i) if t.r == 1 else _e8_2_char3_entry(i)
    return _e8_char2_entry(t.r, i)


def _a_entry(n, i):
    a = [[f"z^{n + 1 - i}", "-y"], ["x", f"z^{i}"]]
    b = [[f"z^{i}", "y"], ["-x", f"z^{n + 1 - i}"]]
    return a, b


def _d_even_entry(n, r, i):
    s = f"z+x*y^{n - r}" if r else "z"  # the deformed diagonal entry
    if i == 1:
        return (
            [["z", f"x^2+x*y^{n - 1}"], ["-y", s]],
            [[s, f"-x^2-x*y^{n - 1}"], ["y", "z"]],
        )
    if i == 2 * n - 1:
        return (
            [["z", f"x*y+y^{n}"], ["-x", s]],
            [[s, f"-x*y-y^{n}"], ["x", "z"]],
        )
    if i == 2 * n:
        return (
            [["z", f"x+y^{n - 1}"], ["-x*y", s]],
            [[s, f"-x-y^{n - 1}"], ["x*y", "z"]],
        )
    if i % 2 == 0:
        k = i // 2  # 1 <= k <= n - 1
        a = [
            ["z", "0", "x*y", f"y^{k}"],
            ["0", "z", f"-x*y^{n - k}", "x"],
            ["-x", f"y^{k}", s, "0"],
            [f"-x*y^{n - k}", "-x*y", "0", s],
        ]
        b = [
            [s, "0", "-x*y", f"-y^{k}"],
            ["0", s, f"x*y^{n - k}", "-x"],
            ["x", f"-y^{k}", "z", "0"],
            [f"x*y^{n - k}", "x*y", "0", "z"],
        ]
        return a, b
    k = (i - 1) // 2  # 1 <= k <= n - 2
    a = [
        ["z", "0", "x*y", f"x*y^{n - k}"],
        ["0", "z", f"-y^{k + 1}", "x*y"],
        ["-x", f"x*y^{n - k - 1}", s, "0"],
        [f"-y^{k}", "-x", "0", s],
    ]
    b = [
        [s, "0", "-x*y", f"-x*y^{n - k}"],
        ["0", s, f"y^{k + 1}", "-x*y"],
        ["x", f"-x*y^{n - k - 1}", "z", "0"],
        [f"y^{k}", "x", "0", "z"],
    ]
    return a, b


def _d_odd_entry(n, r, i):
    s = f"z+y^{n}+x*y^{n - r}" if r else f"z+y^{n}"
    if i == 1:
        return (
            [["z", "x^2"], ["-y", s]],
            [[s, "-x^2"], ["y", "z"]],
        )
    if i == 2 * n:
        return (
            [["z", "x*y"], ["-x", s]],
            [[s, "-x*y"], ["x", "z"]],
        )
    if i == 2 * n + 1:
        return (
            [["z", "x"], ["-x*y", s]],
            [[s, "-x"], ["x*y", "z"]],
        )
    if i % 2 == 0:
        k = i // 2  # 1 <= k <= n - 1
        a = [
            ["z", "0", "x*y", f"y^{k}"],
            ["0", "z", "0", "x"],
            ["-x", f"y^{k}", s, "0"],
            ["0", "-x*y", "0", s],
        ]
        b = [
            [s, "0", "-x*y", f"-y^{k}"],
            ["0", s, "0", "-x"],
            ["x", f"-y^{k}", "z", "0"],
            ["0", "x*y", "0", "z"],
        ]
        return a, b
    k = (i - 1) // 2  # 1 <= k <= n - 1
    a = [
        ["z", "0", "x*y", "0"],
        ["0", "z", f"-y^{k + 1}", "x*y"],
        ["-x", "0", s, "0"],
        [f"-y^{k}", "-x", "0", s],
    ]
    b = [
        [s, "0", "-x*y", "0"],
        ["0", s, f"y^{k + 1}", "-x*y"],
        ["x", "0", "z", "0"],
        [f"y^{k}", "x", "0", "z"],
    ]
    return a, b


def _e6_entry(r, i):
    s = "z+y^2+x*y" if r else "z+y^2"
    if i == 1:
        return ([["z", "x^2"], ["-x", s]], [[s, "-x^2"], ["x", "z"]])
    if i == 2:
        a = [
            ["z", "0", "x^2", "0"],
            ["0", "z", "x*y", "-x^2"],
            ["-x", "0", s, "0"],
            ["-y", "x", "0", s],
        ]
        b = [
            [s, "0", "-x^2", "0"],
            ["0", s, "-x*y", "x^2"],
            ["x", "0", "z", "0"],
            ["y", "-x", "0", "z"],
        ]
        return a, b
    if i == 3:
        a = [
            ["z", "0", "0", "x^2", "y^2", "x*y"],
            ["0", "z", "0", "0", "x^2", "0"],
            ["0", "0", "z", "0", "-x*y", "-x^2"],
            ["-x", "0", "-y", s, "0", "0"],
            ["0", "-x", "0", "0", s, "0"],
            ["0", "y", "x", "0", "0", s],
        ]
        b = [
            [s, "0", "0", "-x^2", "-y^2", "-x*y"],
            ["0", s, "0", "0", "-x^2", "0"],
            ["0", "0", s, "0", "x*y", "x^2"],
            ["x", "0", "y", "z", "0", "0"],
            ["0", "x", "0", "0", "z", "0"],
            ["0", "-y", "-x", "0", "0", "z"],
        ]
        return a, b
    if i == 4:
        a = [
            ["z", "0", "x", "0"],
            ["0", "z", "-y", "x"],
            ["-x^2", "0", s, "0"],
            ["-x*y", "-x^2", "0", s],
        ]
        b = [
            [s, "0", "-x", "0"],
            ["0", s, "y", "-x"],
            ["x^2", "0", "z", "0"],
            ["x*y", "x^2", "0", "z"],
        ]
        return a, b
    if i == 5:
        return ([["z", "x"], ["-x^2", s]], [[s, "-x"], ["x^2", "z"]])
    a = [
        ["z", "0", "x^2", "y"],
        ["0", "z", "0", "-x"],
        ["-x", "-y", s, "0"],
        ["0", "x^2", "0", s],
    ]
    b = [
        [s, "0", "-x^2", "-y"],
        ["0", s, "0", "x"],
        ["x", "y", "z", "0"],
        ["0", "-x^2", "0", "z"],
    ]
    return a, b


def _e7_entry(i):
    if i == 1:
        a = [
            ["z", "0", "x^2", "x*y^2"],
            ["0", "z", "y", "-x"],
            ["-x", "-x*y^2", "z", "0"],
            ["-y", "x^2", "0", "z"],
        ]
        b = [
            ["z", "0", "-x^2", "-x*y^2"],
            ["0", "z", "-y", "x"],
            ["x", "x*y^2", "z", "0"],
            ["y", "-x^2", "0", "z"],
        ]
        return a, b
    if i == 2:
        a = [
            ["z", "0", "0", "x^2", "x*y^2", "-x^2*y"],
            ["0", "z", "0", "-x*y", "x^2", "x*y^2"],
            ["0", "0", "z", "y^2", "-x*y", "x^2"],
            ["-x", "0", "-x*y", "z", "0", "0"],
            ["-y", "-x", "0", "0", "z", "0"],
            ["0", "-y", "-x", "0", "0", "z"],
        ]
        b = [
            ["z", "0", "0", "-x^2", "-x*y^2", "x^2*y"],
            ["0", "z", "0", "x*y", "-x^2", "-x*y^2"],
            ["0", "0", "z", "-y^2", "x*y", "-x^2"],
            ["x", "0", "x*y", "z", "0", "0"],
            ["y", "x", "0", "0", "z", "0"],
            ["0", "y", "x", "0", "0", "z"],
        ]
        return a, b
    if i == 3:
        a = [
            ["z", "0", "0", "0", "0", "0", "x^2", "x*y^2"],
            ["0", "z", "0", "0", "0", "0", "x*y", "-x^2"],
            ["0", "0", "z", "0", "x", "y^2", "0", "-x*y"],
            ["0", "0", "0", "z", "y", "-x", "x", "0"],
            ["0", "x*y", "-x^2", "-x*y^2", "z", "0", "0", "0"],
            ["-x", "0", "-x*y", "x^2", "0", "z", "0", "0"],
            ["-x", "-y^2", "0", "0", "0", "0", "z", "0"],
            ["-y", "x", "0", "0", "0", "0", "0", "z"],
        ]
        b = [
            ["z", "0", "0", "0", "0", "0", "-x^2", "-x*y^2"],
            ["0", "z", "0", "0", "0", "0", "-x*y", "x^2"],
            ["0", "0", "z", "0", "-x", "-y^2", "0", "x*y"],
            ["0", "0", "0", "z", "-y", "x", "-x", "0"],
            ["0", "-x*y", "x^2", "x*y^2", "z", "0", "0", "0"],
            ["x", "0", "x*y", "-x^2", "0", "z", "0", "0"],
            ["x", "y^2", "0", "0", "0", "0", "z", "0"],
            ["y", "-x", "0", "0", "0", "0", "0", "z"],
        ]
        return a, b
    if i == 4:
        a = [
            ["z", "0", "0", "-x*y", "x^2", "x*y^2"],
            ["0", "z", "0", "y^2", "-x*y", "x^2"],
            ["0", "0", "z", "x", "y^2", "-x*y"],
            ["0", "-x*y", "-x^2", "z", "0", "0"],
            ["-x", "0", "-x*y", "0", "z", "0"],
            ["-y", "-x", "0", "0", "0", "z"],
        ]
        b = [
            ["z", "0", "0", "x*y", "-x^2", "-x*y^2"],
            ["0", "z", "0", "-y^2", "x*y", "-x^2"],
            ["0", "0", "z", "-x", "-y^2", "x*y"],
            ["0", "x*y", "x^2", "z", "0", "0"],
            ["x", "0", "x*y", "0", "z", "0"],
            ["y", "x", "0", "0", "0", "z"],
        ]
        return a, b
    if i == 5:
        a = [
            ["z", "0", "x*y", "x^2"],
            ["0", "z", "x", "-y^2"],
            ["-y^2", "-x^2", "z", "0"],
            ["-x", "x*y", "0", "z"],
        ]
        b = [
            ["z", "0", "-x*y", "-x^2"],
            ["0", "z", "-x", "y^2"],
            ["y^2", "x^2", "z", "0"],
            ["x", "-x*y", "0", "z"],
        ]
        return a, b
    if i == 6:
        return ([["z", "-x^2-y^3"], ["x", "z"]], [["z", "x^2+y^3"], ["-x", "z"]])
    a = [
        ["z", "0", "x^2", "x*y^2"],
        ["0", "z", "x*y", "-x^2"],
        ["-x", "-y^2", "z", "0"],
        ["-y", "x", "0", "z"],
    ]
    b = [
        ["z", "0", "-x^2", "-x*y^2"],
        ["0", "z", "-x*y", "x^2"],
        ["x", "y^2", "z", "0"],
        ["y", "-x", "0", "z"],
    ]
    return a, b


def _e7_char3_entry(i):
    if i == 1:
        a = [
            ["z", "0", "x^2", "x*y^2"],
            ["0", "z", "x+y", "-x"],
            ["-x", "-x*y^2", "z", "0"],
            ["-x-y", "x^2", "0", "z"],
        ]
        b = [
            ["z", "0", "-x^2", "-x*y^2"],
            ["0", "z", "-x-y", "x"],
            ["x", "x*y^2", "z", "0"],
            ["x+y", "-x^2", "0", "z"],
        ]
        return a, b
    if i == 2:
        a = [
            ["z", "0", "0", "x^2", "x^2*y+x*y^2", "0"],
            ["0", "z", "0", "-x*y", "x^2", "0"],
            ["0", "0", "z", "-y^2", "x*y", "x^2+x*y^2+y^3"],
            ["-x", "x*y+y^2", "0", "z", "0", "0"],
            ["-y", "-x", "0", "0", "z", "0"],
            ["0", "y", "-x", "0", "0", "z"],
        ]
        b = [
            ["z", "0", "0", "-x^2", "-x^2*y-x*y^2", "0"],
            ["0", "z", "0", "x*y", "-x^2", "0"],
            ["0", "0", "z", "y^2", "-x*y", "-x^2-x*y^2-y^3"],
            ["x", "-x*y-y^2", "0", "z", "0", "0"],
            ["y", "x", "0", "0", "z", "0"],
            ["0", "-y", "x", "0", "0", "z"],
        ]
        return a, b
    if i == 3:
        a = [
            ["z", "0", "0", "0", "0", "0", "x^2", "x^2*y+x*y^2"],
            ["0", "z", "0", "0", "0", "0", "-x*y", "x^2"],
            ["0", "0", "z", "0", "-y^2", "x+y^2", "-x", "-x*y"],
            ["0", "0", "0", "z", "-x", "-y", "y", "0"],
            ["0", "y^2", "x*y", "x^2+x*y^2", "z", "0", "0", "0"],
            ["-x", "y^2", "-x^2", "x*y^2", "0", "z", "0", "0"],
            ["-x", "x*y+y^2", "0", "0", "0", "0", "z", "0"],
            ["-y", "-x", "0", "0", "0", "0", "0", "z"],
        ]
        b = [
            ["z", "0", "0", "0", "0", "0", "-x^2", "-x^2*y-x*y^2"],
            ["0", "z", "0", "0", "0", "0", "x*y", "-x^2"],
            ["0", "0", "z", "0", "y^2", "-x-y^2", "x", "x*y"],
            ["0", "0", "0", "z", "x", "y", "-y", "0"],
            ["0", "-y^2", "-x*y", "-x^2-x*y^2", "z", "0", "0", "0"],
            ["x", "-y^2", "x^2", "-x*y^2", "0", "z", "0", "0"],
            ["x", "-x*y-y^2", "0", "0", "0", "0", "z", "0"],
            ["y", "x", "0", "0", "0", "0", "0", "z"],
        ]
        return a, b
    if i == 4:
        a = [
            ["z", "0", "0", "0", "x^2+x*y^2+y^3", "0"],
            ["0", "z", "0", "y^2", "-x*y-y^3", "x^2+x*y^2"],
            ["0", "0", "z", "x", "y^2", "-x*y"],
            ["0", "-x*y", "-x*y^2-x^2", "z", "0", "0"],
            ["-x", "0", "0", "0", "z", "0"],
            ["-y", "-x", "y^2", "0", "0", "z"],
        ]
        b = [
            ["z", "0", "0", "0", "-x^2-x*y^2-y^3", "0"],
            ["0", "z", "0", "-y^2", "x*y+y^3", "-x^2-x*y^2"],
            ["0", "0", "z", "-x", "-y^2", "x*y"],
            ["0", "x*y", "x*y^2+x^2", "z", "0", "0"],
            ["x", "0", "0", "0", "z", "0"],
            ["y", "x", "-y^2", "0", "0", "z"],
        ]
        return a, b
    if i == 5:
        a = [
            ["z", "0", "x^2+x*y", "x^2"],
            ["0", "z", "x", "-y^2"],
            ["-y^2", "-x^2", "z", "0"],
            ["-x", "x^2+x*y", "0", "z"],
        ]
        b = [
            ["z", "0", "-x^2-x*y", "-x^2"],
            ["0", "z", "-x", "y^2"],
            ["y^2", "x^2", "z", "0"],
            ["x", "-x^2-x*y", "0", "z"],
        ]
        return a, b
    if i == 6:
        return (
            [["z", "-x^2-x*y^2-y^3"], ["x", "z"]],
            [["z", "x^2+x*y^2+y^3"], ["-x", "z"]],
        )
    a = [
        ["z", "0", "x^2", "x*y^2"],
        ["0", "z", "x^2+x*y", "-x^2"],
        ["-x", "-y^2", "z", "0"],
        ["-x-y", "x", "0", "z"],
    ]
    b = [
        ["z", "0", "-x^2", "-x*y^2"],
        ["0", "z", "-x^2-x*y", "x^2"],
        ["x", "y^2", "z", "0"],
        ["x+y", "-x", "0", "z"],
    ]
    return a, b


def _e7_char2_entry(r, i):
    s = "z+" + _e7_char2_g(r) if r else "z"
    if i == 1:
        a = [
            ["z", "0", "x^2", "x*y^2"],
            ["0", "z", "y", "x"],
            ["x", "x*y^2", s, "0"],
            ["y", "x^2", "0", s],
        ]
        b = [
            [s, "0", "x^2", "x*y^2"],
            ["0", s, "y", "x"],
            ["x", "x*y^2", "z", "0"],
            ["y", "x^2", "0", "z"],
        ]
        return a, b
    if i == 2:
        core = [
            ["x^2", "x*y^2", "x^2*y"],
            ["x*y", "x^2", "x*y^2"],
            ["y^2", "x*y", "x^2"],
        ]
        low = [["x", "0", "x*y"], ["y", "x", "0"], ["0", "y", "x"]]
        return _char2_block(s, core, low, 3)
    if i == 3:
        core = [
            ["0", "0", "x^2", "x*y^2"],
            ["0", "0", "x*y", "x^2"],
            ["x", "y^2", "0", "x*y"],
            ["y", "x", "x", "0"],
        ]
        low = [
            ["0", "x*y", "x^2", "x*y^2"],
            ["x", "0", "x*y", "x^2"],
            ["x", "y^2", "0", "0"],
            ["y", "x", "0", "0"],
        ]
        return _char2_block(s, core, low, 4)
    if i == 4:
        core = [
            ["x*y", "x^2", "x*y^2"],
            ["y^2", "x*y", "x^2"],
            ["x", "y^2", "x*y"],
        ]
        low = [["0", "x*y", "x^2"], ["x", "0", "x*y"], ["y", "x", "0"]]
        return _char2_block(s, core, low, 3)
    if i == 5:
        core = [["x*y", "x^2"], ["x", "y^2"]]
        low = [["y^2", "x^2"], ["x", "x*y"]]
        return _char2_block(s, core, low, 2)
    if i == 6:
        return (
            [["z", "x^2+y^3"], ["x", s]],
            [[s, "x^2+y^3"], ["x", "z"]],
        )
    core = [["x^2", "x*y^2"], ["x*y", "x^2"]]
    low = [["x", "y^2"], ["y", "x"]]
    return _char2_block(s, core, low, 2)


def _char2_block(s, core, low, k):
    """Characteristic-2 pattern: A = [[zI, core],[low, sI]], B the same with
    the diagonal blocks swapped."""
    a = []
    b = []
    for i in range(k):
        row_a = ["0"] * (2 * k)
        row_b = ["0"] * (2 * k)
        row_a[i] = "z"
        row_b[i] = s
        for j in range(k):
            row_a[k + j] = core[i][j]
            row_b[k + j] = core[i][j]
        a.append(row_a)
        b.append(row_b)
    for i in range(k):
        row_a = ["0"] * (2 * k)
        row_b = ["0"] * (2 * k)
        row_a[k + i] = s
        row_b[k + i] = "z"
        for j in range(k):
            row_a[j] = low[i][j]
            row_b[j] = low[i][j]
        a.append(row_a)
        b.append(row_b)
    return a, b


def _e8_entry(i):
    if i == 1:
        a = [
            ["z", "0", "-y^3", "-x^2"],
            ["0", "z", "x", "-y^2"],
            ["y^2", "-x^2", "z", "0"],
            ["x", "y^3", "0", "z"],
        ]
        b = [
            ["z", "0", "y^3", "x^2"],
            ["0", "z", "-x", "y^2"],
            ["-y^2", "x^2", "z", "0"],
            ["-x", "-y^3", "0", "z"],
        ]
        return a, b
    if i == 2:
        a = [
            ["z", "0", "0", "0", "0", "-y^3", "-x^2", "0"],
            ["0", "z", "0", "0", "-y^2", "0", "x*y", "-x^2"],
            ["0", "0", "z", "0", "-x", "-y^2", "0", "y^3"],
            ["0", "0", "0", "z", "0", "-x", "y^2", "0"],
            ["0", "y^3", "x^2", "-x*y^2", "z", "0", "0", "0"],
            ["y^2", "0", "0", "x^2", "0", "z", "0", "0"],
            ["x", "0", "0", "-y^3", "0", "0", "z", "0"],
            ["y", "x", "-y^2", "0", "0", "0", "0", "z"],
        ]
        b = [
            ["z", "0", "0", "0", "0", "y^3", "x^2", "0"],
            ["0", "z", "0", "0", "y^2", "0", "-x*y", "x^2"],
            ["0", "0", "z", "0", "x", "y^2", "0", "-y^3"],
            ["0", "0", "0", "z", "0", "x", "-y^2", "0"],
            ["0", "-y^3", "-x^2", "x*y^2", "z", "0", "0", "0"],
            ["-y^2", "0", "0", "-x^2", "0", "z", "0", "0"],
            ["-x", "0", "0", "y^3", "0", "0", "z", "0"],
            ["-y", "-x", "y^2", "0", "0", "0", "0", "z"],
        ]
        return a, b
    if i == 3:
        top = [
            ["0", "0", "0", "-x^2", "x*y^2", "-y^4"],
            ["0", "0", "0", "-y^3", "-x^2", "x*y^2"],
            ["0", "0", "0", "x*y", "-y^3", "-x^2"],
            ["-x", "-y^2", "0", "0", "0", "y^3"],
            ["0", "-x", "-y^2", "y^2", "0", "0"],
            ["-y", "0", "-x", "0", "y^2", "0"],
        ]
        bot = [
            ["0", "0", "y^3", "x^2", "-x*y^2", "y^4"],
            ["y^2", "0", "0", "y^3", "x^2", "-x*y^2"],
            ["0", "y^2", "0", "-x*y", "y^3", "x^2"],
            ["x", "y^2", "0", "0", "0", "0"],
            ["0", "x", "y^2", "0", "0", "0"],
            ["y", "0", "x", "0", "0", "0"],
        ]
        return _pm_block(top, bot, 6)
    if i == 4:
        top = [
            ["-y^3", "x^2", "0", "0", "0"],
            ["0", "y^3", "-x^2", "x*y^2", "-y^4"],
            ["0", "-x*y", "-y^3", "-x^2", "x*y^2"],
            ["y^2", "0", "x*y", "-y^3", "-x^2"],
            ["-x", "-y^2", "0", "0", "0"],
        ]
        bot = [
            ["y^2", "0", "0", "0", "x^2"],
            ["-x", "0", "0", "0", "y^3"],
            ["0", "x", "y^2", "0", "0"],
            ["y", "0", "x", "y^2", "0"],
            ["0", "y", "0", "x", "y^2"],
        ]
        return _pm_block(top, bot, 5)
    if i == 5:
        top = [
            ["x*y", "-y^2", "-x^2", "0"],
            ["-y^3", "0", "0", "-x"],
            ["x^2", "0", "0", "-y^2"],
            ["0", "x", "-y^3", "-y"],
        ]
        bot = [
            ["0", "y^2", "-x", "0"],
            ["y^3", "x*y", "0", "-x^2"],
            ["x", "0", "-y", "y^2"],
            ["0", "x^2", "y^3", "0"],
        ]
        return _pm_block(top, bot, 4)
    if i == 6:
        top = [
            ["-x^2", "-y^4", "x*y^3"],
            ["x*y", "-x^2", "-y^4"],
            ["-y^2", "x*y", "-x^2"],
        ]
        bot = [["x", "0", "y^3"], ["y", "x", "0"], ["0", "y", "x"]]
        return _pm_block(top, bot, 3)
    if i == 7:
        top = [["-x^2", "-y^4"], ["-y", "x"]]
        bot = [["x", "y^4"], ["y", "-x^2"]]
        return _pm_block(top, bot, 2)
    top = [
        ["-x^2", "x*y^2", "-y^4"],
        ["-y^3", "-x^2", "x*y^2"],
        ["x*y", "-y^3", "-x^2"],
    ]
    bot = [["x", "y^2", "0"], ["0", "x", "y^2"], ["y", "0", "x"]]
    return _pm_block(top, bot, 3)


def _negate_text(txt):
    """Term-wise sign flip of a polynomial in the template grammar."""
    if txt == "0":
        return "0"
    import re

    parts = re.findall(r"([+-]?)([^+-]+)", txt)
    out = []
    for sign, body in parts:
        flipped = "-" if sign != "-" else "+"
        out.append(flipped + body)
    joined = "".join(out)
    return joined[1:] if joined.startswith("+") else joined


def _pm_block(top, bot, k, s="z"):
    """Pattern A = [[zI, top],[bot, sI]], B = the same with all off-diagonal
    blocks negated (and the z blocks kept)."""
    neg = _negate_text

    a = []
    b = []
    for i in range(k):
        row_a = ["0"] * (2 * k)
        row_b = ["0"] * (2 * k)
        row_a[i] = "z"
        row_b[i] = "z"
        for j in range(k):
            row_a[k + j] = top[i][j]
            row_b[k + j] = neg(top[i][j])
        a.append(row_a)
        b.append(row_b)
    for i in range(k):
        row_a = ["0"] * (2 * k)
        row_b = ["0"] * (2 * k)
        row_a[k + i] = s
        row_b[k + i] = s
        for j in range(k):
            row_a[j] = bot[i][j]
            row_b[j] = neg(bot[i][j])
        a.append(row_a)
        b.append(row_b)
    return a, b


def _e8_char5_entry(i):
    if i == 1:
        top = [["-y^3", "-x^2-y^4"], ["x", "-y^2"]]
        bot = [["y^2", "-x^2-y^4"], ["x", "y^3"]]
        return _pm_block(top, bot, 2)
    if i == 2:
        top = [
            ["0", "-y^3", "-x^2-y^4", "0"],
            ["-y^2", "y^3", "x*y", "-x^2-y^4"],
            ["-x", "-y^2", "0", "y^3"],
            ["0", "-x", "y^2", "0"],
        ]
        bot = [
            ["0", "y^3", "x^2+y^4", "-x*y^2"],
            ["y^2", "0", "0", "x^2+y^4"],
            ["x", "0", "0", "-y^3"],
            ["y", "x", "-y^2", "y^3"],
        ]
        return _pm_block(top, bot, 4)
    if i == 3:
        top = [
            ["0", "y^3", "0", "-x^2-y^4", "0", "0"],
            ["-y^2", "y^3", "0", "-x*y", "0", "x^2+y^4"],
            ["y", "-y^2", "-x*y-y^2", "0", "-x", "-y^3"],
            ["0", "-x", "0", "-y^2", "0", "0"],
            ["-x", "-y^2", "0", "0", "0", "-y^3"],
            ["0", "-x*y", "-x^2", "0", "y^3", "-x*y^2"],
        ]
        bot = [
            ["0", "y^3", "0", "-x*y^2", "x^2+y^4", "0"],
            ["-y^2", "0", "0", "x^2+y^4", "0", "0"],
            ["0", "y^2", "y^3", "-x*y", "0", "x"],
            ["x", "0", "0", "y^3", "0", "0"],
            ["0", "0", "x^2", "0", "x*y", "-x*y-y^2"],
            ["y", "-x", "0", "-y^3", "y^2", "0"],
        ]
        return _pm_block(top, bot, 6)
    if i == 4:
        top = [
            ["-y^3", "x^2", "0", "-x*y^3", "0"],
            ["0", "y^3", "x^2+y^4", "x*y^2", "-y^4"],
            ["0", "-x*y", "y^3", "-x^2", "x*y^2"],
            ["y^2", "0", "-x*y", "-y^3", "-x^2"],
            ["-x", "-y^2", "-y^3", "0", "-x*y^2"],
        ]
        bot = [
            ["y^2", "0", "0", "-x*y^2", "x^2"],
            ["-x", "0", "y^3", "0", "y^3"],
            ["0", "-x", "-y^2", "0", "0"],
            ["y", "0", "x", "y^2", "0"],
            ["0", "y", "0", "x", "y^2"],
        ]
        return _pm_block(top, bot, 5)
    if i == 5:
        top = [
            ["x*y", "-x*y-y^2", "-x^2", "0"],
            ["-y^3", "0", "0", "-x"],
            ["x^2", "0", "0", "-x*y-y^2"],
            ["0", "x", "-y^3", "-y"],
        ]
        bot = [
            ["0", "x*y+y^2", "-x", "0"],
            ["y^3", "x*y", "0", "-x^2"],
            ["x", "0", "-y", "x*y+y^2"],
            ["0", "x^2", "y^3", "0"],
        ]
        return _pm_block(top, bot, 4)
    if i == 6:
        top = [
            ["-x^2", "-x*y^3-y^4", "x*y^3"],
            ["x*y", "-x^2", "-y^4"],
            ["-y^2", "x*y", "-x^2-y^4"],
        ]
        bot = [["x", "-y^3", "y^3"], ["y", "x", "0"], ["0", "y", "x"]]
        return _pm_block(top, bot, 3)
    if i == 7:
        top = [["-x^2", "-x*y^3-y^4"], ["-y", "x"]]
        bot = [["x", "x*y^3+y^4"], ["y", "-x^2"]]
        return _pm_block(top, bot, 2)
    top = [
        ["-x^2", "x*y^2", "-x*y^3-y^4"],
        ["-y^3", "-x^2-y^4", "x*y^2"],
        ["x*y", "-y^3", "-x^2"],
    ]
    bot = [["x", "y^2", "-y^3"], ["0", "x", "y^2"], ["y", "0", "x"]]
    return _pm_block(top, bot, 3)


def _e8_char3_entry(i):
    if i == 1:
        top = [["-x^2-x*y^3", "y^2"], ["-y^3", "-x"]]
        bot = [["x", "y^2"], ["-y^3", "x^2+x*y^3"]]
        return _pm_block(top, bot, 2)
    if i == 2:
        top = [
            ["0", "-y^3", "-x^2-x*y^3", "-y^4"],
            ["y^2", "x*y^2", "x*y", "-x^2"],
            ["0", "x", "-y^2", "x*y"],
            ["-x", "y^2", "0", "0"],
        ]
        bot = [
            ["0", "-y^3", "-x*y^2", "x^2+x*y^3"],
            ["0", "-x*y", "-x^2", "-y^3"],
            ["x", "0", "y^3", "0"],
            ["y", "x", "-x*y^2", "y^2"],
        ]
        return _pm_block(top, bot, 4)
    if i == 3:
        top = [
            ["-x*y", "0", "0", "-x^2", "0", "-y^4"],
            ["0", "-x*y", "y^3", "0", "-x^2-x*y^3", "0"],
            ["0", "0", "-x*y", "-x*y", "-y^3", "x^2"],
            ["-x", "-y^2", "0", "x*y^2", "0", "0"],
            ["0", "-x", "0", "-y^2", "0", "x*y"],
            ["y", "0", "-x", "0", "-y^2", "-x*y^2"],
        ]
        bot = [
            ["x*y^2", "0", "y^3", "x^2", "-x*y^2", "-y^4"],
            ["0", "0", "-x*y", "y^3", "x^2+x*y^3", "x*y^2"],
            ["0", "-y^2", "x*y^2", "x*y", "0", "x^2"],
            ["x", "0", "0", "-x*y", "y^3", "0"],
            ["0", "x", "y^2", "0", "-x*y", "0"],
            ["y", "0", "-x", "0", "0", "x*y"],
        ]
        return _pm_block(top, bot, 6)
    if i == 4:
        top = [
            ["-x*y", "x^2", "0", "-x^2*y^2-y^4", "0"],
            ["0", "-x*y^2", "-x^2-x*y^3", "-x^2*y", "-y^4"],
            ["y^2", "-x*y", "0", "-x^2", "0"],
            ["-x*y^2", "-y^3", "-x*y", "-x*y^2", "x^2"],
            ["-x", "0", "y^2", "0", "-x*y"],
        ]
        bot = [
            ["0", "0", "-y^3", "x*y", "x^2"],
            ["-x", "0", "x*y^2", "y^2", "x*y"],
            ["0", "x", "-x*y", "0", "-y^3"],
            ["y", "0", "x", "0", "0"],
            ["0", "y", "0", "-x", "x*y^2"],
        ]
        return _pm_block(top, bot, 5)
    if i == 5:
        top = [
            ["x*y", "y^3", "x^2", "0"],
            ["y^2", "-x*y^2", "x*y", "-x"],
            ["x^2", "x*y^2", "-x^2*y^2-y^4", "0"],
            ["0", "x", "0", "-y"],
        ]
        bot = [
            ["-x*y^2", "-y^3", "-x", "x*y^2"],
            ["-y^2", "x*y", "0", "-x^2"],
            ["-x", "0", "y", "0"],
            ["-x*y", "x^2", "0", "x^2*y^2+y^4"],
        ]
        return _pm_block(top, bot, 4)
    if i == 6:
        top = [
            ["x*y", "x^2", "-y^4"],
            ["x^2", "-x^2*y^2-y^4", "-x*y^3"],
            ["y^2", "x*y", "x^2+x*y^3"],
        ]
        bot = [["-x*y^2", "-x", "-y^3"], ["-x", "y", "0"], ["y", "0", "-x"]]
        return _pm_block(top, bot, 3)
    if i == 7:
        top = [["-x^2", "y"], ["-x^2*y^2-y^4", "-x"]]
        bot = [["x", "y"], ["-x^2*y^2-y^4", "x^2"]]
        return _pm_block(top, bot, 2)
    top = [
        ["-x^2", "x*y^2", "-y^4"],
        ["-x^2*y-y^3", "-x^2", "x*y^2"],
        ["x*y", "-y^3", "-x^2-x*y^3"],
    ]
    bot = [["x", "y^2", "0"], ["-x*y", "x", "y^2"], ["y", "0", "x"]]
    return _pm_block(top, bot, 3)


def _e8_2_char3_entry(i):
    if i == 1:
        top = [["-x^2-x*y^2", "y^2"], ["-y^3", "-x"]]
        bot = [["x", "y^2"], ["-y^3", "x^2+x*y^2"]]
        return _pm_block(top, bot, 2)
    if i == 2:
        top = [
            ["0", "-y^3", "-x^2-x*y^2", "-y^4"],
            ["y^2", "x*y", "x*y", "-x^2"],
            ["-x", "y^2", "0", "0"],
            ["0", "x", "-y^2", "x*y"],
        ]
        bot = [
            ["0", "-y^3", "x^2+x*y^2", "-x*y^2"],
            ["0", "-x*y", "-y^3", "-x^2"],
            ["x", "0", "0", "y^3"],
            ["y", "x", "y^2", "-x*y"],
        ]
        return _pm_block(top, bot, 4)
    if i == 3:
        top = [
            ["0", "x^2+y^3", "0", "-x^2", "0", "0"],
            ["0", "0", "y^3", "x^2+y^3", "-x^2-x*y^2", "-x*y^2"],
            ["-y^2", "-x*y", "0", "-x*y", "0", "x^2"],
            ["-x", "-y^2", "0", "-x*y", "0", "-x^2-y^3"],
            ["0", "-x", "0", "-y^2", "0", "0"],
            ["y", "y^2", "-x", "-x*y", "-y^2", "0"],
        ]
        bot = [
            ["x*y", "0", "x^2+y^3", "x^2", "-x*y^2", "0"],
            ["-y^2", "0", "0", "0", "x^2", "0"],
            ["-x*y", "-y^2", "x*y", "x*y", "-x^2*y-y^3", "x^2+x*y^2"],
            ["x", "0", "0", "0", "x^2+y^3", "0"],
            ["x-y^2", "x", "y^2", "0", "x^2-x*y^2", "y^3"],
            ["y", "0", "-x", "y^2", "-x*y", "0"],
        ]
        return _pm_block(top, bot, 6)
    if i == 4:
        top = [
            ["0", "-x^2-x*y^2", "-y^3", "0", "x*y^2"],
            ["y^3", "0", "-x^2", "-x^2*y", "-x^2*y"],
            ["-y^2", "x*y", "0", "x^2", "-y^3"],
            ["0", "y^3", "-x*y", "0", "x^2"],
            ["x+y^2", "0", "y^2", "y^3", "y^3"],
        ]
        bot = [
            ["0", "-y^2", "0", "0", "-x^2"],
            ["x", "0", "0", "-y^2", "0"],
            ["y^2", "x", "x*y", "x*y", "0"],
            ["-y", "0", "-x-y^2", "0", "-y^2"],
            ["0", "y", "y^2", "-x", "0"],
        ]
        return _pm_block(top, bot, 5)
    if i == 5:
        top = [
            ["0", "x", "0", "-y"],
            ["y^2", "x*y", "x*y", "x"],
            ["x^2", "0", "-x^2*y-y^4", "-y^3"],
            ["x*y", "-y^3", "x^2", "0"],
        ]
        bot = [
            ["0", "-y^3", "-x", "-x*y"],
            ["-x^2", "-x*y", "0", "y^2"],
            ["-y^3", "0", "y", "-x"],
            ["x^2*y+y^4", "-x^2", "0", "x*y"],
        ]
        return _pm_block(top, bot, 4)
    if i == 6:
        top = [
            ["x^2", "-x^2*y-y^4", "-x*y^3"],
            ["x*y", "x^2", "-y^4"],
            ["y^2", "x*y", "x^2+x*y^2"],
        ]
        bot = [["-x", "-x*y", "-y^3"], ["y", "-x", "0"], ["0", "y", "-x"]]
        return _pm_block(top, bot, 3)
    if i == 7:
        top = [["-x^2", "y"], ["-x^2*y-y^4", "-x"]]
        bot = [["x", "y"], ["-x^2*y-y^4", "x^2"]]
        return _pm_block(top, bot, 2)
    top = [
        ["-x^2", "x*y^2", "-y^4"],
        ["-x^2-y^3", "-x^2", "x*y^2"],
        ["x*y", "-y^3", "-x^2-x*y^2"],
    ]
    bot = [["x", "y^2", "0"], ["-x", "x", "y^2"], ["y", "0", "x"]]
    return _pm_block(top, bot, 3)


def _e8_char2_entry(r, i):
    s = "z+" + _e8_char2_g(r) if r else "z"
    if i == 1:
        core = [["y^3", "x^2"], ["x", "y^2"]]
        low = [["y^2", "x^2"], ["x", "y^3"]]
        return _char2_block(s, core, low, 2)
    if i == 2:
        core = [
            ["0", "y^3", "x^2", "0"],
            ["y^2", "0", "x*y", "x^2"],
            ["x", "y^2", "0", "y^3"],
            ["0", "x", "y^2", "0"],
        ]
        low = [
            ["0", "y^3", "x^2", "x*y^2"],
            ["y^2", "0", "0", "x^2"],
            ["x", "0", "0", "y^3"],
            ["y", "x", "y^2", "0"],
        ]
        return _char2_block(s, core, low, 4)
    if i == 3:
        core = [
            ["0", "0", "0", "x^2", "x*y^2", "y^4"],
            ["0", "0", "0", "y^3", "x^2", "x*y^2"],
            ["0", "0", "0", "x*y", "y^3", "x^2"],
            ["x", "y^2", "0", "0", "0", "y^3"],
            ["0", "x", "y^2", "y^2", "0", "0"],
            ["y", "0", "x", "0", "y^2", "0"],
        ]
        low = [
            ["0", "0", "y^3", "x^2", "x*y^2", "y^4"],
            ["y^2", "0", "0", "y^3", "x^2", "x*y^2"],
            ["0", "y^2", "0", "x*y", "y^3", "x^2"],
            ["x", "y^2", "0", "0", "0", "0"],
            ["0", "x", "y^2", "0", "0", "0"],
            ["y", "0", "x", "0", "0", "0"],
        ]
        return _char2_block(s, core, low, 6)
    if i == 4:
        core = [
            ["y^3", "x^2", "0", "0", "0"],
            ["0", "y^3", "x^2", "x*y^2", "y^4"],
            ["0", "x*y", "y^3", "x^2", "x*y^2"],
            ["y^2", "0", "x*y", "y^3", "x^2"],
            ["x", "y^2", "0", "0", "0"],
        ]
        low = [
            ["y^2", "0", "0", "0", "x^2"],
            ["x", "0", "0", "0", "y^3"],
            ["0", "x", "y^2", "0", "0"],
            ["y", "0", "x", "y^2", "0"],
            ["0", "y", "0", "x", "y^2"],
        ]
        return _char2_block(s, core, low, 5)
    if i == 5:
        core = [
            ["x*y", "y^2", "x^2", "0"],
            ["y^3", "0", "0", "x"],
            ["x^2", "0", "0", "y^2"],
            ["0", "x", "y^3", "y"],
        ]
        low = [
            ["0", "y^2", "x", "0"],
            ["y^3", "x*y", "0", "x^2"],
            ["x", "0", "y", "y^2"],
            ["0", "x^2", "y^3", "0"],
        ]
        return _char2_block(s, core, low, 4)
    if i == 6:
        core = [["x^2", "y^4", "x*y^3"], ["x*y", "x^2", "y^4"], ["y^2", "x*y", "x^2"]]
        low = [["x", "0", "y^3"], ["y", "x", "0"], ["0", "y", "x"]]
        return _char2_block(s, core, low, 3)
    if i == 7:
        core = [["x^2", "y^4"], ["y", "x"]]
        low = [["x", "y^4"], ["y", "x^2"]]
        return _char2_block(s, core, low, 2)
    core = [["x^2", "x*y^2", "y^4"], ["y^3", "x^2", "x*y^2"], ["x*y", "y^3", "x^2"]]
    low = [["x", "y^2", "0"], ["0", "x", "y^2"], ["y", "0", "x"]]
    return _char2_block(s, core, low, 3)
