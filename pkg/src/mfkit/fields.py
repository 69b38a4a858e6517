"""Exact coefficient fields: prime fields GF(p) and the rationals.

Elements are plain Python values (canonical residues in ``range(p)`` for a
prime field, ``fractions.Fraction`` for the rationals), so polynomials and
matrices can store them directly.  A :class:`Field` instance supplies the
arithmetic.
"""

from __future__ import annotations

from fractions import Fraction

_MAX_PRIME = 1 << 63  # machine-word moduli only; rationals cover the rest

# deterministic Miller-Rabin witnesses, valid for n < 3.3 * 10^24
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


def is_prime(n):
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41):
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class Field:
    """A prime field GF(p) or the field of rationals.

    ``kind`` is ``'prime'`` or ``'rationals'``.  All element operations keep
    values canonical: residues reduced mod p, fractions in lowest terms with
    positive denominator (``Fraction`` guarantees the latter).  Instances are
    immutable and safe to share between threads.
    """

    __slots__ = ("kind", "p")

    def __init__(self, p=None):
        if p is None:
            self.kind = "rationals"
            self.p = 0
        else:
            if not isinstance(p, int) or p >= _MAX_PRIME or not is_prime(p):
                raise ValueError(f"modulus must be a machine-word prime, got {p!r}")
            self.kind = "prime"
            self.p = p

    @staticmethod
    def rationals():
        return Field()

    @staticmethod
    def prime(p):
        return Field(p)

    @property
    def characteristic(self):
        return self.p

    def __eq__(self, other):
        return isinstance(other, Field) and self.kind == other.kind and self.p == other.p

    def __hash__(self):
        return hash((self.kind, self.p))

    def __repr__(self):
        return "QQ" if self.kind == "rationals" else f"GF({self.p})"

    # element constructors -------------------------------------------------

    @property
    def zero(self):
        return 0 if self.kind == "prime" else Fraction(0)

    @property
    def one(self):
        return 1 if self.kind == "prime" else Fraction(1)

    def from_int(self, n):
        return n % self.p if self.kind == "prime" else Fraction(n)

    def from_fraction(self, num, den):
        if self.kind == "prime":
            return num * pow(den, -1, self.p) % self.p
        return Fraction(num, den)

    # arithmetic ------------------------------------------------------------

    def add(self, a, b):
        return (a + b) % self.p if self.kind == "prime" else a + b

    def sub(self, a, b):
        return (a - b) % self.p if self.kind == "prime" else a - b

    def mul(self, a, b):
        return (a * b) % self.p if self.kind == "prime" else a * b

    def neg(self, a):
        return -a % self.p if self.kind == "prime" else -a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero field element")
        return pow(a, -1, self.p) if self.kind == "prime" else 1 / a

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, e):
        if self.kind == "prime":
            return pow(a, e, self.p) if e >= 0 else pow(self.inv(a), -e, self.p)
        return a**e

    # helpers ----------------------------------------------------------------

    def random_element(self, rng, nonzero=False):
        """Uniform sample; over the rationals, from a small fraction box."""
        while True:
            if self.kind == "prime":
                a = rng.randrange(self.p)
            else:
                a = Fraction(rng.randint(-9, 9), rng.randint(1, 9))
            if a != 0 or not nonzero:
                return a

    def format(self, a):
        """Render an element the polynomial grammar can read back."""
        if self.kind == "prime":
            return str(a)
        if a.denominator == 1:
            return str(a.numerator)
        return f"{a.numerator}/{a.denominator}"
