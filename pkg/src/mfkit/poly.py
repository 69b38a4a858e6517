"""Sparse multivariate polynomials over an exact field.

Monomials are exponent tuples, one entry per context variable.  A polynomial
is a term map from monomials to nonzero field elements; the zero polynomial
has an empty map.  The only ordering used anywhere is degrevlex, realised by
:func:`drl_key` (larger key = larger monomial).
"""

from __future__ import annotations

import re

from .errors import PolyParseError
from .fields import Field


def drl_key(mono):
    """Sort key realising degrevlex: compare total degree, then the reversed
    negated exponent vector lexicographically."""
    return (sum(mono), tuple(-e for e in reversed(mono)))


def mono_mul(u, v):
    return tuple(a + b for a, b in zip(u, v))


def mono_divides(u, v):
    """True when u | v, i.e. exponent-wise u <= v."""
    return all(a <= b for a, b in zip(u, v))


def mono_div(v, u):
    return tuple(b - a for a, b in zip(u, v))


def mono_lcm(u, v):
    return tuple(max(a, b) for a, b in zip(u, v))


class PolyContext:
    """A polynomial ring: coefficient field plus an ordered variable tuple."""

    __slots__ = ("field", "names", "nvars", "_zero_mono")

    def __init__(self, field, names):
        self.field = field
        self.names = tuple(names)
        if len(set(self.names)) != len(self.names):
            raise ValueError("duplicate variable names")
        self.nvars = len(self.names)
        self._zero_mono = (0,) * self.nvars

    def __eq__(self, other):
        return (
            isinstance(other, PolyContext)
            and self.field == other.field
            and self.names == other.names
        )

    def __hash__(self):
        return hash((self.field, self.names))

    def __repr__(self):
        return f"{self.field!r}[{', '.join(self.names)}]"

    # constructors -----------------------------------------------------------

    def zero(self):
        return Poly(self, {})

    def one(self):
        return self.const(self.field.one)

    def const(self, c):
        if c == 0:
            return Poly(self, {})
        return Poly(self, {self._zero_mono: c})

    def from_int(self, n):
        return self.const(self.field.from_int(n))

    def var(self, i):
        mono = tuple(1 if j == i else 0 for j in range(self.nvars))
        return Poly(self, {mono: self.field.one})

    def gens(self):
        return [self.var(i) for i in range(self.nvars)]

    def monomial(self, mono, c=None):
        c = self.field.one if c is None else c
        if c == 0:
            return self.zero()
        return Poly(self, {tuple(mono): c})

    def parse(self, text):
        return poly_parse(text, self)


class Poly:
    """Immutable sparse polynomial.  Do not mutate ``terms`` after creation."""

    __slots__ = ("ctx", "terms")

    def __init__(self, ctx, terms):
        self.ctx = ctx
        self.terms = terms

    # predicates / accessors ---------------------------------------------------

    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return not self.terms or (len(self.terms) == 1 and self.ctx._zero_mono in self.terms)

    def constant_coeff(self):
        return self.terms.get(self.ctx._zero_mono, self.ctx.field.zero)

    def total_degree(self):
        """Degree of the zero polynomial is -1 by convention."""
        if not self.terms:
            return -1
        return max(sum(m) for m in self.terms)

    def leading_term(self):
        """(monomial, coefficient) maximal under degrevlex; None for zero."""
        if not self.terms:
            return None
        m = max(self.terms, key=drl_key)
        return m, self.terms[m]

    def coeff(self, mono):
        return self.terms.get(tuple(mono), self.ctx.field.zero)

    def __eq__(self, other):
        return isinstance(other, Poly) and self.ctx == other.ctx and self.terms == other.terms

    def __hash__(self):
        return hash((self.ctx, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    # arithmetic ----------------------------------------------------------------

    def __add__(self, other):
        F = self.ctx.field
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = F.add(out.get(m, 0), c) if m in out else c
            if s == 0:
                out.pop(m, None)
            else:
                out[m] = s
        return Poly(self.ctx, out)

    def __sub__(self, other):
        F = self.ctx.field
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = F.sub(out.get(m, F.zero), c)
            if s == 0:
                out.pop(m, None)
            else:
                out[m] = s
        return Poly(self.ctx, out)

    def __neg__(self):
        F = self.ctx.field
        return Poly(self.ctx, {m: F.neg(c) for m, c in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, Poly):
            return self.scale(other)
        F = self.ctx.field
        out = {}
        if len(self.terms) > len(other.terms):
            a, b = other, self
        else:
            a, b = self, other
        for m1, c1 in a.terms.items():
            for m2, c2 in b.terms.items():
                m = tuple(e1 + e2 for e1, e2 in zip(m1, m2))
                s = F.add(out.get(m, F.zero), F.mul(c1, c2))
                if s == 0:
                    out.pop(m, None)
                else:
                    out[m] = s
        return Poly(self.ctx, out)

    def scale(self, c):
        F = self.ctx.field
        if c == 0:
            return Poly(self.ctx, {})
        return Poly(self.ctx, {m: F.mul(a, c) for m, a in self.terms.items()})

    def mul_monomial(self, mono, c=None):
        F = self.ctx.field
        if c is not None and c == 0:
            return Poly(self.ctx, {})
        out = {}
        for m, a in self.terms.items():
            out[tuple(e1 + e2 for e1, e2 in zip(m, mono))] = a if c is None else F.mul(a, c)
        return Poly(self.ctx, out)

    def __pow__(self, e):
        if e < 0:
            raise ValueError("negative polynomial power")
        out = self.ctx.one()
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base if e > 1 else base
            e >>= 1
        return out

    def monic(self):
        lt = self.leading_term()
        if lt is None:
            return self
        return self.scale(self.ctx.field.inv(lt[1]))

    def divmod_exact(self, divisor):
        """Quotient of an exact division; raises if the division leaves a remainder.

        Used by fraction-free elimination, where divisions are exact by
        construction.
        """
        if divisor.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        F = self.ctx.field
        dm, dc = divisor.leading_term()
        dc_inv = F.inv(dc)
        rem = dict(self.terms)
        quo = {}
        while rem:
            m = max(rem, key=drl_key)
            c = rem[m]
            if not mono_divides(dm, m):
                raise ArithmeticError("inexact polynomial division")
            qm = mono_div(m, dm)
            qc = F.mul(c, dc_inv)
            quo[qm] = qc
            for m2, c2 in divisor.terms.items():
                mm = tuple(e1 + e2 for e1, e2 in zip(qm, m2))
                s = F.sub(rem.get(mm, F.zero), F.mul(qc, c2))
                if s == 0:
                    rem.pop(mm, None)
                else:
                    rem[mm] = s
        return Poly(self.ctx, quo)

    # rendering -------------------------------------------------------------------

    def __str__(self):
        if not self.terms:
            return "0"
        F = self.ctx.field
        parts = []
        for m in sorted(self.terms, key=drl_key, reverse=True):
            c = self.terms[m]
            factors = []
            for name, e in zip(self.ctx.names, m):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            body = "*".join(factors)
            negative = F.kind == "rationals" and c < 0
            mag = -c if negative else c
            coeff_str = F.format(mag)
            if body and coeff_str == "1":
                term = body
            elif body:
                term = f"{coeff_str}*{body}"
            else:
                term = coeff_str
            if not parts:
                parts.append(f"-{term}" if negative else term)
            else:
                parts.append(f"-{term}" if negative else f"+{term}")
        return "".join(parts)

    def __repr__(self):
        return f"Poly({self})"


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|([-+*/^]))")


def poly_parse(text, ctx):
    """Parse polynomial text against the CLI grammar.

    ``expr := term (('+'|'-') term)*``, ``term := factor ('*' factor)*``,
    ``factor := INT | VAR | VAR '^' UINT``; whitespace ignored; unary minus on
    the first term only.  Integer coefficients reduce into the field; over the
    rationals a fraction ``a/b`` is also accepted so printed output parses back.
    """
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            stripped = text[pos:].lstrip()
            if not stripped:
                break
            at = pos + (len(text) - pos - len(stripped))
            raise PolyParseError(f"unexpected character {stripped[0]!r}", at)
        if m.group(1) is not None:
            tokens.append(("int", m.group(1), m.start(1)))
        elif m.group(2) is not None:
            tokens.append(("name", m.group(2), m.start(2)))
        else:
            tokens.append(("op", m.group(3), m.start(3)))
        pos = m.end()

    F = ctx.field
    var_index = {name: i for i, name in enumerate(ctx.names)}
    idx = 0

    def peek():
        return tokens[idx] if idx < len(tokens) else ("end", "", len(text))

    def parse_factor():
        nonlocal idx
        kind, val, at = peek()
        if kind == "int":
            idx += 1
            num = int(val)
            if peek()[:2] == ("op", "/"):
                idx += 1
                k2, v2, a2 = peek()
                if k2 != "int":
                    raise PolyParseError("expected integer denominator", a2)
                idx += 1
                if F.kind == "prime" and int(v2) % F.p == 0:
                    raise PolyParseError("denominator vanishes in the field", a2)
                return ctx.const(F.from_fraction(num, int(v2)))
            return ctx.from_int(num)
        if kind == "name":
            idx += 1
            if val not in var_index:
                raise PolyParseError(f"unknown variable {val!r}", at)
            v = ctx.var(var_index[val])
            if peek()[:2] == ("op", "^"):
                idx += 1
                k2, v2, a2 = peek()
                if k2 != "int":
                    raise PolyParseError("expected integer exponent", a2)
                idx += 1
                return v ** int(v2)
            return v
        raise PolyParseError("expected integer or variable", at)

    def parse_term():
        nonlocal idx
        p = parse_factor()
        while peek()[:2] == ("op", "*"):
            idx += 1
            p = p * parse_factor()
        return p

    if not tokens:
        raise PolyParseError("empty polynomial", 0)

    negate = False
    if peek()[:2] == ("op", "-"):
        idx += 1
        negate = True
    elif peek()[:2] == ("op", "+"):
        idx += 1
    result = parse_term()
    if negate:
        result = -result
    while idx < len(tokens):
        kind, val, at = peek()
        if kind != "op" or val not in "+-":
            raise PolyParseError(f"expected '+' or '-', got {val!r}", at)
        idx += 1
        t = parse_term()
        result = result - t if val == "-" else result + t
    return result
