"""Sparse multivariate polynomials and rational functions over exact rationals.

Coefficients are Python ints or ``fractions.Fraction``; both mix freely and
compare equal where they should, so integer-only inputs never pay Fraction
overhead.  Terms are kept in a dict keyed by exponent tuples; the canonical
(graded lexicographic) order only matters for serialization, where it makes
string output deterministic.

Equality of rational functions is decided by cross-multiplication in the
polynomial ring: a/b == c/d  iff  a*d - c*b is the zero polynomial.  This is
sound over an integral domain and needs no multivariate gcd.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd


class MPoly:
    """A sparse polynomial in named variables with exact coefficients."""

    __slots__ = ("vars", "terms")

    def __init__(self, vars, terms):
        # invariant: no zero coefficients, exponent tuples match len(vars)
        self.vars = tuple(vars)
        self.terms = terms

    # -- constructors ------------------------------------------------------

    @classmethod
    def const(cls, value, vars=()):
        value = _as_coeff(value)
        vars = tuple(vars)
        if value == 0:
            return cls(vars, {})
        return cls(vars, {(0,) * len(vars): value})

    @classmethod
    def var(cls, name):
        return cls((name,), {(1,): 1})

    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return all(all(e == 0 for e in mono) for mono in self.terms)

    def constant_value(self):
        if not self.terms:
            return Fraction(0)
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        return Fraction(next(iter(self.terms.values())))

    def total_degree(self):
        if not self.terms:
            return 0
        return max(sum(mono) for mono in self.terms)

    # -- variable alignment ------------------------------------------------

    def aligned_to(self, vars):
        """Re-express this polynomial over a superset of its variables."""
        vars = tuple(vars)
        if vars == self.vars:
            return self
        pos = [vars.index(v) for v in self.vars]
        n = len(vars)
        terms = {}
        for mono, coeff in self.terms.items():
            new = [0] * n
            for p, e in zip(pos, mono):
                new[p] = e
            terms[tuple(new)] = coeff
        return MPoly(vars, terms)

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        other = _promote(other, self.vars)
        if other is NotImplemented:
            return NotImplemented
        a, b = _align(self, other)
        terms = dict(a.terms)
        for mono, coeff in b.terms.items():
            s = terms.get(mono, 0) + coeff
            if s == 0:
                terms.pop(mono, None)
            else:
                terms[mono] = s
        return MPoly(a.vars, terms)

    __radd__ = __add__

    def __neg__(self):
        return MPoly(self.vars, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = _promote(other, self.vars)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _promote(other, self.vars)
        if other is NotImplemented:
            return NotImplemented
        a, b = _align(self, other)
        if len(b.terms) > len(a.terms):
            a, b = b, a
        terms = {}
        for mb, cb in b.terms.items():
            for ma, ca in a.terms.items():
                mono = tuple(x + y for x, y in zip(ma, mb))
                s = terms.get(mono, 0) + ca * cb
                if s == 0:
                    terms.pop(mono, None)
                else:
                    terms[mono] = s
        return MPoly(a.vars, terms)

    __rmul__ = __mul__

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = MPoly.const(1, self.vars)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MPoly.const(other, self.vars)
        if not isinstance(other, MPoly):
            return NotImplemented
        a, b = _align(self, other)
        return a.terms == b.terms

    def __hash__(self):
        a = self.aligned_to(tuple(sorted(set(self.vars))))
        return hash((a.vars, frozenset((m, Fraction(c)) for m, c in a.terms.items())))

    # -- evaluation and display ---------------------------------------------

    def evaluate(self, assignment):
        """Evaluate at a dict of variable -> Fraction/int."""
        total = Fraction(0)
        for mono, coeff in self.terms.items():
            value = Fraction(coeff)
            for name, e in zip(self.vars, mono):
                if e:
                    value *= Fraction(assignment[name]) ** e
            total += value
        return total

    def sorted_terms(self):
        """Terms in graded-lex order, highest first."""
        return sorted(self.terms.items(), key=lambda t: (sum(t[0]), t[0]), reverse=True)

    def leading_coefficient(self):
        if not self.terms:
            return 0
        return self.sorted_terms()[0][1]

    def content(self):
        """Positive gcd of all integer coefficients (1 if any is fractional)."""
        g = 0
        for c in self.terms.values():
            if isinstance(c, Fraction) and c.denominator != 1:
                return 1
            g = gcd(g, int(c))
        return g or 1

    def map_coefficients(self, fn):
        return MPoly(self.vars, {m: fn(c) for m, c in self.terms.items()})

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for mono, coeff in self.sorted_terms():
            factors = [
                name if e == 1 else f"{name}^{e}"
                for name, e in zip(self.vars, mono)
                if e
            ]
            body = "*".join(factors)
            if not body:
                parts.append(str(coeff))
            elif coeff == 1:
                parts.append(body)
            elif coeff == -1:
                parts.append(f"-{body}")
            else:
                parts.append(f"{coeff}*{body}")
        out = parts[0]
        for p in parts[1:]:
            out += " - " + p[1:] if p.startswith("-") else " + " + p
        return out

    def __repr__(self):
        return f"MPoly({self})"


def _as_coeff(value):
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction):
        return value if value.denominator != 1 else value.numerator
    raise TypeError(f"not a valid coefficient: {value!r}")


def _promote(other, vars):
    if isinstance(other, MPoly):
        return other
    if isinstance(other, (int, Fraction)):
        return MPoly.const(other, vars)
    return NotImplemented


def _align(a, b):
    if a.vars == b.vars:
        return a, b
    merged = tuple(sorted(set(a.vars) | set(b.vars)))
    return a.aligned_to(merged), b.aligned_to(merged)


class RatFn:
    """A ratio of two MPolys; the denominator is never the zero polynomial.

    Not reduced to lowest terms: equality goes through cross-multiplication,
    which stays exact regardless.  Construction normalizes signs so the
    denominator's leading coefficient is positive, and strips the common
    integer content to keep coefficients from snowballing.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if den is None:
            den = MPoly.const(1, num.vars)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator polynomial")
        num, den = _align(num, den)
        if den.leading_coefficient() < 0:
            num, den = -num, -den
        k = gcd(num.content(), den.content())
        if k > 1:
            num = num.map_coefficients(lambda c: c // k if isinstance(c, int) else c / k)
            den = den.map_coefficients(lambda c: c // k if isinstance(c, int) else c / k)
        self.num = num
        self.den = den

    @classmethod
    def const(cls, value):
        value = Fraction(value)
        return cls(MPoly.const(value.numerator), MPoly.const(value.denominator))

    @classmethod
    def var(cls, name):
        return cls(MPoly.var(name))

    def is_zero(self):
        return self.num.is_zero()

    def __add__(self, other):
        other = _promote_rf(other)
        if other is NotImplemented:
            return NotImplemented
        return RatFn(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFn(-self.num, self.den)

    def __sub__(self, other):
        other = _promote_rf(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _promote_rf(other)
        if other is NotImplemented:
            return NotImplemented
        return RatFn(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _promote_rf(other)
        if other is NotImplemented:
            return NotImplemented
        if other.num.is_zero():
            raise ZeroDivisionError("division by the zero function")
        return RatFn(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return _promote_rf(other) / self

    def __pow__(self, k):
        if not isinstance(k, int):
            raise ValueError("exponent must be an integer")
        if k < 0:
            return RatFn(self.den, self.num) ** (-k)
        return RatFn(self.num**k, self.den**k)

    def __eq__(self, other):
        other = _promote_rf(other)
        if other is NotImplemented:
            return NotImplemented
        return (self.num * other.den - other.num * self.den).is_zero()

    def __hash__(self):
        raise TypeError("RatFn is unhashable; compare with ==")

    def evaluate(self, assignment):
        den = self.den.evaluate(assignment)
        if den == 0:
            raise ZeroDivisionError(f"denominator vanishes at {assignment}")
        return self.num.evaluate(assignment) / den

    def __str__(self):
        if self.den.is_constant() and self.den.constant_value() == 1:
            return str(self.num)
        return f"({self.num}) / ({self.den})"

    def __repr__(self):
        return f"RatFn({self})"


def _promote_rf(other):
    if isinstance(other, RatFn):
        return other
    if isinstance(other, (int, Fraction)):
        return RatFn.const(other)
    if isinstance(other, MPoly):
        return RatFn(other)
    return NotImplemented
