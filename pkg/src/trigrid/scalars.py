"""Numeric backends: exact rationals and arbitrary-precision binary floats.

A computation runs in one of two modes.  Exact mode uses
``fractions.Fraction`` (always lowest terms, positive denominator, so
equality is structural).  Float mode uses :class:`BigFloat`, a thin wrapper
over MPFR via gmpy2 that pins a precision in bits and rounds every operation
correctly at that precision.  The two kinds never mix: combining a Fraction
with a BigFloat raises instead of coercing, which keeps exact fixtures
reproducible.

Integers interoperate with both kinds (they are literals, not a third mode).
"""

from __future__ import annotations

import math
from fractions import Fraction

import gmpy2

MIN_PRECISION_BITS = 64
DEFAULT_PRECISION_BITS = 256

Rational = Fraction

_contexts: dict[int, "gmpy2.context"] = {}


def _context(bits):
    ctx = _contexts.get(bits)
    if ctx is None:
        if bits < MIN_PRECISION_BITS:
            raise ValueError(f"precision_bits must be >= {MIN_PRECISION_BITS}, got {bits}")
        ctx = gmpy2.context(precision=bits)
        _contexts[bits] = ctx
    return ctx


class BigFloat:
    """An MPFR float carrying its working precision in bits."""

    __slots__ = ("value", "precision_bits")

    def __init__(self, value, precision_bits=DEFAULT_PRECISION_BITS):
        _context(precision_bits)  # validates the precision
        if isinstance(value, BigFloat):
            value = value.value
        elif isinstance(value, Fraction):
            value = gmpy2.mpq(value.numerator, value.denominator)
        elif isinstance(value, float):
            raise TypeError("construct BigFloat from str, int, Fraction, or BigFloat, not float")
        object.__setattr__(self, "value", gmpy2.mpfr(value, precision_bits))
        object.__setattr__(self, "precision_bits", precision_bits)

    def __setattr__(self, name, value):
        raise AttributeError("BigFloat is immutable")

    def _coerce(self, other):
        if isinstance(other, BigFloat):
            if other.precision_bits != self.precision_bits:
                raise TypeError(
                    f"mixed precisions: {self.precision_bits} vs {other.precision_bits} bits"
                )
            return other.value
        if isinstance(other, int):
            return other
        if isinstance(other, (Fraction, float)):
            raise TypeError(f"cannot mix BigFloat with {type(other).__name__}")
        return NotImplemented

    def _wrap(self, raw):
        out = object.__new__(BigFloat)
        object.__setattr__(out, "value", raw)
        object.__setattr__(out, "precision_bits", self.precision_bits)
        return out

    def __add__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return self._wrap(_context(self.precision_bits).add(self.value, v))

    __radd__ = __add__

    def __sub__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return self._wrap(_context(self.precision_bits).sub(self.value, v))

    def __rsub__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return self._wrap(_context(self.precision_bits).sub(v, self.value))

    def __mul__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return self._wrap(_context(self.precision_bits).mul(self.value, v))

    __rmul__ = __mul__

    def __truediv__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        if v == 0:
            raise ZeroDivisionError("BigFloat division by zero")
        return self._wrap(_context(self.precision_bits).div(self.value, v))

    def __rtruediv__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        if self.value == 0:
            raise ZeroDivisionError("BigFloat division by zero")
        return self._wrap(_context(self.precision_bits).div(v, self.value))

    def __neg__(self):
        return self._wrap(-self.value)

    def __abs__(self):
        return self._wrap(abs(self.value))

    def __eq__(self, other):
        if isinstance(other, BigFloat):
            return self.value == other.value
        if isinstance(other, int):
            return self.value == other
        return NotImplemented

    def __lt__(self, other):
        return self.value < self._coerce(other)

    def __le__(self, other):
        return self.value <= self._coerce(other)

    def __gt__(self, other):
        return self.value > self._coerce(other)

    def __ge__(self, other):
        return self.value >= self._coerce(other)

    def __hash__(self):
        return hash(self.value)

    def __float__(self):
        return float(self.value)

    def __str__(self):
        return format(self.value, f".{decimal_digits(self.precision_bits)}g")

    def __repr__(self):
        return f"BigFloat('{self}', {self.precision_bits})"


def decimal_digits(precision_bits):
    """Decimal digits guaranteeing a lossless binary->decimal->binary trip."""
    return int(math.ceil(precision_bits * math.log10(2))) + 3


def scalar_arith(a, b, op):
    """Apply add/sub/mul/div (or +,-,*,/) to two scalars of the same kind."""
    if isinstance(a, Fraction) and isinstance(b, BigFloat) or (
        isinstance(a, BigFloat) and isinstance(b, Fraction)
    ):
        raise TypeError("cannot mix exact and float scalars")
    if op in ("+", "add"):
        return a + b
    if op in ("-", "sub"):
        return a - b
    if op in ("*", "mul"):
        return a * b
    if op in ("/", "div"):
        if b == 0:
            raise ZeroDivisionError("division by zero")
        return a / b
    raise ValueError(f"unknown operation {op!r}")


def to_float(r, precision_bits=DEFAULT_PRECISION_BITS):
    """Correctly rounded conversion of a Fraction (or int) to a BigFloat."""
    if isinstance(r, int):
        r = Fraction(r)
    if not isinstance(r, Fraction):
        raise TypeError(f"expected Fraction or int, got {type(r).__name__}")
    return BigFloat(r, precision_bits)


def e_const(precision_bits=DEFAULT_PRECISION_BITS):
    """The constant e with absolute error below 2**(1 - precision_bits).

    Summed as an exact rational truncation of sum(1/k!), cut off once the
    tail bound 1/(N! * N) drops under 2**-(precision_bits + 2), then rounded
    once.  Rounding adds at most half an ulp (e < 4, so ulp = 2**(2 - p)),
    which together with the truncation stays inside the stated bound.
    """
    if precision_bits < MIN_PRECISION_BITS:
        raise ValueError(f"precision_bits must be >= {MIN_PRECISION_BITS}")
    bound = Fraction(1, 2 ** (precision_bits + 2))
    total = Fraction(1)  # k = 0 term
    factorial = 1
    k = 0
    while True:
        k += 1
        factorial *= k
        total += Fraction(1, factorial)
        if Fraction(1, factorial * k) < bound:
            break
    return to_float(total, precision_bits)


def rational_to_str(r):
    """Serialize a Fraction as "p/q", or "p" when the denominator is 1."""
    if r.denominator == 1:
        return str(r.numerator)
    return f"{r.numerator}/{r.denominator}"


def rational_from_str(s):
    return Fraction(s)


def bigfloat_from_str(s, precision_bits=DEFAULT_PRECISION_BITS):
    return BigFloat(s, precision_bits)


def scalar_to_str(s):
    if isinstance(s, Fraction):
        return rational_to_str(s)
    if isinstance(s, BigFloat):
        return str(s)
    if isinstance(s, int):
        return str(s)
    raise TypeError(f"not a scalar: {type(s).__name__}")
