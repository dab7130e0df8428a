"""Finite-support Hahn series over F2 with rational exponents.

A series is stored as a common denominator and a strictly increasing tuple of
integer numerators; the coefficient of every listed exponent is 1. Elements
with infinite support (inverses of non-monomial units) only appear as
:class:`TruncatedSeries`, known modulo ``I_{>N}``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union

from . import kernels

Rational = Union[Fraction, int, str]

INFINITY = math.inf


class DomainError(ArithmeticError):
    """Raised for zero divisors, non-units and other out-of-domain input."""


def as_exponent(value: Rational) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_exponent(value)
    raise TypeError(f"cannot use {value!r} as an exponent")


def parse_exponent(text: str) -> Fraction:
    """Parse ``"p/q"`` or an integer; floats and decimals are rejected."""
    s = text.strip()
    num, sep, den = s.partition("/")
    try:
        n = int(num)
        d = int(den) if sep else 1
    except ValueError:
        raise ValueError(f"malformed rational {text!r}") from None
    if d == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return Fraction(n, d)


def format_exponent(q: Fraction) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _floor_scaled(bound: Fraction, den: int) -> int:
    return math.floor(bound * den)


class FiniteSeries:
    """An element of F2[t^Q] viewed inside the Hahn field K.

    ``FiniteSeries(["0", "1/2"])`` is ``1 + t^(1/2)``. Repeated exponents in
    the constructor cancel in pairs, as they would in a sum over F2.
    """

    __slots__ = ("_den", "_num", "_hash")

    def __init__(self, exponents: Iterable[Rational] = ()):
        fracs = [as_exponent(e) for e in exponents]
        den = 1
        for f in fracs:
            den = den * f.denominator // math.gcd(den, f.denominator)
        seen: set[int] = set()
        for f in fracs:
            seen ^= {f.numerator * (den // f.denominator)}
        self._set(den, tuple(sorted(seen)))

    def _set(self, den: int, num: tuple) -> None:
        if num:
            g = math.gcd(den, *num)
            if g > 1:
                den //= g
                num = tuple(x // g for x in num)
        else:
            den = 1
        self._den = den
        self._num = num
        self._hash = None

    @classmethod
    def _raw(cls, den: int, num: tuple) -> "FiniteSeries":
        obj = cls.__new__(cls)
        obj._set(den, num)
        return obj

    @classmethod
    def monomial(cls, q: Rational) -> "FiniteSeries":
        q = as_exponent(q)
        return cls._raw(q.denominator, (q.numerator,))

    @classmethod
    def zero(cls) -> "FiniteSeries":
        return cls._raw(1, ())

    @classmethod
    def one(cls) -> "FiniteSeries":
        return cls._raw(1, (0,))

    @property
    def support(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(x, self._den) for x in self._num)

    def __len__(self) -> int:
        return len(self._num)

    def __bool__(self) -> bool:
        return bool(self._num)

    def is_zero(self) -> bool:
        return not self._num

    def _aligned(self, other: "FiniteSeries"):
        if self._den == other._den:
            return self._den, self._num, other._num
        den = self._den * other._den // math.gcd(self._den, other._den)
        fa, fb = den // self._den, den // other._den
        a = self._num if fa == 1 else tuple(x * fa for x in self._num)
        b = other._num if fb == 1 else tuple(x * fb for x in other._num)
        return den, a, b

    def __add__(self, other: "FiniteSeries") -> "FiniteSeries":
        if not isinstance(other, FiniteSeries):
            return NotImplemented
        den, a, b = self._aligned(other)
        return FiniteSeries._raw(den, kernels.xor_merge(a, b))

    __sub__ = __add__

    def __neg__(self) -> "FiniteSeries":
        return self

    def __mul__(self, other: "FiniteSeries") -> "FiniteSeries":
        if not isinstance(other, FiniteSeries):
            return NotImplemented
        den, a, b = self._aligned(other)
        return FiniteSeries._raw(den, kernels.mul_mod2(a, b))

    def mul_truncated(self, other: "FiniteSeries", n: Rational) -> "FiniteSeries":
        """``self * other`` with every exponent above ``n`` dropped."""
        den, a, b = self._aligned(other)
        cap = _floor_scaled(as_exponent(n), den)
        return FiniteSeries._raw(den, kernels.mul_mod2(a, b, cap))

    def __pow__(self, k: int) -> "FiniteSeries":
        if k < 0:
            raise DomainError("negative powers need divide()")
        result, base = FiniteSeries.one(), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def valuation(self):
        """Minimum exponent, or ``INFINITY`` for the zero series."""
        if not self._num:
            return INFINITY
        return Fraction(self._num[0], self._den)

    def shift(self, q: Rational) -> "FiniteSeries":
        """Multiply by the monomial ``t^q``."""
        return self * FiniteSeries.monomial(q)

    def truncate(self, n: Rational) -> "FiniteSeries":
        """Drop exponents above ``n``; the closed boundary keeps ``n`` itself."""
        cap = _floor_scaled(as_exponent(n), self._den)
        if not self._num or self._num[-1] <= cap:
            return self
        return FiniteSeries._raw(self._den, tuple(x for x in self._num if x <= cap))

    def in_ring(self) -> bool:
        """True when the series lies in the Hahn ring A (no negative exponents)."""
        return not self._num or self._num[0] >= 0

    def __eq__(self, other) -> bool:
        if not isinstance(other, FiniteSeries):
            return NotImplemented
        return self._den == other._den and self._num == other._num

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._den, self._num))
        return self._hash

    def __repr__(self) -> str:
        return f"FiniteSeries({self.to_json()!r})"

    def __str__(self) -> str:
        if not self._num:
            return "0"
        terms = []
        for q in self.support:
            if q == 0:
                terms.append("1")
            elif q == 1:
                terms.append("t")
            else:
                terms.append(f"t^{format_exponent(q)}" if q.denominator == 1 and q > 0
                             else f"t^({format_exponent(q)})")
        return " + ".join(terms)

    def to_json(self) -> list[str]:
        return [format_exponent(q) for q in self.support]

    @classmethod
    def from_json(cls, data: Iterable[str]) -> "FiniteSeries":
        exps = [parse_exponent(s) if isinstance(s, str) else as_exponent(s) for s in data]
        if any(a >= b for a, b in zip(exps, exps[1:])):
            raise ValueError("series exponents must be strictly increasing")
        return cls(exps)


@dataclass(frozen=True)
class TruncatedSeries:
    """A series known modulo ``I_{>precision}``."""

    head: FiniteSeries
    precision: Fraction

    def __post_init__(self):
        object.__setattr__(self, "precision", as_exponent(self.precision))
        if self.head.truncate(self.precision) != self.head:
            raise ValueError("head has exponents above the precision")

    def __str__(self) -> str:
        return f"{self.head} mod I_(>{format_exponent(self.precision)})"


def add(a: FiniteSeries, b: FiniteSeries) -> FiniteSeries:
    return a + b


def mul(a: FiniteSeries, b: FiniteSeries) -> FiniteSeries:
    return a * b


def valuation(a: FiniteSeries):
    return a.valuation()


def unit_decompose(a: FiniteSeries) -> tuple[Fraction, FiniteSeries]:
    """Split a nonzero series as ``t^v * u`` with ``u`` a unit of A."""
    if a.is_zero():
        raise DomainError("zero has no unit decomposition")
    v = a.valuation()
    return v, a.shift(-v)


def congruent(a: FiniteSeries, b: FiniteSeries, n: Rational) -> bool:
    """``a == b`` modulo ``I_{>n}``."""
    return (a + b).truncate(n).is_zero()


def invert_unit(u: FiniteSeries, n: Rational) -> TruncatedSeries:
    """Inverse of a unit ``1 + a`` as the geometric series in ``a``, cut at ``n``.

    In characteristic 2 the alternating signs vanish, so the partial sums of
    ``a^k`` converge to the inverse; ``a^k`` has valuation at least
    ``k * v(a)`` and the loop stops once that passes ``n``.
    """
    n = as_exponent(n)
    if n < 0:
        raise DomainError("precision must be nonnegative")
    if u.is_zero() or u.valuation() != 0:
        raise DomainError(f"{u} is not a unit of A")
    a = u + FiniteSeries.one()
    result = FiniteSeries.one()
    term = FiniteSeries.one()
    while True:
        term = term.mul_truncated(a, n)
        if term.is_zero():
            break
        result = result + term
    return TruncatedSeries(result.truncate(n), n)


def divide(a: FiniteSeries, b: FiniteSeries, n: Rational) -> TruncatedSeries:
    """Quotient ``r = a / b`` with ``b * r == a`` modulo ``I_{>n}``.

    ``r`` itself is returned modulo ``I_{>m}`` with ``m = n - min(0, v(b))``,
    so it is also correct modulo ``I_{>n}``. Exponents may be negative.
    """
    n = as_exponent(n)
    if b.is_zero():
        raise DomainError("division by zero")
    n -= min(Fraction(0), b.valuation())
    if a.is_zero():
        return TruncatedSeries(FiniteSeries.zero(), n)
    v, u = unit_decompose(b)
    # r = t^(-v) a u^{-1}; the unit inverse is needed mod I_{>n + v - v(a)}
    need = max(Fraction(0), n + v - a.valuation())
    w = invert_unit(u, need).head
    r = a.shift(-v).mul_truncated(w, n)
    return TruncatedSeries(r, n)
