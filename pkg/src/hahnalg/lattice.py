"""The totally ordered lattice of A-submodules of K.

Every submodule is one of ``0``, ``I_q``, ``I_{>q}`` or ``K`` with ``q``
rational (negative ``q`` gives fractional ideals). Sum and intersection are
max and min in the order ``0 < I_{>q} < I_q < I_{>p} < I_p < K`` for
``p < q``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .series import FiniteSeries, Rational, as_exponent, format_exponent, parse_exponent

ZERO_KIND = "0"
GT = "gt"
GE = "ge"
FULL_KIND = "K"


@dataclass(frozen=True)
class KSubmodule:
    kind: str
    q: Optional[Fraction] = None

    def __post_init__(self):
        if self.kind in (GT, GE):
            object.__setattr__(self, "q", as_exponent(self.q))
        elif self.kind in (ZERO_KIND, FULL_KIND):
            if self.q is not None:
                raise ValueError(f"{self.kind} takes no parameter")
        else:
            raise ValueError(f"unknown submodule kind {self.kind!r}")

    def key(self):
        if self.kind == ZERO_KIND:
            return (0, 0, 0)
        if self.kind == FULL_KIND:
            return (2, 0, 0)
        return (1, -self.q, 0 if self.kind == GT else 1)

    def __lt__(self, other: "KSubmodule") -> bool:
        return self.key() < other.key()

    def __le__(self, other: "KSubmodule") -> bool:
        return self.key() <= other.key()

    def __gt__(self, other: "KSubmodule") -> bool:
        return self.key() > other.key()

    def __ge__(self, other: "KSubmodule") -> bool:
        return self.key() >= other.key()

    @property
    def is_zero(self) -> bool:
        return self.kind == ZERO_KIND

    @property
    def is_full(self) -> bool:
        return self.kind == FULL_KIND

    def shift(self, s: Rational) -> "KSubmodule":
        """Image under multiplication by ``t^s``."""
        if self.kind in (GT, GE):
            return KSubmodule(self.kind, self.q + as_exponent(s))
        return self

    def contains(self, a: FiniteSeries) -> bool:
        if a.is_zero() or self.is_full:
            return True
        if self.is_zero:
            return False
        v = a.valuation()
        return v >= self.q if self.kind == GE else v > self.q

    def __str__(self) -> str:
        return format_submodule(self)


ZERO = KSubmodule(ZERO_KIND)
FULL = KSubmodule(FULL_KIND)


def I(q: Rational) -> KSubmodule:
    return KSubmodule(GE, as_exponent(q))


def Igt(q: Rational) -> KSubmodule:
    return KSubmodule(GT, as_exponent(q))


A = I(0)
IGT0 = Igt(0)


def compare(u: KSubmodule, v: KSubmodule) -> int:
    """-1, 0 or 1 as ``u`` is contained in, equal to, or contains ``v``."""
    ku, kv = u.key(), v.key()
    return (ku > kv) - (ku < kv)


def join(u: KSubmodule, v: KSubmodule) -> KSubmodule:
    """``U + V``."""
    return u if u >= v else v


def meet(u: KSubmodule, v: KSubmodule) -> KSubmodule:
    """``U ∩ V``."""
    return u if u <= v else v


def product(u: KSubmodule, v: KSubmodule) -> KSubmodule:
    if u.is_zero or v.is_zero:
        return ZERO
    if u.is_full or v.is_full:
        return FULL
    kind = GE if u.kind == GE and v.kind == GE else GT
    return KSubmodule(kind, u.q + v.q)


def colon(u: KSubmodule, v: KSubmodule) -> KSubmodule:
    """``(U:V) = {a in K : aV <= U}``."""
    if v.is_zero or u.is_full:
        return FULL
    if v.is_full or u.is_zero:
        return ZERO
    # only (I_{>p} : I_q) stays strict
    kind = GT if u.kind == GT and v.kind == GE else GE
    return KSubmodule(kind, u.q - v.q)


def circle(v: KSubmodule) -> KSubmodule:
    """``V° = (I_{>0} : V)``."""
    return colon(IGT0, v)


def is_ideal(u: KSubmodule) -> bool:
    """Ideals of A: everything except K and the fractional ``I_q``, ``I_{>q}`` with q < 0."""
    if u.is_zero:
        return True
    if u.is_full:
        return False
    return u.q >= 0


_SUB_RE = re.compile(r"^\s*(?:(0)|(K)|Iq\(([^()]*)\)|Igt\(([^()]*)\))\s*$")


def parse_submodule(text: str) -> KSubmodule:
    """Parse ``"0"``, ``"K"``, ``"Iq(p/q)"`` or ``"Igt(p/q)"``."""
    m = _SUB_RE.match(text)
    if not m:
        raise ValueError(f"not a submodule of K: {text!r}")
    if m.group(1):
        return ZERO
    if m.group(2):
        return FULL
    if m.group(3) is not None:
        return I(parse_exponent(m.group(3)))
    return Igt(parse_exponent(m.group(4)))


def format_submodule(u: KSubmodule) -> str:
    if u.is_zero:
        return "0"
    if u.is_full:
        return "K"
    name = "Iq" if u.kind == GE else "Igt"
    return f"{name}({format_exponent(u.q)})"
