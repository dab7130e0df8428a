"""Standard basic modules, multibasic sums and their object-level predicates.

Each standard basic module is a subquotient ``U/V`` of K with ``V < U``;
:func:`normalize` shifts an arbitrary presentation to the standard one.
Multibasic modules are sorted tuples of standard basics, so structural
equality is isomorphism.
"""

from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Optional

from . import lattice as L
from .lattice import KSubmodule
from .series import INFINITY, Rational, as_exponent


class InvalidPresentation(ValueError):
    pass


class Kind(enum.Enum):
    # value = position in the canonical summand order
    K = 0
    A = 1
    IGT0 = 2
    THETA = 3
    PHI = 4
    F = 5
    A_MOD_I = 6
    A_MOD_IGT = 7
    IGT0_MOD_I = 8
    IGT0_MOD_IGT = 9

    @property
    def parameterized(self) -> bool:
        return self.value >= 6


PARAMETERIZED = tuple(k for k in Kind if k.parameterized)
FLAT_KINDS = frozenset({Kind.K, Kind.A, Kind.IGT0})
INJECTIVE_KINDS = frozenset({Kind.K, Kind.THETA, Kind.PHI})
FG_KINDS = frozenset({Kind.A, Kind.F, Kind.A_MOD_I, Kind.A_MOD_IGT})


@dataclass(frozen=True)
class StandardBasic:
    kind: Kind
    q: Optional[Fraction] = None

    def __post_init__(self):
        if self.kind.parameterized:
            if self.q is None:
                raise ValueError(f"{self.kind.name} needs a length parameter")
            q = as_exponent(self.q)
            if q <= 0:
                raise ValueError("length parameter must be positive")
            object.__setattr__(self, "q", q)
        elif self.q is not None:
            raise ValueError(f"{self.kind.name} takes no parameter")

    def sort_key(self):
        return (self.kind.value, self.q if self.q is not None else 0)

    def __lt__(self, other: "StandardBasic") -> bool:
        return self.sort_key() < other.sort_key()

    @property
    def length(self):
        if self.kind.parameterized:
            return self.q
        if self.kind is Kind.F:
            return Fraction(0)
        return INFINITY

    @property
    def is_flat(self) -> bool:
        return self.kind in FLAT_KINDS

    @property
    def is_injective(self) -> bool:
        return self.kind in INJECTIVE_KINDS

    @property
    def is_finitely_generated(self) -> bool:
        return self.kind in FG_KINDS

    def presentation(self) -> tuple[KSubmodule, KSubmodule]:
        """The canonical ``(U, V)`` with this module equal to ``U/V``."""
        return _PRESENTATIONS[self.kind](self.q)

    def __str__(self) -> str:
        from .expr import render_atom

        return render_atom(self)


_PRESENTATIONS = {
    Kind.K: lambda q: (L.FULL, L.ZERO),
    Kind.A: lambda q: (L.A, L.ZERO),
    Kind.IGT0: lambda q: (L.IGT0, L.ZERO),
    Kind.THETA: lambda q: (L.FULL, L.IGT0),
    Kind.PHI: lambda q: (L.FULL, L.A),
    Kind.F: lambda q: (L.A, L.IGT0),
    Kind.A_MOD_I: lambda q: (L.A, L.I(q)),
    Kind.A_MOD_IGT: lambda q: (L.A, L.Igt(q)),
    Kind.IGT0_MOD_I: lambda q: (L.IGT0, L.I(q)),
    Kind.IGT0_MOD_IGT: lambda q: (L.IGT0, L.Igt(q)),
}

K = StandardBasic(Kind.K)
A = StandardBasic(Kind.A)
IGT0 = StandardBasic(Kind.IGT0)
THETA = StandardBasic(Kind.THETA)
PHI = StandardBasic(Kind.PHI)
F = StandardBasic(Kind.F)


def A_mod_I(q: Rational) -> StandardBasic:
    return StandardBasic(Kind.A_MOD_I, q)


def A_mod_Igt(q: Rational) -> StandardBasic:
    return StandardBasic(Kind.A_MOD_IGT, q)


def Igt0_mod_I(q: Rational) -> StandardBasic:
    return StandardBasic(Kind.IGT0_MOD_I, q)


def Igt0_mod_Igt(q: Rational) -> StandardBasic:
    return StandardBasic(Kind.IGT0_MOD_IGT, q)


def standard_basics(params: Iterable[Rational]) -> list[StandardBasic]:
    """All six unparameterized kinds plus the four parameterized ones at each value."""
    out = [StandardBasic(k) for k in Kind if not k.parameterized]
    for q in params:
        out.extend(StandardBasic(k, q) for k in PARAMETERIZED)
    return out


class Multibasic:
    """A finite direct sum of standard basic modules, in canonical order."""

    __slots__ = ("summands",)

    def __init__(self, summands: Iterable[StandardBasic] = ()):
        object.__setattr__(self, "summands", tuple(sorted(summands)))

    def __setattr__(self, name, value):
        raise AttributeError("Multibasic is immutable")

    @classmethod
    def of(cls, *summands: StandardBasic) -> "Multibasic":
        return cls(summands)

    def __iter__(self) -> Iterator[StandardBasic]:
        return iter(self.summands)

    def __len__(self) -> int:
        return len(self.summands)

    def __bool__(self) -> bool:
        return bool(self.summands)

    def __add__(self, other: "Multibasic") -> "Multibasic":
        if isinstance(other, StandardBasic):
            other = Multibasic.of(other)
        if not isinstance(other, Multibasic):
            return NotImplemented
        return Multibasic(self.summands + other.summands)

    def __eq__(self, other) -> bool:
        if isinstance(other, StandardBasic):
            return self.summands == (other,)
        if not isinstance(other, Multibasic):
            return NotImplemented
        return self.summands == other.summands

    def __hash__(self) -> int:
        return hash(self.summands)

    def counts(self) -> Counter:
        return Counter(self.summands)

    def parameters(self) -> set[Fraction]:
        return {s.q for s in self.summands if s.q is not None}

    def map(self, fn) -> "Multibasic":
        """Apply ``fn: StandardBasic -> Multibasic`` summandwise and add up."""
        out: list[StandardBasic] = []
        for s in self.summands:
            out.extend(fn(s))
        return Multibasic(out)

    def __repr__(self) -> str:
        return f"Multibasic({str(self)!r})"

    def __str__(self) -> str:
        from .expr import render

        return render(self)


ZERO_MODULE = Multibasic()


def as_multibasic(m) -> Multibasic:
    if isinstance(m, Multibasic):
        return m
    if isinstance(m, StandardBasic):
        return Multibasic.of(m)
    return Multibasic(m)


def normalize(u: KSubmodule, v: KSubmodule) -> StandardBasic:
    """Standard basic module isomorphic to ``U/V``; needs ``V < U``."""
    if not v < u:
        raise InvalidPresentation(f"{v} is not strictly below {u}")
    if u.is_full:
        if v.is_zero:
            return K
        return THETA if v.kind == L.GT else PHI
    # multiplication by t^{-s} moves U to A or I_{>0}
    s = u.q
    w = v.shift(-s)
    if u.kind == L.GE:
        if w.is_zero:
            return A
        if w.kind == L.GT:
            return F if w.q == 0 else A_mod_Igt(w.q)
        return A_mod_I(w.q)
    if w.is_zero:
        return IGT0
    if w.kind == L.GT:
        return Igt0_mod_Igt(w.q)
    return Igt0_mod_I(w.q)


def subquotient(u: KSubmodule, v: KSubmodule) -> Multibasic:
    """``U/V`` as a multibasic module, zero when ``U <= V``."""
    if u <= v:
        return ZERO_MODULE
    return Multibasic.of(normalize(u, v))


def is_flat(m) -> bool:
    return all(s.is_flat for s in as_multibasic(m))


def is_injective(m) -> bool:
    return all(s.is_injective for s in as_multibasic(m))


def is_finitely_generated(m) -> bool:
    return all(s.is_finitely_generated for s in as_multibasic(m))


def check_I1(m) -> bool:
    """Whether ``tM = M``, computed as ``t(U/V) = (I_1 U + V)/V`` per summand."""
    for s in as_multibasic(m):
        u, v = s.presentation()
        if L.join(L.product(L.I(1), u), v) != u:
            return False
    return True


def injective_hull(b: StandardBasic) -> StandardBasic:
    """Hull of ``U/V`` is ``K/V``."""
    _, v = b.presentation()
    return normalize(L.FULL, v)


def injective_resolution(m) -> tuple[Multibasic, Multibasic, Multibasic]:
    """``0 -> M -> ⊕K/V_i -> ⊕K/U_i -> 0`` as three multibasic terms."""
    m = as_multibasic(m)
    first: list[StandardBasic] = []
    second: list[StandardBasic] = []
    for s in m:
        u, v = s.presentation()
        first.extend(subquotient(L.FULL, v))
        second.extend(subquotient(L.FULL, u))
    return m, Multibasic(first), Multibasic(second)


def _scale_summand(j: KSubmodule, s: StandardBasic) -> Multibasic:
    u, v = s.presentation()
    return subquotient(L.join(L.product(j, u), v), v)


def scale(q: Rational, m, strict: bool = False) -> Multibasic:
    """``I_q M`` (or ``I_{>q} M`` when ``strict``) for ``q >= 0``."""
    q = as_exponent(q)
    if q < 0:
        raise ValueError("scale needs q >= 0")
    j = L.Igt(q) if strict else L.I(q)
    return as_multibasic(m).map(lambda s: _scale_summand(j, s))


def _ann_numerator(j: KSubmodule, s: StandardBasic) -> tuple[KSubmodule, KSubmodule, KSubmodule]:
    u, v = s.presentation()
    return u, L.meet(u, L.colon(v, j)), v


def ann_submodule(j: KSubmodule, m) -> Multibasic:
    """``ann(J, M) = {x in M : Jx = 0}`` computed summandwise as ``(U ∩ (V:J))/V``."""
    if not L.is_ideal(j):
        raise ValueError(f"{j} is not an ideal of A")

    def one(s):
        _, w, v = _ann_numerator(j, s)
        return subquotient(w, v)

    return as_multibasic(m).map(one)


def quotient_by_ann(j: KSubmodule, m) -> Multibasic:
    """``M / ann(J, M)``, summandwise ``U / (U ∩ (V:J))``."""
    if not L.is_ideal(j):
        raise ValueError(f"{j} is not an ideal of A")

    def one(s):
        u, w, _ = _ann_numerator(j, s)
        return subquotient(u, w)

    return as_multibasic(m).map(one)


def ann_t(m) -> Multibasic:
    """The t-torsion submodule; zero exactly for flat modules."""
    return ann_submodule(L.I(1), m)
