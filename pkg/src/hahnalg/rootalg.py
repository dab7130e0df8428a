"""Modules over ``P = A/I_{>1}``: truncated multibasics, P-duality and injective resolutions.

A multibasic A-module is a P-module exactly when ``I_{>1}`` kills it. The
indecomposable injective P-modules are ``P`` and ``Q = A/I_1``; resolutions
are described by their terms and by labels for the connecting maps.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from . import basic as B
from . import lattice as L
from .basic import Kind, Multibasic, StandardBasic, as_multibasic
from .functors import dual
from .series import DomainError, Rational, as_exponent, format_exponent

P = B.A_mod_Igt(1)
Q = B.A_mod_I(1)


class NotTruncated(DomainError):
    pass


def is_p_module(m) -> bool:
    """Whether ``I_{>1} M = 0``."""
    return not B.scale(1, m, strict=True)


@dataclass(frozen=True)
class TruncatedModule:
    underlying: Multibasic

    def __post_init__(self):
        m = as_multibasic(self.underlying)
        if not is_p_module(m):
            raise NotTruncated(f"{m} is not killed by I_(>1)")
        object.__setattr__(self, "underlying", m)


def _require_truncated(m) -> Multibasic:
    if isinstance(m, TruncatedModule):
        return m.underlying
    m = as_multibasic(m)
    if not is_p_module(m):
        raise NotTruncated(f"{m} is not killed by I_(>1)")
    return m


def p_dual(m) -> Multibasic:
    """``Hom_P(M, P)``, which agrees with the A-module dual on truncated modules."""
    out = dual(_require_truncated(m))
    assert is_p_module(out)
    return out


def is_injective_p(m) -> bool:
    return all(s in (P, Q) for s in _require_truncated(m))


def truncated_basics(params) -> list[StandardBasic]:
    """The standard basics killed by ``I_{>1}`` among those with the given parameters."""
    return [s for s in B.standard_basics(params) if is_p_module(s)]


def _hull_step(s: StandardBasic) -> tuple[StandardBasic, Optional[StandardBasic]]:
    """Injective P-hull of ``U/V`` and the cokernel of the embedding.

    The hull is ``(V : I_{>1}) / V``, which is ``P`` when ``V`` is an
    ``I_{>c}`` and ``Q`` when ``V`` is an ``I_c``.
    """
    u, v = s.presentation()
    w = L.colon(v, L.Igt(1))
    hull = B.normalize(w, v)
    rest = B.subquotient(w, u)
    return hull, (rest.summands[0] if rest else None)


_LABELS = {
    (Kind.A_MOD_I, "Q"): "alpha",
    (Kind.A_MOD_I, "P"): "beta",
    (Kind.A_MOD_IGT, "Q"): "gamma",
    (Kind.A_MOD_IGT, "P"): "delta",
}


def _name(hull: StandardBasic) -> str:
    return "P" if hull == P else "Q"


def map_label(source: StandardBasic, image: StandardBasic) -> str:
    """Label of the map out of the hull ``source`` whose image is ``image``.

    ``image`` is a cyclic truncated module: ``A/I_c`` (maps into Q) or
    ``A/I_{>c}`` (maps into P). The image ``F = A/I_{>0}`` gets the bare
    labels ``alpha`` (out of Q) and ``beta`` (out of P).
    """
    if image.kind is Kind.F:
        return "alpha" if source == Q else "beta"
    return f"{_LABELS[image.kind, _name(source)]}_{format_exponent(image.q)}"


@dataclass(frozen=True)
class PResolution:
    """``0 -> M -> I_0 -> I_1 -> ...`` by term names and map labels.

    ``maps[i]`` labels ``I_i -> I_{i+1}``. When ``period`` is 0 the resolution
    is finite and ``maps`` has one entry fewer than ``terms``. Otherwise
    entries from ``period_start`` on repeat with that period.
    """

    module: StandardBasic
    terms: tuple[str, ...]
    maps: tuple[str, ...]
    period_start: int
    period: int

    @property
    def finite(self) -> bool:
        return self.period == 0

    def _index(self, i: int) -> Optional[int]:
        if i < len(self.terms):
            return i
        if self.finite:
            return None
        return self.period_start + (i - self.period_start) % self.period

    def term(self, i: int) -> str:
        j = self._index(i)
        return "0" if j is None else self.terms[j]

    def map(self, i: int) -> str:
        j = self._index(i)
        if j is None or j >= len(self.maps):
            return "0"
        return self.maps[j]

    def to_json(self) -> dict:
        return {
            "module": str(self.module),
            "terms": list(self.terms),
            "maps": list(self.maps),
            "period_start": self.period_start,
            "period": self.period,
        }

    def __str__(self) -> str:
        parts = [self.terms[0]]
        for i in range(1, len(self.terms)):
            parts.append(f"-{self.maps[i - 1]}-> {self.terms[i]}")
        text = f"0 -> {self.module} -> " + " ".join(parts)
        if self.finite:
            return text + " -> 0"
        back = self.terms[self.period_start]
        return text + f" -{self.maps[-1]}-> {back} (repeats from {self.period_start})"


def p_injective_resolution(b: StandardBasic) -> PResolution:
    """Minimal injective resolution in P-modules of a truncated standard basic."""
    _require_truncated(b)
    seen: dict[StandardBasic, int] = {}
    terms: list[str] = []
    maps: list[str] = []
    current: Optional[StandardBasic] = b
    while current is not None:
        if current in seen:
            start = seen[current]
            return PResolution(b, tuple(terms), tuple(maps), start, len(terms) - start)
        seen[current] = len(terms)
        hull, rest = _hull_step(current)
        terms.append(_name(hull))
        if rest is not None:
            maps.append(map_label(hull, rest))
        current = rest
    return PResolution(b, tuple(terms), tuple(maps), len(terms), 0)


def ext_periodicity_check(b: StandardBasic, window: int = 8) -> bool:
    """Terms and map labels repeat with period 2 from ``period_start`` on.

    A finite resolution passes trivially (its tail is zero); an infinite one
    must also become periodic by index 2.
    """
    res = p_injective_resolution(b)
    if not res.finite and (res.period_start > 2 or res.period not in (1, 2)):
        return False
    for i in range(res.period_start, res.period_start + window):
        if res.term(i + 2) != res.term(i) or res.map(i + 2) != res.map(i):
            return False
    return True


def incoherence_witness(q: Rational) -> tuple[Multibasic, bool]:
    """Kernel of ``P -> I_q/I_{>1}`` (multiplication by ``t^q``) and whether it is finitely generated.

    The kernel is ``I_{>1-q}/I_{>1}``, which is ``I_{>0}/I_{>q}`` up to
    shift; it is finitely generated only when it vanishes at ``q = 0``.
    """
    q = as_exponent(q)
    if not 0 <= q <= 1:
        raise DomainError("q must lie in [0, 1]")
    kernel = B.subquotient(L.Igt(1 - q), L.Igt(1))
    return kernel, B.is_finitely_generated(kernel)
