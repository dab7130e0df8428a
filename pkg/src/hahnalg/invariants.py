"""Multibasic invariants: f, g, the step function eta, jumps, and the Psi counters."""

from __future__ import annotations

from bisect import bisect_left
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from fractions import Fraction

from . import basic as B
from .basic import Kind, Multibasic, StandardBasic, as_multibasic
from .functors import dual, hom, tensor
from .series import DomainError, Rational, as_exponent


@dataclass(frozen=True)
class StepFunction:
    """Integer-valued piecewise-constant function on ``[0, inf)``.

    ``at[i]`` is the value at ``breakpoints[i]`` and ``after[i]`` the value on
    the open interval up to the next breakpoint (the last one is the tail).
    Point values are stored separately because eta need not be continuous
    from either side: eta of ``A/I_{>q}`` keeps its value at ``q``, eta of
    ``A/I_q`` does not.
    """

    breakpoints: tuple[Fraction, ...]
    at: tuple[int, ...]
    after: tuple[int, ...]

    def __post_init__(self):
        if not self.breakpoints or self.breakpoints[0] != 0:
            raise ValueError("the first breakpoint must be 0")
        if any(a >= b for a, b in zip(self.breakpoints, self.breakpoints[1:])):
            raise ValueError("breakpoints must be strictly increasing")
        if not len(self.breakpoints) == len(self.at) == len(self.after):
            raise ValueError("one point value and one interval value per breakpoint")

    @classmethod
    def constant(cls, value: int) -> "StepFunction":
        return cls((Fraction(0),), (value,), (value,))

    def __call__(self, q: Rational) -> int:
        q = as_exponent(q)
        if q < 0:
            raise DomainError("step functions live on [0, inf)")
        i = bisect_left(self.breakpoints, q)
        if i < len(self.breakpoints) and self.breakpoints[i] == q:
            return self.at[i]
        return self.after[i - 1]

    def left_limit(self, q: Rational) -> int:
        q = as_exponent(q)
        if q <= 0:
            raise DomainError("no left limit at or below 0")
        i = bisect_left(self.breakpoints, q)
        return self.after[i - 1]

    def right_limit(self, q: Rational) -> int:
        q = as_exponent(q)
        i = bisect_left(self.breakpoints, q)
        if i < len(self.breakpoints) and self.breakpoints[i] == q:
            return self.after[i]
        return self.after[i - 1]

    @property
    def tail(self) -> int:
        return self.after[-1]

    def __add__(self, other: "StepFunction") -> "StepFunction":
        points = sorted(set(self.breakpoints) | set(other.breakpoints))
        return _canonical(
            points,
            [self(b) + other(b) for b in points],
            [self.right_limit(b) + other.right_limit(b) for b in points],
        )

    def jumps(self) -> tuple[Fraction, ...]:
        """Breakpoints other than 0 (after canonicalisation these all carry a jump)."""
        return self.breakpoints[1:]


def _canonical(points, at, after) -> StepFunction:
    keep_b, keep_at, keep_after = [points[0]], [at[0]], [after[0]]
    for b, x, y in zip(points[1:], at[1:], after[1:]):
        if x == keep_after[-1] and y == x:
            continue
        keep_b.append(b)
        keep_at.append(x)
        keep_after.append(y)
    return StepFunction(tuple(keep_b), tuple(keep_at), tuple(keep_after))


def f_dim(m) -> int:
    """``dim_K(K ⊗ M)``: the number of flat summands."""
    out = tensor(B.K, m)
    assert all(s.kind is Kind.K for s in out)
    return len(out)


def g_dim(m) -> int:
    """``dim_F(F ⊗ M)``: the number of finitely generated summands."""
    out = tensor(B.F, m)
    assert all(s.kind is Kind.F for s in out)
    return len(out)


@lru_cache(maxsize=4096)
def _eta_one(s: StandardBasic) -> StepFunction:
    # g(I_q S) is constant off {0, length}; evaluate it there and in between
    points = [Fraction(0)]
    if s.q is not None:
        points.append(s.q)
    probes = points + [points[-1] + 1]
    at = [g_dim(B.scale(b, s)) for b in points]
    after = [g_dim(B.scale((lo + hi) / 2, s)) for lo, hi in zip(probes, probes[1:])]
    return _canonical(points, at, after)


def eta(m) -> StepFunction:
    """``q -> g(I_q M)``, built exactly from the summands."""
    total = StepFunction.constant(0)
    for s in as_multibasic(m):
        total = total + _eta_one(s)
    return total


def delta_plus(s: StepFunction, q: Rational) -> int:
    """``lim_{p -> q-} s(p) - s(q)`` for ``q > 0``."""
    q = as_exponent(q)
    if q <= 0:
        raise DomainError("delta_plus is defined for q > 0")
    return s.left_limit(q) - s(q)


def delta_minus(s: StepFunction, q: Rational) -> int:
    """``s(q) - lim_{p -> q+} s(p)`` for ``q >= 0``."""
    q = as_exponent(q)
    if q < 0:
        raise DomainError("delta_minus is defined for q >= 0")
    return s(q) - s.right_limit(q)


def limit(s: StepFunction) -> int:
    return s.tail


class _PsiInputs:
    """The step functions every Psi counter is built from, computed once per module."""

    def __init__(self, m: Multibasic):
        dm = dual(m)
        self.f = f_dim(m)
        self.m = eta(m)
        self.dm = eta(dm)
        self.hm = eta(hom(B.IGT0, m))
        self.hdm = eta(hom(B.IGT0, dm))

    def jumps(self) -> set[Fraction]:
        return set(self.m.jumps()) | set(self.dm.jumps()) | set(self.hm.jumps())

    def count(self, v: StandardBasic) -> int:
        k, q = v.kind, v.q
        if k is Kind.A:
            return limit(self.m)
        if k is Kind.F:
            return delta_minus(self.m, 0)
        if k is Kind.A_MOD_I:
            return delta_plus(self.m, q)
        if k is Kind.A_MOD_IGT:
            return delta_minus(self.m, q)
        if k is Kind.THETA:
            return limit(self.dm)
        if k is Kind.IGT0_MOD_IGT:
            return delta_plus(self.dm, q)
        if k is Kind.IGT0:
            return limit(self.hm) - limit(self.m)
        if k is Kind.K:
            return self.f - limit(self.m) - (limit(self.hm) - limit(self.m))
        if k is Kind.PHI:
            return limit(self.hdm) - limit(self.dm)
        if k is Kind.IGT0_MOD_I:
            return (
                delta_plus(self.hm, q)
                - delta_plus(self.m, q)
                - delta_minus(self.m, q)
                - delta_plus(self.dm, q)
            )
        raise AssertionError(k)


def psi_count(v: StandardBasic, m) -> int:
    """Number of summands of ``M`` isomorphic to ``v``, from invariants alone.

    ``Hom(I_{>0}, -)`` enters through ``Psi(I_{>0})``, and ``Psi(K)`` is
    ``f - Psi(A) - Psi(I_{>0})``; duals handle Theta, Phi and ``I_{>0}/I_{>q}``.
    """
    return _inputs(as_multibasic(m)).count(v)


@lru_cache(maxsize=512)
def _inputs(m: Multibasic) -> _PsiInputs:
    return _PsiInputs(m)


@dataclass
class InvariantReport:
    f: int
    g: int
    psi: dict = field(default_factory=dict)

    def multibasic(self) -> Multibasic:
        out = []
        for v, n in self.psi.items():
            out.extend([v] * n)
        return Multibasic(out)

    def to_json(self) -> dict:
        from .expr import render_atom

        return {
            "f": self.f,
            "g": self.g,
            "psi": {render_atom(v): n for v, n in sorted(self.psi.items())},
        }


def probe_parameters(m) -> set[Fraction]:
    """Lengths at which some Psi counter can be nonzero.

    Read off the jumps of eta for ``M``, ``DM`` and ``Hom(I_{>0}, M)``; every
    per-summand eta is nonincreasing, so jumps never cancel.
    """
    return _inputs(as_multibasic(m)).jumps()


def decompose_report(m, extra_probes=()) -> InvariantReport:
    """Recover the summand multiset of ``M`` purely from the Psi counters."""
    m = as_multibasic(m)
    inputs = _inputs(m)
    probes = inputs.jumps() | m.parameters()
    probes |= {as_exponent(x) for x in extra_probes if as_exponent(x) > 0}
    psi: Counter = Counter()
    for v in B.standard_basics(sorted(probes)):
        n = inputs.count(v)
        if n < 0:
            raise AssertionError(f"negative count {n} for {v}")
        if n:
            psi[v] = n
    return InvariantReport(f=inputs.f, g=g_dim(m), psi=dict(psi))
