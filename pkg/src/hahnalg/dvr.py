"""Multibasic modules over a complete discrete valuation ring.

Here the standard basics are ``K``, ``A``, ``Theta = K/I_1`` and ``A/I_n``
for integers ``n >= 1``. Hom and tensor are the bi-additive extensions of
the two 4x4 tables, and the invariants are sums of per-summand rows.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from itertools import product as _pairs
from typing import Iterable, Optional


class DvrKind(enum.Enum):
    K = 0
    A = 1
    THETA = 2
    TORSION = 3


@dataclass(frozen=True)
class DvrBasic:
    kind: DvrKind
    n: int = 0

    def __post_init__(self):
        if self.kind is DvrKind.TORSION:
            if not isinstance(self.n, int) or self.n < 1:
                raise ValueError("A/I(n) needs an integer n >= 1")
        elif self.n != 0:
            raise ValueError(f"{self.kind.name} takes no parameter")

    def sort_key(self):
        return (self.kind.value, self.n)

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def __str__(self) -> str:
        return render_atom(self)


DK = DvrBasic(DvrKind.K)
DA = DvrBasic(DvrKind.A)
DTHETA = DvrBasic(DvrKind.THETA)


def torsion(n: int) -> DvrBasic:
    return DvrBasic(DvrKind.TORSION, n)


class DvrMultibasic:
    __slots__ = ("summands",)

    def __init__(self, summands: Iterable[DvrBasic] = ()):
        object.__setattr__(self, "summands", tuple(sorted(summands)))

    def __setattr__(self, name, value):
        raise AttributeError("DvrMultibasic is immutable")

    @classmethod
    def of(cls, *summands: DvrBasic) -> "DvrMultibasic":
        return cls(summands)

    def __iter__(self):
        return iter(self.summands)

    def __len__(self) -> int:
        return len(self.summands)

    def __bool__(self) -> bool:
        return bool(self.summands)

    def __add__(self, other: "DvrMultibasic") -> "DvrMultibasic":
        return DvrMultibasic(self.summands + _as_multi(other).summands)

    def __eq__(self, other) -> bool:
        if isinstance(other, DvrBasic):
            return self.summands == (other,)
        if not isinstance(other, DvrMultibasic):
            return NotImplemented
        return self.summands == other.summands

    def __hash__(self) -> int:
        return hash(self.summands)

    def __repr__(self) -> str:
        return f"DvrMultibasic({render(self)!r})"

    def __str__(self) -> str:
        return render(self)


def _as_multi(m) -> DvrMultibasic:
    if isinstance(m, DvrMultibasic):
        return m
    if isinstance(m, DvrBasic):
        return DvrMultibasic.of(m)
    return DvrMultibasic(m)


_Z = ()


def _hom_one(a: DvrBasic, b: DvrBasic) -> tuple:
    k, l = a.kind, b.kind
    if k is DvrKind.K:
        return (DK,) if l in (DvrKind.K, DvrKind.THETA) else _Z
    if k is DvrKind.A:
        return (b,)
    if k is DvrKind.THETA:
        return (DA,) if l is DvrKind.THETA else _Z
    if l is DvrKind.THETA:
        return (a,)
    if l is DvrKind.TORSION:
        return (torsion(min(a.n, b.n)),)
    return _Z


def _tensor_one(a: DvrBasic, b: DvrBasic) -> tuple:
    k, l = a.kind, b.kind
    if k is DvrKind.A:
        return (b,)
    if l is DvrKind.A:
        return (a,)
    if k is DvrKind.K and l is DvrKind.K:
        return (DK,)
    if k is DvrKind.TORSION and l is DvrKind.TORSION:
        return (torsion(min(a.n, b.n)),)
    return _Z


def _bilinear(one, m, n) -> DvrMultibasic:
    out = []
    for a, b in _pairs(_as_multi(m), _as_multi(n)):
        out.extend(one(a, b))
    return DvrMultibasic(out)


def dvr_hom(m, n) -> DvrMultibasic:
    return _bilinear(_hom_one, m, n)


def dvr_tensor(m, n) -> DvrMultibasic:
    return _bilinear(_tensor_one, m, n)


_DUAL = {DvrKind.K: DvrKind.K, DvrKind.A: DvrKind.THETA, DvrKind.THETA: DvrKind.A}


def dvr_dual(m) -> DvrMultibasic:
    """``Hom(-, Theta)``: swaps A and Theta, fixes K and every A/I_n."""
    return DvrMultibasic(
        s if s.kind is DvrKind.TORSION else DvrBasic(_DUAL[s.kind]) for s in _as_multi(m)
    )


# rows: dim_K(K⊗M), dim_K(K⊗DM), dim_F(F⊗M), dim_F(F⊗DM)
_INVARIANT_ROWS = {
    DvrKind.K: (1, 1, 0, 0),
    DvrKind.A: (1, 0, 1, 0),
    DvrKind.THETA: (0, 1, 0, 1),
    DvrKind.TORSION: (0, 0, 1, 1),
}


@dataclass(frozen=True)
class DvrInvariants:
    dim_k: int
    dim_k_dual: int
    dim_f: int
    dim_f_dual: int
    ann: Optional[int]  # None for the zero ideal; 0 means ann = A

    @property
    def dims(self) -> tuple[int, int, int, int]:
        return (self.dim_k, self.dim_k_dual, self.dim_f, self.dim_f_dual)

    def ann_text(self) -> str:
        if self.ann is None:
            return "0"
        return "A" if self.ann == 0 else f"I({self.ann})"

    def to_json(self) -> dict:
        return {
            "dim_K(K@M)": self.dim_k,
            "dim_K(K@DM)": self.dim_k_dual,
            "dim_F(F@M)": self.dim_f,
            "dim_F(F@DM)": self.dim_f_dual,
            "ann": self.ann_text(),
        }


def dvr_invariants(m) -> DvrInvariants:
    """Summed invariant rows; the annihilator is the intersection over summands."""
    totals = [0, 0, 0, 0]
    ann: Optional[int] = 0
    for s in _as_multi(m):
        for i, x in enumerate(_INVARIANT_ROWS[s.kind]):
            totals[i] += x
        if s.kind is not DvrKind.TORSION:
            ann = None
        elif ann is not None:
            ann = max(ann, s.n)
    return DvrInvariants(*totals, ann=ann)


_ATOM = re.compile(r"\s*(?:(K|A/I\(\s*(\d+)\s*\)|A|Theta|Θ))\s*")


def parse_atom(text: str) -> DvrBasic:
    m = _ATOM.fullmatch(text)
    if not m:
        raise ValueError(f"unknown DVR atom {text.strip()!r}")
    name = m.group(1)
    if name == "K":
        return DK
    if name == "A":
        return DA
    if name in ("Theta", "Θ"):
        return DTHETA
    n = int(m.group(2))
    if n < 1:
        raise ValueError("A/I(n) needs n >= 1")
    return torsion(n)


def parse(text: str) -> DvrMultibasic:
    """Parse e.g. ``"A/I(2) + Theta"``; ``"0"`` is the zero module."""
    if text.strip() == "0":
        return DvrMultibasic()
    return DvrMultibasic(parse_atom(part) for part in text.split("+"))


def render_atom(s: DvrBasic) -> str:
    if s.kind is DvrKind.TORSION:
        return f"A/I({s.n})"
    return {DvrKind.K: "K", DvrKind.A: "A", DvrKind.THETA: "Theta"}[s.kind]


def render(m: DvrMultibasic) -> str:
    if not m:
        return "0"
    return " + ".join(render_atom(s) for s in m)
