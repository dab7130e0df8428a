"""D, ⊗, Hom, Tor and Ext on multibasic modules via the interval formulas.

For ``M0 = L0/N0`` and ``M1 = L1/N1``:

    M0 ⊗ M1      = L0L1 / (L0N1 + N0L1)
    Tor(M0, M1)  = (N0L1 ∩ L0N1) / N0N1
    Hom(M0, M1)  = ((L1:L0) ∩ (N1:N0)) / (N1:L0)
    Ext(M0, M1)  = (L1:N0) / ((L1:L0) + (N1:N0))
    D(U/V)       = V° / U°

Everything extends additively over direct sums; higher Tor and Ext vanish.
"""

from __future__ import annotations

import enum
from itertools import product as _pairs

from . import lattice as L
from .basic import Multibasic, StandardBasic, as_multibasic, subquotient


class FunctorName(enum.Enum):
    DUAL = "dual"
    TENSOR = "tensor"
    HOM = "hom"
    TOR = "tor"
    EXT = "ext"


def _dual_one(s: StandardBasic) -> Multibasic:
    u, v = s.presentation()
    return subquotient(L.circle(v), L.circle(u))


def _tensor_one(a: StandardBasic, b: StandardBasic) -> Multibasic:
    l0, n0 = a.presentation()
    l1, n1 = b.presentation()
    return subquotient(L.product(l0, l1), L.join(L.product(l0, n1), L.product(n0, l1)))


def _tor_one(a: StandardBasic, b: StandardBasic) -> Multibasic:
    l0, n0 = a.presentation()
    l1, n1 = b.presentation()
    return subquotient(L.meet(L.product(n0, l1), L.product(l0, n1)), L.product(n0, n1))


def _hom_one(a: StandardBasic, b: StandardBasic) -> Multibasic:
    l0, n0 = a.presentation()
    l1, n1 = b.presentation()
    return subquotient(L.meet(L.colon(l1, l0), L.colon(n1, n0)), L.colon(n1, l0))


def _ext_one(a: StandardBasic, b: StandardBasic) -> Multibasic:
    l0, n0 = a.presentation()
    l1, n1 = b.presentation()
    return subquotient(L.colon(l1, n0), L.join(L.colon(l1, l0), L.colon(n1, n0)))


def _bilinear(one):
    def extended(m, n) -> Multibasic:
        out: list[StandardBasic] = []
        for a, b in _pairs(as_multibasic(m), as_multibasic(n)):
            out.extend(one(a, b))
        return Multibasic(out)

    extended.__name__ = one.__name__.strip("_").replace("_one", "")
    return extended


def dual(m) -> Multibasic:
    return as_multibasic(m).map(_dual_one)


tensor = _bilinear(_tensor_one)
tor = _bilinear(_tor_one)
hom = _bilinear(_hom_one)
ext = _bilinear(_ext_one)

tensor.__doc__ = "M ⊗ N."
tor.__doc__ = "Tor_1(M, N)."
hom.__doc__ = "Hom(M, N)."
ext.__doc__ = "Ext^1(M, N)."


def higher(functor, i: int, m, n) -> Multibasic:
    """Tor_i or Ext^i for ``i >= 2``, which always vanish over A."""
    name = FunctorName(functor) if not isinstance(functor, FunctorName) else functor
    if name not in (FunctorName.TOR, FunctorName.EXT):
        raise ValueError("higher() only covers Tor and Ext")
    if i < 2:
        raise ValueError("use tensor/hom for i = 0 and tor/ext for i = 1")
    return Multibasic()


def apply(functor, m, n=None) -> Multibasic:
    name = FunctorName(functor) if not isinstance(functor, FunctorName) else functor
    if name is FunctorName.DUAL:
        if n is not None:
            raise ValueError("dual takes one argument")
        return dual(m)
    if n is None:
        raise ValueError(f"{name.value} takes two arguments")
    return {
        FunctorName.TENSOR: tensor,
        FunctorName.HOM: hom,
        FunctorName.TOR: tor,
        FunctorName.EXT: ext,
    }[name](m, n)
