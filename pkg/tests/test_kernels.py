"""The compiled and pure-Python support kernels must agree exactly."""

import random

import pytest
from hypothesis import given, strategies as st

from hahnalg import _pykernels, kernels

fast = pytest.importorskip("hahnalg._kernels")

ints = st.lists(st.integers(-10_000, 10_000), unique=True, max_size=40).map(lambda xs: tuple(sorted(xs)))


def test_backend_selected():
    assert kernels.BACKEND in ("cython", "python")


@given(ints, ints)
def test_xor_merge_agrees(a, b):
    assert fast.xor_merge(a, b) == _pykernels.xor_merge(a, b)


@given(ints, ints, st.one_of(st.none(), st.integers(-20_000, 20_000)))
def test_mul_mod2_agrees(a, b, cap):
    assert fast.mul_mod2(a, b, cap) == _pykernels.mul_mod2(a, b, cap)


def test_overflow_falls_back():
    a = (2**62, 2**63)
    with pytest.raises(OverflowError):
        fast.mul_mod2(a, (1,))
    assert kernels.mul_mod2(a, (1,)) == _pykernels.mul_mod2(a, (1,))
    assert kernels.xor_merge(a, (0,)) == (0,) + a


def test_large_random_products_agree():
    rng = random.Random(3)
    for _ in range(50):
        a = tuple(sorted(rng.sample(range(500), 60)))
        b = tuple(sorted(rng.sample(range(500), 60)))
        assert fast.mul_mod2(a, b) == _pykernels.mul_mod2(a, b)
