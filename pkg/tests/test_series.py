import random
from collections import Counter
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from hahnalg.series import (
    INFINITY,
    DomainError,
    FiniteSeries,
    TruncatedSeries,
    add,
    as_exponent,
    congruent,
    divide,
    format_exponent,
    invert_unit,
    mul,
    parse_exponent,
    unit_decompose,
    valuation,
)

from conftest import series_strategy


def S(*exps):
    return FiniteSeries([as_exponent(e) for e in exps])


def naive_mul(a: FiniteSeries, b: FiniteSeries) -> FiniteSeries:
    """Schoolbook product over Fractions, counting pair parities."""
    counts = Counter(u + v for u in a.support for v in b.support)
    return FiniteSeries([e for e, c in counts.items() if c % 2])


def test_add_examples():
    assert add(S(0, 1), S(1, 2)) == S(0, 2)
    a = S("1/3", 1, 5)
    assert a + a == FiniteSeries.zero()
    assert S("1/2") + S(1) == S("1/2", 1)


def test_mul_examples():
    assert mul(S(0, 1), S(0, 1)) == S(0, 2)
    assert S("1/2") * S("1/3") == S("5/6")
    left, right = S(0, "1/2"), S(0, "1/2", 1)
    assert left * right == naive_mul(left, right) == S(0, "3/2")


def test_valuation_examples():
    assert valuation(FiniteSeries.zero()) == INFINITY
    assert valuation(S("1/2", 1)) == Fraction(1, 2)
    assert valuation(S(0, 1) * S("3/2")) == Fraction(3, 2)


def test_unit_decompose_examples():
    assert unit_decompose(S("1/2", 1)) == (Fraction(1, 2), S(0, "1/2"))
    assert unit_decompose(S(0, 1)) == (0, S(0, 1))
    assert unit_decompose(S(3)) == (3, S(0))
    with pytest.raises(DomainError):
        unit_decompose(FiniteSeries.zero())


def test_invert_unit_examples():
    r = invert_unit(S(0, "1/2"), 2)
    assert r.head == S(0, "1/2", 1, "3/2", 2) and r.precision == 2
    assert congruent(r.head * S(0, "1/2"), FiniteSeries.one(), 2)
    assert invert_unit(FiniteSeries.one(), 5).head == FiniteSeries.one()
    r = invert_unit(S(0, 1), 3)
    assert r.head == S(0, 1, 2, 3)
    assert r.head * S(0, 1) == S(0, 4)
    with pytest.raises(DomainError):
        invert_unit(S("1/2"), 3)
    with pytest.raises(DomainError):
        invert_unit(FiniteSeries.zero(), 3)


def test_divide_examples():
    assert divide(S(1), S(1), 4).head == FiniteSeries.one()
    assert divide(S(0), S(1), 2).head == S(-1)
    r = divide(S(0), S(0, 1), 2)
    assert r.head == S(0, 1, 2)
    assert congruent(r.head * S(0, 1), S(0), 2)
    with pytest.raises(DomainError):
        divide(S(0), FiniteSeries.zero(), 3)


def test_truncate_boundary_is_closed():
    a = S(0, 1, 2, 3)
    assert a.truncate(2) == S(0, 1, 2)
    assert a.truncate("3/2") == S(0, 1)


def test_truncated_series_rejects_long_head():
    with pytest.raises(ValueError):
        TruncatedSeries(S(0, 3), Fraction(2))


def test_exponent_parsing():
    assert parse_exponent("3/6") == Fraction(1, 2)
    assert parse_exponent("-2") == -2
    assert format_exponent(Fraction(4, 2)) == "2"
    for bad in ("0.5", "1/0", "x", ""):
        with pytest.raises(ValueError):
            parse_exponent(bad)


def test_constructor_cancels_duplicates():
    assert FiniteSeries([1, 1, 2]) == S(2)


def test_json_round_trip():
    a = S(0, "1/2", 1)
    assert a.to_json() == ["0", "1/2", "1"]
    assert FiniteSeries.from_json(a.to_json()) == a
    with pytest.raises(ValueError):
        FiniteSeries.from_json(["1", "0"])


def test_large_exponents_use_fallback():
    big = S(2**62, 2**63 + 1)
    assert big * S(1) == S(2**62 + 1, 2**63 + 2)
    assert big + big == FiniteSeries.zero()


@given(series_strategy(), series_strategy(), series_strategy())
def test_ring_axioms(a, b, c):
    zero, one = FiniteSeries.zero(), FiniteSeries.one()
    assert a + b == b + a
    assert (a + b) + c == a + (b + c)
    assert a + zero == a and a + a == zero
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * one == a
    assert a * (b + c) == a * b + a * c


@given(series_strategy(), series_strategy())
def test_mul_matches_naive(a, b):
    assert a * b == naive_mul(a, b)


@given(series_strategy(), series_strategy())
def test_valuation_laws(a, b):
    if a.is_zero() or b.is_zero():
        return
    assert valuation(a * b) == valuation(a) + valuation(b)
    s = a + b
    assert valuation(s) >= min(valuation(a), valuation(b))
    if valuation(a) != valuation(b):
        assert valuation(s) == min(valuation(a), valuation(b))


@given(series_strategy(nonneg=True), st.sampled_from([0, Fraction(1, 2), 2, 5, 10]))
def test_unit_inverse(tail, n):
    u = FiniteSeries.one() + FiniteSeries([e for e in tail.support if e > 0])
    r = invert_unit(u, n)
    assert (u * r.head).truncate(n) == FiniteSeries.one()


@given(series_strategy())
def test_unit_decompose_round_trip(a):
    if a.is_zero():
        return
    v, u = unit_decompose(a)
    assert valuation(u) == 0
    assert u.shift(v) == a


@given(series_strategy(), series_strategy(), st.sampled_from([1, Fraction(5, 2), 4]))
def test_divide_multiplies_back(a, b, n):
    if b.is_zero():
        return
    r = divide(a, b, n)
    assert congruent(r.head * b, a, n)


def test_mul_truncated_matches_truncate():
    rng = random.Random(4)
    for _ in range(200):
        a = FiniteSeries(rng.sample(range(12), rng.randint(0, 6)))
        b = FiniteSeries([Fraction(x, 3) for x in rng.sample(range(12), rng.randint(0, 6))])
        n = Fraction(rng.randint(0, 20), 4)
        assert a.mul_truncated(b, n) == (a * b).truncate(n)
