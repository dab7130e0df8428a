import random
from fractions import Fraction

import pytest
from hypothesis import settings, strategies as st

from hahnalg import basic as B
from hahnalg.basic import Kind, Multibasic, StandardBasic
from hahnalg.series import FiniteSeries

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

PARAMS = (Fraction(1, 3), Fraction(1, 2), Fraction(1), Fraction(3, 2), Fraction(2))
EXPONENTS = (Fraction(0), Fraction(1, 3), Fraction(1, 2), Fraction(2, 3), Fraction(1), Fraction(3, 2), Fraction(2))

ACCEPTANCE_RESULTS: dict[int, tuple[bool, str]] = {}


def random_multibasic(rng: random.Random, max_summands: int = 8, params=PARAMS) -> Multibasic:
    pool = B.standard_basics(params)
    return Multibasic(rng.choice(pool) for _ in range(rng.randint(0, max_summands)))


def random_series(rng: random.Random, exponents=EXPONENTS, max_terms: int = 4, allow_negative=False):
    exps = list(exponents)
    if allow_negative:
        exps += [-e for e in exponents if e]
    return FiniteSeries(rng.sample(exps, rng.randint(0, min(max_terms, len(exps)))))


def standard_basic_strategy(params=PARAMS):
    return st.builds(
        lambda k, q: StandardBasic(k, q if k.parameterized else None),
        st.sampled_from(list(Kind)),
        st.sampled_from(params),
    )


def multibasic_strategy(max_size: int = 8, params=PARAMS):
    return st.lists(standard_basic_strategy(params), max_size=max_size).map(Multibasic)


exponent_strategy = st.fractions(min_value=-3, max_value=3, max_denominator=12)


def series_strategy(max_terms: int = 5, nonneg: bool = False):
    exps = st.fractions(min_value=0 if nonneg else -3, max_value=3, max_denominator=12)
    return st.sets(exps, max_size=max_terms).map(FiniteSeries)


@pytest.fixture
def rng():
    return random.Random(20260101)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE_RESULTS):
        ok, detail = ACCEPTANCE_RESULTS[n]
        terminalreporter.write_line(f"criterion {n}: {'PASS' if ok else 'FAIL'} - {detail}")
