from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from hahnalg import basic as B
from hahnalg import lattice as L
from hahnalg.expr import parse, parse_atom
from hahnalg.functors import dual
from hahnalg.rootalg import (
    P,
    Q,
    NotTruncated,
    PResolution,
    TruncatedModule,
    ext_periodicity_check,
    incoherence_witness,
    is_injective_p,
    is_p_module,
    p_dual,
    p_injective_resolution,
    truncated_basics,
)
from hahnalg.series import DomainError

M = parse
PARAMS = (Fraction(1, 3), Fraction(1, 2), Fraction(2, 3), Fraction(1))


def test_is_p_module_examples():
    assert is_p_module(M("A/Igt(1)"))
    assert not is_p_module(M("A/Iq(2)"))
    assert not is_p_module(M("Theta"))
    assert is_p_module(M("A/Iq(1)"))
    assert is_p_module(B.ZERO_MODULE)


def test_truncated_kinds():
    kinds = {(s.kind, s.q) for s in truncated_basics([Fraction(1, 2), Fraction(3, 2)])}
    assert (B.Kind.F, None) in kinds
    assert all(q is None or q <= 1 for _, q in kinds)
    assert len(kinds) == 5


def test_p_dual_examples():
    assert p_dual(P) == M("A/Igt(1)")
    assert p_dual(M("A/Iq(1/2)")) == M("Igt0/Igt(1/2)")
    assert p_dual(M("F")) == M("F")
    with pytest.raises(NotTruncated):
        p_dual(M("A/Iq(2)"))


def test_p_dual_involution():
    for s in truncated_basics(PARAMS):
        assert p_dual(p_dual(s)) == B.Multibasic.of(s)


def test_is_injective_p_examples():
    assert is_injective_p(M("A/Igt(1) + A/Iq(1)"))
    assert not is_injective_p(M("F"))
    assert is_injective_p(B.ZERO_MODULE)
    with pytest.raises(NotTruncated):
        is_injective_p(M("A"))


def test_truncated_module_wrapper():
    t = TruncatedModule(M("F + A/Iq(1/2)"))
    assert p_dual(t) == M("F + Igt0/Igt(1/2)")
    with pytest.raises(NotTruncated):
        TruncatedModule(M("K"))


def test_injective_p_modules_from_annihilators():
    assert B.ann_submodule(L.Igt(1), M("Theta")) == B.Multibasic.of(P)
    assert B.ann_submodule(L.Igt(1), M("Phi")) == B.Multibasic.of(Q)


def shape(atom):
    r = p_injective_resolution(parse_atom(atom))
    return list(r.terms), list(r.maps), r.period_start, r.period


def test_finite_resolutions():
    assert shape("Igt0/Iq(1)") == (["Q", "P", "Q"], ["alpha", "beta_1"], 3, 0)
    assert shape("Igt0/Igt(1)") == (["P", "P", "Q"], ["beta", "beta_1"], 3, 0)
    assert shape("F") == (["P", "Q"], ["beta_1"], 2, 0)
    assert shape("A/Iq(1)") == (["Q"], [], 1, 0)
    assert shape("A/Igt(1)") == (["P"], [], 1, 0)


def test_periodic_resolutions():
    assert shape("A/Iq(1/3)") == (["Q", "Q"], ["alpha_2/3", "alpha_1/3"], 0, 2)
    assert shape("A/Iq(1/2)") == (["Q"], ["alpha_1/2"], 0, 1)
    assert shape("A/Igt(1/3)") == (["P", "Q", "Q"], ["beta_2/3", "alpha_1/3", "alpha_2/3"], 1, 2)
    assert shape("Igt0/Iq(1/3)")[:2] == (
        ["Q", "P", "Q", "Q"],
        ["gamma_2/3", "beta_1/3", "alpha_2/3", "alpha_1/3"],
    )
    assert shape("Igt0/Igt(1/3)")[:2] == (
        ["P", "P", "Q", "Q"],
        ["delta_2/3", "beta_1/3", "alpha_2/3", "alpha_1/3"],
    )


def test_resolution_unrolling():
    r = p_injective_resolution(parse_atom("A/Iq(1/3)"))
    assert [r.term(i) for i in range(5)] == ["Q"] * 5
    assert [r.map(i) for i in range(4)] == ["alpha_2/3", "alpha_1/3"] * 2
    f = p_injective_resolution(parse_atom("F"))
    assert f.term(5) == "0" and f.map(1) == "0"
    assert str(f) == "0 -> F -> P -beta_1-> Q -> 0"
    assert f.to_json()["terms"] == ["P", "Q"]


def test_resolution_terms_are_annihilator_hulls():
    """Each term is ann(I_{>1}, K/V), the truncated part of the A-module hull."""
    for s in truncated_basics(PARAMS):
        r = p_injective_resolution(s)
        current = s
        for i in range(len(r.terms)):
            hull = B.ann_submodule(L.Igt(1), B.injective_hull(current)).summands[0]
            assert ("P" if hull == P else "Q") == r.terms[i]
            assert hull in (P, Q)
            u, v = current.presentation()
            rest = B.subquotient(L.colon(v, L.Igt(1)), u)
            if not rest:
                break
            current = rest.summands[0]


def test_periodicity_for_all_truncated_basics():
    for s in truncated_basics(PARAMS):
        res = p_injective_resolution(s)
        assert ext_periodicity_check(s)
        if not res.finite:
            assert res.period_start <= 2 and res.period in (1, 2)


@given(st.fractions(min_value=0, max_value=1, max_denominator=30))
def test_periodicity_property(q):
    for s in truncated_basics([q] if q > 0 else []):
        assert ext_periodicity_check(s)


def test_non_truncated_resolution_rejected():
    with pytest.raises(NotTruncated):
        p_injective_resolution(parse_atom("A/Iq(3/2)"))


def test_incoherence_examples():
    assert incoherence_witness(Fraction(1, 2)) == (M("Igt0/Igt(1/2)"), False)
    assert incoherence_witness(0) == (B.ZERO_MODULE, True)
    assert incoherence_witness(1) == (M("Igt0/Igt(1)"), False)
    for bad in (Fraction(-1, 2), 2):
        with pytest.raises(DomainError):
            incoherence_witness(bad)


@given(st.fractions(min_value=0, max_value=1, max_denominator=50))
def test_incoherence_kernel_kind(q):
    kernel, fp = incoherence_witness(q)
    assert fp == (q == 0)
    if q:
        assert kernel == M(f"Igt0/Igt({q.numerator}/{q.denominator})")


def test_truncation_not_closed_under_extensions_witness():
    assert not is_p_module(M("A/Iq(2)")) and is_p_module(Q)


def test_p_dual_matches_dual():
    for s in truncated_basics(PARAMS):
        assert p_dual(s) == dual(s)


def test_presolution_is_frozen():
    r = p_injective_resolution(P)
    assert isinstance(r, PResolution)
    with pytest.raises(AttributeError):
        r.period = 3
