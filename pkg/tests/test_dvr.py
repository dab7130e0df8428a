from itertools import product as pairs

import pytest

from hahnalg import dvr
from hahnalg.dvr import DA, DK, DTHETA, DvrKind, DvrMultibasic, dvr_dual, dvr_hom, dvr_invariants, dvr_tensor, torsion

NS = (1, 2, 3)

# Independent oracle: the same interval formulas over the integer-valued
# lattice 0 < ... < I_2 < I_1 < I_0 < ... < K of a discrete valuation ring.
ZERO, FULL = ("0",), ("K",)


def I(k):
    return ("I", k)


def key(u):
    return {"0": (0, 0), "K": (2, 0)}.get(u[0], (1, -u[1] if len(u) > 1 else 0))


def join(u, v):
    return u if key(u) >= key(v) else v


def meet(u, v):
    return u if key(u) <= key(v) else v


def prod(u, v):
    if ZERO in (u, v):
        return ZERO
    if FULL in (u, v):
        return FULL
    return I(u[1] + v[1])


def colon(u, v):
    if v == ZERO or u == FULL:
        return FULL
    if v == FULL or u == ZERO:
        return ZERO
    return I(u[1] - v[1])


def presentation(s):
    return {
        DvrKind.K: (FULL, ZERO),
        DvrKind.A: (I(0), ZERO),
        DvrKind.THETA: (FULL, I(1)),
        DvrKind.TORSION: (I(0), I(s.n)),
    }[s.kind]


def normalize(u, v):
    if key(u) <= key(v):
        return DvrMultibasic()
    if u == FULL:
        return DvrMultibasic.of(DK if v == ZERO else DTHETA)
    if v == ZERO:
        return DvrMultibasic.of(DA)
    return DvrMultibasic.of(torsion(v[1] - u[1]))


def oracle_hom(a, b):
    l0, n0 = presentation(a)
    l1, n1 = presentation(b)
    return normalize(meet(colon(l1, l0), colon(n1, n0)), colon(n1, l0))


def oracle_tensor(a, b):
    l0, n0 = presentation(a)
    l1, n1 = presentation(b)
    return normalize(prod(l0, l1), join(prod(l0, n1), prod(n0, l1)))


def basics():
    return [DK, DA, DTHETA] + [torsion(n) for n in NS]


# transcribed appendix tables: rows M, columns N over (K, A, Theta, A/I_n)
HOM = {
    "K": ("K", "0", "K", "0"),
    "A": ("K", "A", "Theta", "A/I(n)"),
    "Theta": ("0", "0", "A", "0"),
    "A/I(m)": ("0", "0", "A/I(m)", "A/I(min)"),
}
TENSOR = {
    "K": ("K", "K", "0", "0"),
    "A": ("K", "A", "Theta", "A/I(n)"),
    "Theta": ("0", "Theta", "0", "0"),
    "A/I(m)": ("0", "A/I(m)", "0", "A/I(min)"),
}
INVARIANTS = {
    DvrKind.K: (1, 1, 0, 0, "0"),
    DvrKind.A: (1, 0, 1, 0, "0"),
    DvrKind.THETA: (0, 1, 0, 1, "0"),
    DvrKind.TORSION: (0, 0, 1, 1, "I(n)"),
}


def cell(table, a, b):
    row = "A/I(m)" if a.kind is DvrKind.TORSION else dvr.render_atom(a)
    text = table[row][b.kind.value]
    text = text.replace("A/I(min)", f"A/I({min(a.n, b.n) if a.n and b.n else 0})")
    text = text.replace("A/I(m)", f"A/I({a.n})").replace("A/I(n)", f"A/I({b.n})")
    return dvr.parse(text)


@pytest.mark.parametrize("a,b", list(pairs(basics(), basics())))
def test_tables_reproduced(a, b):
    assert dvr_hom(a, b) == cell(HOM, a, b) == oracle_hom(a, b)
    assert dvr_tensor(a, b) == cell(TENSOR, a, b) == oracle_tensor(a, b)


def test_invariant_table_reproduced():
    for s in basics():
        inv = dvr_invariants(s)
        row = INVARIANTS[s.kind]
        assert inv.dims == row[:4]
        assert inv.ann_text() == row[4].replace("(n)", f"({s.n})")


def test_invariants_of_duals_swap_rows():
    for s in basics():
        a, b = dvr_invariants(s), dvr_invariants(dvr_dual(s))
        assert (a.dim_k, a.dim_f) == (b.dim_k_dual, b.dim_f_dual)


def test_examples():
    assert dvr_hom(torsion(2), torsion(3)) == DvrMultibasic.of(torsion(2))
    assert dvr_hom(DTHETA, DTHETA) == DvrMultibasic.of(DA)
    assert dvr_hom(DK, DA) == DvrMultibasic()
    assert dvr_tensor(DTHETA, DTHETA) == DvrMultibasic()
    assert dvr_tensor(torsion(3), torsion(1)) == DvrMultibasic.of(torsion(1))
    m = dvr.parse("K + Theta + A/I(2)")
    assert dvr_tensor(DA, m) == m
    assert dvr_dual(DA) == DvrMultibasic.of(DTHETA)
    assert dvr_dual(torsion(4)) == DvrMultibasic.of(torsion(4))
    assert dvr_dual(dvr_dual(DK)) == DvrMultibasic.of(DK)


def test_invariant_examples():
    inv = dvr_invariants(torsion(3))
    assert inv.dims == (0, 0, 1, 1) and inv.ann_text() == "I(3)"
    inv = dvr_invariants(dvr.parse("K + A"))
    assert inv.dims == (2, 1, 1, 0) and inv.ann_text() == "0"
    inv = dvr_invariants(DvrMultibasic())
    assert inv.dims == (0, 0, 0, 0) and inv.ann_text() == "A"
    assert dvr_invariants(dvr.parse("A/I(1) + A/I(3)")).ann_text() == "I(3)"


def test_dual_involution_on_all_kinds():
    for s in basics():
        assert dvr_dual(dvr_dual(s)) == DvrMultibasic.of(s)
    m = dvr.parse("K + A + Theta + A/I(1) + A/I(2)")
    assert dvr_dual(dvr_dual(m)) == m


def test_dual_is_hom_into_theta():
    for s in basics():
        assert dvr_dual(s) == dvr_hom(s, DTHETA)


def test_bilinearity():
    m, n = dvr.parse("K + A/I(2)"), dvr.parse("A + Theta + A/I(1)")
    expected = DvrMultibasic()
    for a in m:
        for b in n:
            expected = expected + dvr_hom(a, b)
    assert dvr_hom(m, n) == expected


def test_parse_render():
    assert dvr.render(dvr.parse("A/I(2) + Θ + K")) == "K + Theta + A/I(2)"
    assert dvr.render(dvr.parse("0")) == "0"
    for bad in ("A/I(0)", "B", "A/Iq(1)", ""):
        with pytest.raises(ValueError):
            dvr.parse(bad)


def test_agrees_with_hahn_engine_on_parallel_entries():
    """Torsion-free rows and A/I_m (x) A/I_n match the Hahn-ring formulas."""
    from hahnalg import basic as B
    from hahnalg.functors import hom, tensor

    to_hahn = {DK: B.K, DA: B.A}
    for a, b in pairs(to_hahn, to_hahn):
        assert [to_hahn[s] for s in dvr_hom(a, b)] == list(hom(to_hahn[a], to_hahn[b]))
        assert [to_hahn[s] for s in dvr_tensor(a, b)] == list(tensor(to_hahn[a], to_hahn[b]))
    for m, n in pairs(NS, NS):
        t = tensor(B.A_mod_I(m), B.A_mod_I(n))
        assert t == B.Multibasic.of(B.A_mod_I(min(m, n)))
        assert dvr_tensor(torsion(m), torsion(n)) == DvrMultibasic.of(torsion(min(m, n)))
