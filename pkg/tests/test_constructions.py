from __future__ import annotations

import pytest

from fixtures import HUB_AB, HUB_BC, HUB_CD, hub_chain
from milp_oracle import oitr_milp
from oitrd.constructions import (
    ConstructionError,
    combine_cover_dominating_clawfree,
    combine_cover_total,
    combine_oitd_dominating,
    fpq_certificates,
    fpq_oitrdf_repaired,
    fpq_values,
    lift_oirdf,
    oitrdf_circulant,
    oitrdf_closed_family,
    oitrdf_product_kk,
    oitrdf_sierpinski,
    sierpinski_weight,
)
from oitrd.generators import complete, complete_bipartite, gen_circulant, gen_fpq, star, wheel
from oitrd.graph import DomainError, InputError
from oitrd.labeling import RomanLabeling, labeling_from_sets, validate
from oitrd.solvers import full_record, solve_roman_parameter


@pytest.mark.parametrize(
    "kind,params,weight",
    [("complete_bipartite", (3, 5), 5), ("wheel", (9,), 6), ("complete", (7,), 7), ("wheel", (4,), 4), ("wheel", (10,), 7)],
)
def test_closed_families(kind, params, weight):
    out = oitrdf_closed_family(kind, *params)
    assert out.weight == out.claimed_weight == weight and out.checked.valid


@pytest.mark.parametrize("kind,params", [("complete_bipartite", (2, 5)), ("wheel", (3,)), ("complete", (1,)), ("cycle", (5,))])
def test_closed_family_ranges(kind, params):
    with pytest.raises(InputError):
        oitrdf_closed_family(kind, *params)


@pytest.mark.parametrize("n,k,weight", [(9, 2, 8), (12, 2, 10), (10, 3, 9)])
def test_circulant_examples(n, k, weight):
    assert oitrdf_circulant(n, k).weight == weight


def test_circulant_matches_solver():
    for n in range(5, 12):
        for k in range(2, n // 2 + 1):
            out = oitrdf_circulant(n, k)
            assert out.weight == solve_roman_parameter(out.graph.graph, "oitR")[0], (n, k)


def test_circulant_range():
    with pytest.raises(InputError):
        oitrdf_circulant(9, 1)


@pytest.mark.parametrize("p,n,weight", [(4, 2, 14), (5, 2, 23), (3, 3, 23), (3, 2, 8), (4, 3, 56)])
def test_sierpinski_examples(p, n, weight):
    out = oitrdf_sierpinski(p, n)
    assert out.weight == weight == sierpinski_weight(p, n)


@pytest.mark.parametrize("p,n", [(6, 2), (7, 2), (5, 3), (3, 4), (4, 4), (3, 5)])
def test_sierpinski_wider_range(p, n):
    out = oitrdf_sierpinski(p, n)
    assert out.checked.valid and out.weight == sierpinski_weight(p, n)


def test_sierpinski_one_zero_per_clique():
    p, n = 5, 3
    out = oitrdf_sierpinski(p, n)
    zeros = out.labeling.V0
    assert len(zeros) == p ** (n - 1)
    assert {v // p for v in zeros} == set(range(p ** (n - 1)))


def test_sierpinski_matches_solver_small():
    out = oitrdf_sierpinski(3, 2)
    assert solve_roman_parameter(out.graph.graph, "oitR")[0] == out.weight
    out = oitrdf_sierpinski(3, 3)
    assert oitr_milp(out.graph.graph) == out.weight


def test_sierpinski_range():
    with pytest.raises(InputError):
        oitrdf_sierpinski(2, 3)
    with pytest.raises(InputError):
        oitrdf_sierpinski(3, 1)


@pytest.mark.parametrize(
    "kind,r,s,weight",
    [("cartesian", 3, 4, 11), ("direct", 3, 3, 8), ("strong", 3, 4, 12), ("lexicographic", 2, 5, 10), ("cartesian", 5, 6, 28)],
)
def test_products(kind, r, s, weight):
    assert oitrdf_product_kk(kind, r, s).weight == weight


def test_product_exclusions():
    with pytest.raises(DomainError):
        oitrdf_product_kk("cartesian", 2, 2)
    with pytest.raises(DomainError):
        oitrdf_product_kk("direct", 2, 4)


def test_product_builders_match_solver():
    for r in range(2, 5):
        for s in range(r, 5):
            if (r, s) != (2, 2):
                out = oitrdf_product_kk("cartesian", r, s)
                assert solve_roman_parameter(out.graph.graph, "oitR")[0] == out.weight
            if r >= 3:
                out = oitrdf_product_kk("direct", r, s)
                assert solve_roman_parameter(out.graph.graph, "oitR")[0] == out.weight


def test_fpq_stated_values():
    v = fpq_values([3], [4])
    assert v["gamma_oitR"] == 10 and v["gamma_oiR"] == 9
    assert fpq_values([3, 3], [4])["gamma_toi"] == 9


def test_fpq_first_four_certificates_hold():
    # f_3, f_4, the OIT dominating set and f_6 check out at their stated sizes.
    with pytest.raises(ConstructionError) as info:
        fpq_certificates([3], [4], [8])
    bundle = info.value.outcome
    for name in ("f3", "f4", "f6"):
        o = getattr(bundle, name)
        assert o.checked.valid and o.weight == o.claimed_weight, name
    assert bundle.toi_set.checked.ok and bundle.toi_set.size == bundle.toi_set.claimed_size == 7
    assert not bundle.f7.checked.valid
    assert bundle.f7.checked.violation == ("zero-without-two-neighbor", bundle.graph.index("w"))


def test_fpq_repaired_oitrdf_is_optimal():
    out = fpq_oitrdf_repaired([3], [4], [8])
    assert out.weight == 11
    assert oitr_milp(out.graph.graph) == 11
    assert solve_roman_parameter(out.graph.graph, "oitR")[0] == 11


def test_fpq_repaired_larger():
    out = fpq_oitrdf_repaired([3, 3], [4, 4], [8, 8])
    assert out.weight == fpq_values([3, 3], [4, 4])["gamma_oitR"] + 1
    assert oitr_milp(out.graph.graph) == out.weight


def test_combine_cover_total_hub_chain():
    G = hub_chain()
    f = combine_cover_total(G, {HUB_AB, HUB_BC, HUB_CD}, {HUB_AB, 4, HUB_CD, 8})
    assert f.weight == 7 and validate(G, f, "OITRDF")


def test_combine_cover_total_examples():
    K5 = complete(5).graph
    assert combine_cover_total(K5, {0, 1, 2, 3}, {0, 1}).weight == 6
    K35 = complete_bipartite(3, 5).graph
    assert combine_cover_total(K35, {0, 1, 2}, {0, 1, 2, 3}).weight == 7
    with pytest.raises(InputError, match="S"):
        combine_cover_total(K5, {0, 1}, {0, 1})
    with pytest.raises(InputError, match="D"):
        combine_cover_total(K5, {0, 1, 2, 3}, {0})


def test_combine_clawfree():
    K6 = complete(6).graph
    assert combine_cover_dominating_clawfree(K6, {0, 1, 2, 3, 4}, {0}).weight == 6
    C92 = gen_circulant(9, 2).graph
    rec = full_record(C92, ["alpha", "gamma"])
    f = combine_cover_dominating_clawfree(C92, rec.sets["alpha"], rec.sets["gamma"])
    assert f.weight == rec.alpha + rec.gamma and validate(C92, f, "OITRDF")
    with pytest.raises(DomainError, match="claw"):
        combine_cover_dominating_clawfree(star(3).graph, {0}, {0})
    with pytest.raises(DomainError, match="minimum degree"):
        combine_cover_dominating_clawfree(complete(3).graph, {0, 1}, {0})


def test_combine_oitd_dominating():
    K17 = star(7).graph
    assert combine_oitd_dominating(K17, {0, 1}, {0}).weight == 3
    W8 = wheel(8).graph
    rec = full_record(W8, ["gamma_toi"])
    assert rec.gamma_toi == 5
    f = combine_oitd_dominating(W8, rec.sets["gamma_toi"], {7})
    assert f.weight == rec.gamma_toi + 1 == 6 and validate(W8, f, "OITRDF")
    with pytest.raises(InputError, match="D"):
        combine_oitd_dominating(complete(4).graph, {0, 1}, {0})


def test_lift_examples():
    K14 = star(4).graph
    f = lift_oirdf(K14, RomanLabeling((2, 0, 0, 0, 0)), {0})
    assert f.values == (2, 1, 0, 0, 0) and f.weight == 3
    K35 = complete_bipartite(3, 5).graph
    rec = full_record(K35, ["gamma_oiR"])
    g = rec.labelings["gamma_oiR"]
    f = lift_oirdf(K35, g, {0, 3})
    assert validate(K35, f, "OITRDF") and 5 <= f.weight <= g.weight + 2
    ones = RomanLabeling((1,) * 8)
    assert lift_oirdf(K35, ones, {0, 3}) == ones


def test_lift_rejects_bad_inputs():
    K14 = star(4).graph
    with pytest.raises(InputError):
        lift_oirdf(K14, RomanLabeling((0, 0, 0, 0, 0)), {0})
    with pytest.raises(InputError):
        lift_oirdf(K14, RomanLabeling((2, 0, 0, 0, 0)), {1})


def test_lift_promotes_lowest_neighbor():
    G = wheel(7).graph
    g = labeling_from_sets(7, twos=[6], ones=[1, 3, 5])
    f = lift_oirdf(G, g, {6})
    assert f.values[0] == 1 and f.values[2] == 0


def test_copying_one_block_labeling_overshoots_for_odd_p():
    # Copying an optimal S_3^2 labeling into each S_3^2 block of S_3^3 is valid but one too heavy;
    # the pairing across blocks is what reaches the optimum.
    base = oitrdf_sierpinski(3, 2).labeling.values
    G = oitrdf_sierpinski(3, 3).graph.graph
    copied = RomanLabeling(tuple(base[v % 9] for v in range(27)))
    assert validate(G, copied, "OITRDF")
    assert copied.weight == 24 > sierpinski_weight(3, 3) == 23
