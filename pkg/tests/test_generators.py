from __future__ import annotations

from itertools import product

import pytest

from oitrd.generators import (
    FamilySpec,
    complete,
    complete_bipartite,
    corona_empty,
    cycle,
    gen_circulant,
    gen_fpq,
    gen_product,
    gen_sierpinski,
    generate,
    sierpinski_adjacent,
    wheel,
)
from oitrd.graph import InputError, degree_profile


def test_wheel_degrees():
    lg = wheel(8)
    hub = lg.roles["hub"][0]
    assert lg.graph.degree(hub) == 7
    assert all(lg.graph.degree(v) == 3 for v in lg.roles["rim"])


def test_complete_bipartite_edges():
    G = complete_bipartite(3, 5).graph
    assert (G.n, G.m) == (8, 15)


def test_corona():
    lg = corona_empty(complete(3), 2)
    p = degree_profile(lg.graph)
    assert lg.graph.n == 9 and len(p.supports) == 3 and len(p.leaves) == 6


def test_circulants():
    assert gen_circulant(6, 1).graph == cycle(6).graph
    G = gen_circulant(9, 2).graph
    assert G.m == 18 and {G.degree(v) for v in G.vertices} == {4}
    assert gen_circulant(8, 4).graph == complete(8).graph
    with pytest.raises(InputError):
        gen_circulant(8, 5)
    with pytest.raises(InputError):
        gen_circulant(8, 0)


@pytest.mark.parametrize("p,n,m", [(4, 2, 30), (3, 1, 3), (5, 2, 60), (3, 3, 39)])
def test_sierpinski_sizes(p, n, m):
    G = gen_sierpinski(p, n).graph
    assert G.n == p**n and G.m == m
    assert G.m == p * (p**n - 1) // 2


def test_sierpinski_base_is_clique():
    assert gen_sierpinski(3, 1).graph == complete(3).graph
    with pytest.raises(InputError):
        gen_sierpinski(2, 2)


def test_sierpinski_adjacency_rule():
    # Words differ first at r; afterwards each side repeats the other's letter at r.
    assert sierpinski_adjacent((0, 1), (0, 2))
    assert sierpinski_adjacent((0, 1), (1, 0))
    assert not sierpinski_adjacent((0, 1), (1, 2))
    assert sierpinski_adjacent((0, 1, 1), (1, 0, 0))
    assert not sierpinski_adjacent((0, 1, 1), (1, 0, 1))


def test_sierpinski_extreme_vertices_have_degree_p_minus_one():
    p, n = 4, 3
    lg = gen_sierpinski(p, n)
    for i in range(p):
        v = lg.index(str(i) * n)
        assert lg.graph.degree(v) == p - 1
    assert {lg.graph.degree(v) for v in lg.graph.vertices} == {p - 1, p}


def test_products():
    c4 = gen_product("cartesian", 2, 2).graph
    assert c4.m == 4 and {c4.degree(v) for v in c4.vertices} == {2} and c4.is_connected()
    c6 = gen_product("direct", 2, 3).graph
    assert c6.n == 6 and c6.m == 6 and {c6.degree(v) for v in c6.vertices} == {2} and c6.is_connected()
    for kind in ("strong", "lexicographic"):
        G = gen_product(kind, 3, 4).graph
        assert G.m == 12 * 11 // 2


def test_product_adjacency_definitions():
    r, s = 3, 4
    cart, direct, strong, lex = (gen_product(k, r, s).graph for k in ("cartesian", "direct", "strong", "lexicographic"))
    for (i, j), (a, b) in product(product(range(r), range(s)), repeat=2):
        u, v = i * s + j, a * s + b
        if u == v:
            continue
        assert cart.is_edge(u, v) == ((i == a) != (j == b))
        assert direct.is_edge(u, v) == (i != a and j != b)
        assert strong.is_edge(u, v) == (cart.is_edge(u, v) or direct.is_edge(u, v))
        assert lex.is_edge(u, v) == (i != a or j != b)


def test_fpq_orders():
    assert gen_fpq([3], [4], [8]).graph.n == 25
    lg = gen_fpq([3, 3], [4, 4], [8, 8])
    assert lg.graph.n == 49
    w = lg.index("w")
    assert lg.graph.neighbors(w) == set(lg.roles["z"]) | set(lg.roles["wi"])


@pytest.mark.parametrize(
    "args,index",
    [(([2], [4], [8]), "t_1"), (([3], [3], [8]), "block 1"), (([3, 3], [4, 4], [8, 7]), "block 2")],
)
def test_fpq_errors_name_index(args, index):
    with pytest.raises(InputError, match=index):
        gen_fpq(*args)


def test_fpq_roles_structure():
    lg = gen_fpq([3, 4], [4, 5], [8, 10])
    G, R = lg.graph, lg.roles
    for c in R["c"]:
        assert all(G.degree(u) in (1, 2) for u in G.neighbors(c))
    for x in R["x"] + R["y"]:
        pend = [u for u in G.neighbors(x) if G.degree(u) == 1]
        assert len(pend) in (4, 5)
    assert len(R["W"]) == (4 - 2) + (5 - 2)


def test_generate_is_deterministic_and_roundtrips_spec():
    spec = FamilySpec("fpq", ((3,), (4,), (8,)))
    assert generate(spec).graph.edges == generate(spec).graph.edges
    assert FamilySpec.from_json(spec.to_json()) == spec
    nested = FamilySpec("corona_empty", (2,), FamilySpec("cycle", (4,)))
    assert FamilySpec.from_json(nested.to_json()) == nested
    assert generate(nested).graph.n == 12
    with pytest.raises(InputError):
        generate(FamilySpec("petersen", ()))
