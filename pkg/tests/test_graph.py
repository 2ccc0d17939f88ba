from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

from fixtures import HUB_AB, HUB_BC, HUB_CD, hub_chain
from oitrd.generators import complete, star, wheel
from oitrd.graph import DomainError, InputError, build_graph, degree_profile, find_claw, is_claw_free, set_predicate


@st.composite
def graphs(draw, max_n=9):
    n = draw(st.integers(1, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return build_graph(n, chosen)


def test_single_edge():
    G = build_graph(2, [(0, 1)])
    assert degree_profile(G).degrees == (1, 1)


def test_path_profile():
    p = degree_profile(build_graph(4, [(0, 1), (1, 2), (2, 3)]))
    assert (p.delta, p.Delta) == (1, 2)
    assert p.leaves == {0, 3} and p.supports == {1, 2}


def test_duplicates_collapse():
    G = build_graph(3, [(0, 1), (0, 1), (1, 2)])
    assert G.m == 2 and G.edges == ((0, 1), (1, 2))


@pytest.mark.parametrize("edges", [[(0, 3)], [(-1, 0)], [(1, 1)]])
def test_bad_edges(edges):
    with pytest.raises(InputError):
        build_graph(3, edges)


def test_empty_graph_profile():
    p = degree_profile(build_graph(0, []))
    assert p.delta == p.Delta == 0 and not p.leaves and not p.supports
    p = degree_profile(build_graph(3, []))
    assert p.delta == p.Delta == 0 and not p.leaves


def test_star_profile():
    p = degree_profile(star(4).graph)
    assert (p.delta, p.Delta, len(p.leaves), len(p.supports)) == (1, 4, 4, 1)


def test_wheel_profile():
    p = degree_profile(wheel(8).graph)
    assert (p.delta, p.Delta) == (3, 7) and not p.leaves and not p.supports


def test_hub_chain_profile():
    # Every non-hub vertex touches one or two hubs; only the outer groups are leaves.
    G = hub_chain()
    p = degree_profile(G)
    assert G.n == 19 and G.m == 24
    assert len(p.leaves) == 8 and p.supports == {HUB_AB, HUB_CD}
    assert p.Delta == 8 and p.delta == 1
    assert G.degree(HUB_BC) == 8


def test_predicate_witnesses():
    G = build_graph(4, [(0, 1), (1, 2), (2, 3)])
    assert set_predicate(G, {1, 2}, "vertex_cover")
    assert set_predicate(G, {1}, "vertex_cover") == (False, (2, 3))
    assert set_predicate(G, {0, 1}, "independent") == (False, (0, 1))
    assert set_predicate(G, {1}, "dominating") == (False, 3)
    assert set_predicate(G, {1, 2}, "total_dominating")
    assert set_predicate(G, {0, 3}, "total_dominating") == (False, 0)
    assert set_predicate(G, {1, 2}, "oit_dominating")
    assert set_predicate(G, {0, 1, 2}, "oit_dominating")
    with pytest.raises(InputError):
        set_predicate(G, {7}, "dominating")
    with pytest.raises(InputError):
        set_predicate(G, {0}, "nonsense")


def test_claws():
    assert find_claw(star(3).graph) == (0, 1, 2, 3)
    assert is_claw_free(complete(5).graph)
    assert not is_claw_free(wheel(8).graph)


def test_induced_and_components():
    G = build_graph(5, [(0, 1), (3, 4)])
    assert G.components() == [[0, 1], [2], [3, 4]]
    H, back = G.induced([3, 4])
    assert H.edges == ((0, 1),) and back == [3, 4]
    assert isinstance(DomainError("x"), ValueError)


@given(graphs())
def test_cover_independent_duality(G):
    # A set covers every edge exactly when its complement is independent.
    for mask in range(min(1 << G.n, 64)):
        A = {v for v in G.vertices if mask >> v & 1}
        assert bool(set_predicate(G, A, "vertex_cover")) == bool(set_predicate(G, set(G.vertices) - A, "independent"))


@given(graphs(), st.data())
def test_predicate_chain(G, data):
    A = data.draw(st.sets(st.sampled_from(range(G.n))))
    if set_predicate(G, A, "oit_dominating"):
        assert set_predicate(G, A, "total_dominating")
    if set_predicate(G, A, "total_dominating"):
        assert set_predicate(G, A, "dominating")


@given(graphs())
def test_graph_invariants(G):
    for v in G.vertices:
        assert v not in G.neighbors(v)
        for u in G.neighbors(v):
            assert v in G.neighbors(u)
    p = degree_profile(G)
    assert all(p.delta <= d <= p.Delta for d in p.degrees)
    assert all((d == 1) == (v in p.leaves) for v, d in enumerate(p.degrees))
