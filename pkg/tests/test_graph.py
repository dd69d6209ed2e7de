from itertools import combinations

import pytest
from hypothesis import given, settings

from kgline.catalog import iso_classes, random_hypergraph, small_graphs
from kgline.graph import GraphError, Hypergraph, build_graph, build_hypergraph, complement, \
    disjoint_union, find_induced, greedy_maximal_matching, is_isomorphic, is_two_colorable, \
    join, kneser_graph_of
from kgline import generators as gen

import oracles
from conftest import graphs, hypergraphs


def test_edges_are_normalised():
    g = build_graph(3, [(2, 0), (1, 0)])
    assert g.edge_list == ((0, 1), (0, 2))


@pytest.mark.parametrize("edges", [[(0, 0)], [(0, 3)], [(-1, 1)]])
def test_bad_edges_rejected(edges):
    with pytest.raises(GraphError):
        build_graph(3, edges)


def test_kneser_of_triangle_is_edgeless():
    kg, labels = kneser_graph_of(gen.complete(3))
    assert kg.n == 3 and kg.m == 0
    assert labels == ((0, 1), (0, 2), (1, 2))


def test_kneser_of_k5_is_petersen():
    kg, _ = kneser_graph_of(gen.complete(5))
    assert kg.n == 10 and kg.m == 15
    assert all(kg.degree(v) == 3 for v in range(10))


def test_kneser_of_edgeless_rejected():
    with pytest.raises(GraphError):
        kneser_graph_of(gen.empty(4))


@given(graphs())
def test_complement_involution(g):
    assert complement(complement(g)) == g
    assert g.m + complement(g).m == g.n * (g.n - 1) // 2


@given(hypergraphs(min_edges=1))
def test_kneser_adjacency_matches_intersection(h):
    kg, labels = kneser_graph_of(h)
    expected = oracles.kneser_adjacency(labels)
    got = {(i, j) for i in range(kg.n) for j in range(kg.n) if kg.has_edge(i, j)} if kg.n else set()
    assert got == {p for p in expected}


def test_kneser_adjacency_on_200_random_hypergraphs(rng):
    for _ in range(200):
        h = random_hypergraph(rng, rng.randint(2, 6))
        if h.m == 0:
            continue
        kg, labels = kneser_graph_of(h)
        for i, j in combinations(range(kg.n), 2):
            assert kg.has_edge(i, j) == (not set(labels[i]) & set(labels[j]))


def test_line_graph_complement_identity():
    import networkx as nx
    for g in small_graphs(5, 2):
        if g.m == 0:
            continue
        kg, labels = kneser_graph_of(g)
        lg = nx.complement(nx.line_graph(nx.Graph(list(g.edge_list))))
        index = {e: i for i, e in enumerate(labels)}
        got = {frozenset((index[tuple(sorted(u))], index[tuple(sorted(v))])) for u, v in lg.edges}
        assert got == {frozenset(e) for e in kg.edge_list}


def test_join_counts():
    j = join(gen.complete(3), gen.complete(3))
    assert j == gen.complete(6)
    j = join(gen.cycle(5), gen.complete(2))
    assert j.n == 7 and j.m == 5 + 1 + 10


def test_join_with_hypergraph_is_hypergraph():
    hh = gen.complete_uniform_hypergraph(4, 3)
    j = join(hh, gen.complete(2))
    assert isinstance(j, Hypergraph)
    assert j.m == 4 + 1 + 8


def test_disjoint_union_shifts():
    u = disjoint_union([gen.complete(3), gen.complete(3)])
    assert u.n == 6 and u.edge_list == ((0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5))


@pytest.mark.parametrize("pattern", ["co-claw", "claw", "butterfly", "K3", "K4"])
def test_find_induced_matches_naive_scan(pattern):
    for g in small_graphs(6, 3):
        found = find_induced(g, pattern)
        assert (found is not None) == oracles.induced_pattern_exists(g.n, g.edge_list, pattern)
        if found is not None:
            sub = g.induced(found)
            k, pat = oracles.PATTERNS[pattern]
            assert oracles.is_iso(k, sub.edge_list, pat)


def test_find_induced_examples():
    assert find_induced(gen.butterfly(), "butterfly") == (0, 1, 2, 3, 4)
    assert find_induced(gen.co_claw(), "co-claw") is not None
    assert find_induced(gen.cycle(7), "K3") is None


@given(graphs())
def test_greedy_matching_is_maximal(g):
    m = greedy_maximal_matching(g)
    covered = [v for e in m for v in e]
    assert len(covered) == len(set(covered))
    assert all(g.has_edge(*e) for e in m)
    assert all(u in covered or v in covered for u, v in g.edge_list)


@given(hypergraphs())
def test_two_colorability_matches_brute_force(h):
    col = is_two_colorable(h)
    assert (col is not None) == oracles.two_colorable(range(h.n), h.edge_list)
    if col is not None:
        assert all(len({col[v] for v in e}) == 2 for e in h.edge_list)


def test_two_colorability_examples():
    assert is_two_colorable(gen.cycle(6)) is not None
    assert is_two_colorable(gen.cycle(5)) is None
    assert is_two_colorable(gen.complete_uniform_hypergraph(4, 3)) is not None
    assert is_two_colorable(build_hypergraph(2, [(0,)])) is None


def test_iso_classes_agree_with_atlas():
    for n in range(1, 6):
        mine = iso_classes(n)
        atlas = list(small_graphs(n, n))
        assert len(mine) == len(atlas)
        assert all(any(is_isomorphic(a, b) for b in atlas) for a in mine)


@settings(max_examples=30)
@given(graphs(max_vertices=6))
def test_induced_subgraph_edges(g):
    keep = list(range(0, g.n, 2))
    sub = g.induced(keep)
    assert sub.n == len(keep)
    assert sub.m == sum(1 for u, v in combinations(keep, 2) if g.has_edge(u, v))
