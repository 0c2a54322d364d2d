import math

import networkx as nx
import numpy as np
import pytest
from hypothesis import given, settings

from lmwidth.errors import DomainError
from lmwidth.families import gen_H, gen_L
from lmwidth.graph import (
    Graph,
    RootedTree,
    bipartite_cut_graph,
    complete_graph,
    connected_components,
    diameter,
    distance,
    graph_power,
    induced_subgraph,
    neighborhood,
    path_graph,
    rooted_subtree,
    star_graph,
    subgraph_distance,
)

from strategies import graphs, to_nx


def test_graph_normalizes_and_rejects():
    g = Graph(3, [(1, 0), (2, 1)])
    assert g.edges == frozenset({(0, 1), (1, 2)})
    assert g.adjacency[1] == frozenset({0, 2})
    with pytest.raises(DomainError):
        Graph(2, [(0, 0)])
    with pytest.raises(DomainError):
        Graph(2, [(0, 2)])


@given(graphs())
def test_adjacency_is_symmetric(g):
    for u in range(g.n):
        for v in g.adjacency[u]:
            assert u in g.adjacency[v]
            assert (min(u, v), max(u, v)) in g.edges


def test_neighborhood_examples():
    p3 = path_graph(3)
    assert neighborhood(p3, {1}, closed=True) == {0, 1, 2}
    assert neighborhood(p3, set()) == frozenset()
    l1 = gen_L(1)
    assert neighborhood(l1.graph, {0}) == set(l1.middles())
    with pytest.raises(DomainError):
        neighborhood(p3, {3})


def test_distance_examples():
    assert distance(path_graph(4), 0, 3) == 3
    assert distance(Graph(2), 0, 1) == math.inf
    assert distance(path_graph(4), 2, 2) == 0
    l1 = gen_L(1)
    s1, s2 = l1.copy_roots(1)[0], l1.copy_roots(2)[0]
    assert distance(l1.graph, s1, s2) == 4
    with pytest.raises(DomainError):
        distance(path_graph(2), 0, 5)


def test_subgraph_distance_examples():
    p4 = path_graph(4)
    assert subgraph_distance(p4, {0}, {3}) == 3
    assert subgraph_distance(p4, {0, 1}, {1, 2}) == 0
    with pytest.raises(DomainError):
        subgraph_distance(p4, set(), {1})
    h = gen_H(1)
    sq = graph_power(h.graph, 2)
    leaves1 = set(h.copy_roots(1))
    leaves2 = set(h.copy_roots(2))
    brute = min(nx.shortest_path_length(to_nx(sq), a, b) for a in leaves1 for b in leaves2)
    assert brute == 2  # leaf, v1, root, v2, leaf has length 4 in H(1)
    assert subgraph_distance(sq, leaves1, leaves2) == brute
    # with the root deleted the detour through v1 v2 gives 3
    rest, back = induced_subgraph(sq, set(range(sq.n)) - {h.tree.root})
    a = {back.index(v) for v in leaves1}
    b = {back.index(v) for v in leaves2}
    brute = min(nx.shortest_path_length(to_nx(rest), x, y) for x in a for y in b)
    assert brute == 3
    assert subgraph_distance(rest, a, b) == 3


def test_diameter_examples():
    assert diameter(Graph(1)) == 0
    assert diameter(path_graph(4)) == 3
    assert diameter(gen_L(1).graph) == 4
    with pytest.raises(DomainError):
        diameter(Graph(2))


def test_graph_power_examples():
    assert graph_power(path_graph(3), 2).edges == complete_graph(3).edges
    l1 = gen_L(1).graph
    assert graph_power(l1, 1) == l1
    assert graph_power(l1, 4).edges == complete_graph(7).edges
    with pytest.raises(DomainError):
        graph_power(l1, 0)


@settings(max_examples=150)
@given(graphs(max_n=12))
def test_power_matches_distance_definition(g):
    lengths = dict(nx.all_pairs_shortest_path_length(to_nx(g)))
    for m in (1, 2, 3):
        gm = graph_power(g, m)
        for u in range(g.n):
            for v in range(u + 1, g.n):
                assert gm.has_edge(u, v) == (lengths[u].get(v, math.inf) <= m)


@settings(max_examples=150)
@given(graphs(max_n=10))
def test_power_matches_adjacency_matrix_power(g):
    # boolean power of A + I: loops only live inside this check
    a = np.eye(g.n, dtype=np.int64)
    for u, v in g.edges:
        a[u, v] = a[v, u] = 1
    reach = np.eye(g.n, dtype=np.int64)
    for m in range(1, 5):
        reach = np.minimum(reach @ a, 1)
        expected = reach.astype(bool)
        got = np.eye(g.n, dtype=bool)
        for u, v in graph_power(g, m).edges:
            got[u, v] = got[v, u] = True
        assert (got == expected).all()


@given(graphs(min_n=1, max_n=10))
def test_diameter_power_is_complete(g):
    if not nx.is_connected(to_nx(g)):
        return
    assert graph_power(g, max(diameter(g), 1)).m == g.n * (g.n - 1) // 2


def test_bipartite_cut_examples():
    p4 = path_graph(4)
    assert bipartite_cut_graph(p4, {0, 1}).graph.edges == {(1, 2)}
    assert bipartite_cut_graph(complete_graph(4), {0, 1}).graph.m == 4
    assert bipartite_cut_graph(p4, {0, 2}).graph.edges == {(0, 1), (1, 2), (2, 3)}
    with pytest.raises(DomainError):
        bipartite_cut_graph(p4, set())
    with pytest.raises(DomainError):
        bipartite_cut_graph(p4, {0, 1, 2, 3})


@given(graphs(min_n=2, max_n=10))
def test_cut_edge_count(g):
    s = set(range(0, g.n, 2))
    bg = bipartite_cut_graph(g, s)
    assert bg.graph.m == sum(1 for e in g.edges if len(set(e) & s) == 1)
    bg.check()


def test_induced_subgraph_examples():
    p4 = path_graph(4)
    h, back = induced_subgraph(p4, {0, 1})
    assert (h.n, h.m, back) == (2, 1, (0, 1))
    h, _ = induced_subgraph(p4, {0, 2})
    assert (h.n, h.m) == (2, 0)


def test_h1_square_without_root_structure():
    fam = gen_H(1)
    sq = graph_power(fam.graph, 2)
    h, back = induced_subgraph(sq, set(range(sq.n)) - {fam.tree.root})
    centers = [back.index(v) for v in fam.middles()]
    # the middles form a triangle
    assert all(h.has_edge(a, b) for a in centers for b in centers if a < b)
    # each middle with its three children is a K4, and nothing else touches the children
    for c in centers:
        block = {c} | {back.index(x) for x in fam.copy_roots(centers.index(c) + 1)}
        assert all(h.has_edge(a, b) for a in block for b in block if a < b)
        for x in block - {c}:
            assert h.adjacency[x] == frozenset(block - {x})
    assert h.m == 3 + 3 * 6


def test_connected_components_examples():
    assert connected_components(Graph(4, [(0, 1), (2, 3)])) == [{0, 1}, {2, 3}]
    assert connected_components(Graph(1)) == [{0}]
    l1 = gen_L(1)
    rest = set(range(7)) - neighborhood(l1.graph, {0}, closed=True)
    assert connected_components(l1.graph, rest) == [{v} for v in sorted(rest)]


@given(graphs())
def test_components_match_networkx(g):
    ours = connected_components(g)
    theirs = sorted((frozenset(c) for c in nx.connected_components(to_nx(g))), key=min)
    assert ours == theirs


def test_rooted_subtree_examples():
    l1 = gen_L(1)
    assert rooted_subtree(l1.tree, 0).graph == l1.graph
    v1 = l1.middles()[0]
    sub = rooted_subtree(l1.tree, v1)
    assert (sub.graph.n, sub.graph.m) == (2, 1)
    assert sub.origin[sub.root] == v1
    h1 = gen_H(1)
    sub = rooted_subtree(h1.tree, h1.middles()[0])
    assert sub.graph.edges == star_graph(3).edges
    assert sub.root == 0


def test_rooted_tree_validation():
    with pytest.raises(DomainError):
        RootedTree.from_graph(Graph(3, [(0, 1)]))
    t = RootedTree.from_graph(path_graph(3), 1)
    assert t.children(1) == [0, 2]
    assert t.depth(0) == 1
