from __future__ import annotations

import pytest

import oracles
from domcolor.errors import GraphError
from domcolor.families import all_graphs, connected_graphs, is_isomorphic, rooted
from domcolor.generators import complete, cycle, path, star
from domcolor.graph import Graph
from domcolor.products import (
    bridge_cycle,
    corona,
    corona_labeling,
    edge_corona,
    edge_corona_labeling,
    hierarchical,
)

SMALL = connected_graphs(4)


def test_corona_examples():
    g = corona(cycle(4), complete(2))
    assert (g.n, g.m) == (12, 16)
    assert corona(complete(1), complete(1)) == path(2)


@pytest.mark.parametrize("g", SMALL)
@pytest.mark.parametrize("h", SMALL[:6])
def test_corona_counts_and_degrees(g, h):
    p = corona(g, h)
    assert p.n == g.n * (1 + h.n)
    assert p.m == g.m + g.n * (h.m + h.n)
    for i in range(g.n):
        assert p.degree(i) == g.degree(i) + h.n
    lab = corona_labeling(g, h)
    for i, block in lab.copies.items():
        assert p.induced(block) == h
        assert all(p.has_edge(i, x) for x in block)


def test_edge_corona_examples():
    g = edge_corona(cycle(4), complete(2))
    assert (g.n, g.m) == (12, 24)
    assert edge_corona(complete(2), complete(1)) == complete(3)
    assert edge_corona(Graph.from_edges(3, []), complete(2)) == Graph.from_edges(3, [])


@pytest.mark.parametrize("g", SMALL)
@pytest.mark.parametrize("h", SMALL[:6])
def test_edge_corona_counts(g, h):
    p = edge_corona(g, h)
    assert p.n == g.n + g.m * h.n
    assert p.m == g.m + g.m * (h.m + 2 * h.n)
    lab = edge_corona_labeling(g, h)
    assert list(lab.copies) == g.edges()
    for (a, b), block in lab.copies.items():
        assert p.induced(block) == h
        assert all(p.has_edge(a, x) and p.has_edge(b, x) for x in block)


def test_k1_factors():
    g = cycle(5)
    assert all(corona(g, complete(1)).degree(v) == 1 for v in range(5, 10))
    assert all(edge_corona(g, complete(1)).degree(v) == 2 for v in range(5, 10))


def test_hierarchical_examples():
    p2 = path(2).with_root(0)
    prod = hierarchical([p2, p2])
    assert is_isomorphic(prod, path(4))
    assert prod.root == 0
    g = cycle(5).with_root(2)
    assert hierarchical([complete(1), g]).with_root(None) == g.with_root(None)


@pytest.mark.parametrize("outer", list(rooted(all_graphs(3))))
@pytest.mark.parametrize("inner", list(rooted(all_graphs(3))))
def test_hierarchical_matches_definition(outer, inner):
    prod = hierarchical([outer, inner])
    n, edges = oracles.hierarchical_edges([outer, inner])
    assert prod.n == n and set(prod.edges()) == edges
    for x2 in range(outer.n):
        block = range(x2 * inner.n, (x2 + 1) * inner.n)
        assert prod.induced(block).with_root(None) == inner.with_root(None)


def test_hierarchical_three_factors_match_definition():
    fs = [cycle(3).with_root(0), path(3).with_root(1), path(2).with_root(0)]
    prod = hierarchical(fs)
    n, edges = oracles.hierarchical_edges(fs)
    assert prod.n == n == 18 and set(prod.edges()) == edges


def test_hierarchical_roots():
    with pytest.raises(GraphError):
        hierarchical([path(2).with_root(0), path(2)])
    assert hierarchical([path(2), path(2).with_root(0)]).root is None
    with pytest.raises(GraphError):
        hierarchical([path(2)])


def test_bridge_cycle_examples():
    k1 = complete(1).with_root(0)
    assert is_isomorphic(bridge_cycle([k1] * 5), cycle(5))
    fs = [path(3).with_root(0), star(4).with_root(0), complete(3).with_root(2)]
    bc = bridge_cycle(fs)
    assert bc.n == 10 and bc.m == 2 + 3 + 3 + 3
    with pytest.raises(GraphError):
        bridge_cycle([k1, k1])
    with pytest.raises(GraphError):
        bridge_cycle([k1, k1, complete(1)])


@pytest.mark.parametrize("g", list(rooted(all_graphs(5))))
def test_bridge_cycle_is_hierarchical_with_cycle(g):
    for k in (3, 4, 5):
        assert is_isomorphic(bridge_cycle([g] * k), hierarchical([cycle(k).with_root(0), g]))
