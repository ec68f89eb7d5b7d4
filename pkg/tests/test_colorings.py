from __future__ import annotations

import pytest

import oracles
from domcolor.colorings import (
    Coloring,
    _dominated_search,
    dominated_chromatic_number,
    dominated_classes,
    dominator_chromatic_number,
    indicator_I,
    is_dominated_coloring,
    is_dominator_coloring,
    is_proper,
    optimal_dominated_colorings,
)
from domcolor.errors import GraphError, UndefinedInvariantError
from domcolor.generators import complete, cycle, path, random_gnp
from domcolor.graph import Graph
from domcolor.invariants import Budget
from domcolor.products import corona, edge_corona

# C4 labelled 0-1-2-3-0; edge corona copies follow (0,1) (0,3) (1,2) (2,3)
FIG1 = [0, 1, 2, 3] + [4, 5] * 4
FIG2 = [0, 2, 1, 2] + [3, 4] * 4
FIG5 = [4, 5, 4, 5] + [0, 1, 2, 3, 0, 1, 2, 3]


def test_coloring_type():
    assert Coloring.normalized([7, 3, 7]).colors == (0, 1, 0)
    assert Coloring.from_classes(3, [[1], [0, 2]]).classes == [[0, 2], [1]]
    with pytest.raises(GraphError):
        Coloring((0, 2))
    with pytest.raises(GraphError):
        Coloring.from_classes(3, [[0]])


def test_is_proper():
    assert is_proper(cycle(4), [0, 1, 0, 1])
    assert not is_proper(complete(2), [0, 0])
    assert is_proper(complete(1), [0])
    with pytest.raises(GraphError):
        is_proper(complete(2), [0])


def test_dominator_examples():
    assert is_dominator_coloring(corona(cycle(4), complete(2)), FIG1)
    assert is_dominator_coloring(edge_corona(cycle(4), complete(2)), FIG2)
    assert is_dominator_coloring(path(4), [3, 1, 2, 3])
    assert not is_dominator_coloring(path(4), [1, 2, 1, 2])


def test_dominated_examples():
    assert is_dominated_coloring(path(3), [0, 1, 0])
    assert not is_dominated_coloring(complete(1), [0])
    assert is_dominated_coloring(edge_corona(cycle(4), complete(2)), FIG5)
    # {0, 3} has no common neighbour in P4
    assert not is_dominated_coloring(path(4), [0, 1, 2, 0])


@pytest.mark.parametrize("g, value", [(complete(5), 5), (cycle(4), 2), (path(4), 3), (complete(1), 1), (Graph(0, ()), 0)])
def test_dominator_chromatic_number(g, value):
    res = dominator_chromatic_number(g)
    assert res.value == value
    if g.n:
        assert is_dominator_coloring(g, res.witness) and res.witness.k == value


@pytest.mark.parametrize("k, value", [(8, 4), (7, 4), (4, 2), (3, 3)])
def test_dominated_chromatic_number_cycles(k, value):
    res = dominated_chromatic_number(cycle(k))
    assert res.value == value and is_dominated_coloring(cycle(k), res.witness)


def test_dominated_undefined():
    for g in (complete(1), Graph.from_edges(3, [(0, 1)]), Graph(0, ())):
        with pytest.raises(UndefinedInvariantError):
            dominated_chromatic_number(g)


def test_dominated_classes_are_maximal_and_dominated():
    g = random_gnp(9, 0.4, 5)
    for mask in dominated_classes(g):
        members = [v for v in range(g.n) if mask >> v & 1]
        assert all(not g.has_edge(u, v) for u in members for v in members)
        assert any(mask & ~a == 0 for a in g.adj)


@pytest.mark.parametrize("seed", range(12))
def test_cover_program_matches_partition_search(seed):
    g = random_gnp(8 + seed % 4, 0.35, seed)
    if any(a == 0 for a in g.adj):
        return
    k = dominated_chromatic_number(g).value
    assert _dominated_search(g, k, Budget(10**7), lambda c: True)
    assert not _dominated_search(g, k - 1, Budget(10**7), lambda c: True)


def test_optimal_dominated_colorings_of_p4():
    cols = optimal_dominated_colorings(path(4))
    assert [c.colors for c in cols] == [(0, 1, 0, 1)]


def test_optimal_dominated_colorings_complete_listing():
    g = cycle(6)
    k = dominated_chromatic_number(g).value
    found = {c.colors for c in optimal_dominated_colorings(g)}
    brute = set()
    adj = oracles.adjacency(g.n, g.edges())
    for labels in oracles.set_partitions(g.n):
        if max(labels) + 1 == k and oracles.proper(adj, labels) and oracles.dominated_ok(adj, labels):
            brute.add(tuple(labels))
    assert found == brute


@pytest.mark.parametrize(
    "h, value",
    [(path(3).with_root(1), 0), (path(4).with_root(0), 1), (complete(2).with_root(0), 0), (complete(2).with_root(1), 0)],
)
def test_indicator_examples(h, value):
    res = indicator_I(h)
    assert res.value == value
    if value == 0:
        assert is_dominated_coloring(h, res.witness)


def test_indicator_deleted_root_reading():
    res = indicator_I(path(4).with_root(0), reading="deleted-root")
    # P4 - 0 = P3 with N(0) = {1} -> vertex 0 of P3; {0, 2} is the only optimal multi class
    assert res.value == 1
    res = indicator_I(cycle(5).with_root(0), reading="deleted-root")
    assert res.reading == "deleted-root" and res.value in (0, 1)


def test_indicator_needs_root():
    with pytest.raises(GraphError):
        indicator_I(path(3))
    with pytest.raises(GraphError):
        indicator_I(path(3).with_root(0), reading="other")
