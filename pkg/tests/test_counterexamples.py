"""Small graphs where a stated formula fails, confirmed by exhaustive
enumeration that shares no code with the solvers."""

from __future__ import annotations

import pytest

import oracles
from domcolor.colorings import is_dominated_coloring
from domcolor.generators import complete, cycle, star
from domcolor.graph import Graph
from domcolor.invariants import chromatic_number, matching_number
from domcolor.predicates import pendant_vertices
from domcolor.products import corona, edge_corona, hierarchical
from domcolor.theorems import TheoremId, Verdict, evaluate, instance

DIAMOND = Graph.from_edges(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)])


def brute_dom(g: Graph) -> int:
    return oracles.dominated_chromatic(g.n, g.edges())


@pytest.mark.parametrize("h", [complete(1), complete(2), complete(3)])
def test_corona_with_single_vertex_base(h):
    prod = corona(complete(1), h)
    chi = chromatic_number(h).value
    assert brute_dom(prod) == chi + 1
    res = evaluate(TheoremId.CORONA_DOMINATED, instance("G H", complete(1), h))
    assert res.verdict is Verdict.VIOLATED and (res.lhs, res.rhs) == (chi + 1, chi)


@pytest.mark.parametrize("g, h", [(cycle(3), complete(1)), (DIAMOND, complete(1)), (complete(4), complete(1))])
def test_nopendant_bound_fails_with_triangles(g, h):
    lhs = brute_dom(edge_corona(g, h))
    rhs = matching_number(g).value * chromatic_number(h).value + brute_dom(g)
    assert lhs < rhs
    res = evaluate(TheoremId.EDGECORONA_LOWER_NOPENDANT, instance("G H", g, h))
    assert res.verdict is Verdict.VIOLATED and (res.lhs, res.rhs) == (lhs, rhs)


def test_nopendant_triangle_witness():
    # triangle 0 1 2 coloured 0 1 2; the edge vertex of (a, b) takes the third corner's colour
    g = edge_corona(cycle(3), complete(1))  # copies on (0,1) (0,2) (1,2) are 3 4 5
    assert is_dominated_coloring(g, [0, 1, 2, 2, 1, 0])


@pytest.mark.parametrize("leaves, h", [(3, complete(1)), (3, complete(2)), (4, complete(1))])
def test_pendant_bound_fails_on_stars(leaves, h):
    g = star(leaves + 1)
    prod = edge_corona(g, h)
    rhs = matching_number(g).value * chromatic_number(h).value + len(pendant_vertices(g))
    lhs = brute_dom(prod) if prod.n <= 10 else evaluate(
        TheoremId.EDGECORONA_LOWER_PENDANT, instance("G H", g, h)).lhs
    assert lhs < rhs
    assert evaluate(TheoremId.EDGECORONA_LOWER_PENDANT, instance("G H", g, h)).verdict is Verdict.VIOLATED


def test_star_witness():
    g = edge_corona(star(4), complete(1))  # centre 0, leaves 1-3, copies 4-6
    assert is_dominated_coloring(g, [0, 1, 1, 1, 2, 2, 2])


def test_cycle_formula_at_three():
    assert brute_dom(cycle(3)) == 3
    res = evaluate(TheoremId.CYCLE_DOMINATED, instance(k=3))
    assert res.verdict is Verdict.VIOLATED and (res.lhs, res.rhs) == (3, 2)


@pytest.mark.parametrize(
    "h, lhs, rhs, alt",
    [
        (cycle(5).with_root(0), 5, 4, 6),
        (Graph.from_edges(5, [(0, 1), (0, 4), (1, 2), (2, 3)]).with_root(1), 6, 8, 8),
    ],
)
def test_two_factor_hierarchical_formula_fails_on_five_vertices(h, lhs, rhs, alt):
    g = complete(2)
    prod = hierarchical([g, h])
    assert brute_dom(prod) == lhs
    res = evaluate(TheoremId.HIER_DOMINATED_FORMULA, instance("G H", g, h))
    assert res.verdict is Verdict.VIOLATED and (res.lhs, res.rhs) == (lhs, rhs)
    assert res.notes["deleted_root_reading"]["rhs"] == alt != lhs
