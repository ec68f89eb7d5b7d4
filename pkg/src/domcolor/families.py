"""Isomorphism-free graph families for exhaustive checks.

Graphs on at most 7 vertices come from the networkx graph atlas.  Larger
hereditary families (e.g. triangle-free graphs) are grown one vertex at a
time and deduplicated by isomorphism, which networkx decides.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Callable, Iterator, Optional

import networkx as nx

from .graph import Graph
from .predicates import is_connected, is_triangle_free

ATLAS_MAX_N = 7


def from_networkx(nxg: nx.Graph, root=None) -> Graph:
    nodes = sorted(nxg.nodes())
    pos = {v: i for i, v in enumerate(nodes)}
    return Graph.from_edges(
        len(nodes), [(pos[u], pos[v]) for u, v in nxg.edges()], pos[root] if root is not None else None
    )


def to_networkx(g: Graph) -> nx.Graph:
    nxg = nx.Graph()
    nxg.add_nodes_from(range(g.n))
    nxg.add_edges_from(g.edges())
    for v in range(g.n):
        nxg.nodes[v]["root"] = v == g.root
    return nxg


def is_isomorphic(a: Graph, b: Graph, respect_roots: bool = False) -> bool:
    if a.n != b.n or a.m != b.m or sorted(a.degrees()) != sorted(b.degrees()):
        return False
    match = (lambda x, y: x["root"] == y["root"]) if respect_roots else None
    return nx.is_isomorphic(to_networkx(a), to_networkx(b), node_match=match)


@lru_cache(maxsize=None)
def _atlas() -> tuple[Graph, ...]:
    return tuple(from_networkx(g) for g in nx.graph_atlas_g())


def _invariant(g: Graph) -> tuple:
    degs = g.degrees()
    return (g.n, g.m, tuple(sorted(tuple(sorted(degs[u] for u in g.neighbors(v))) for v in range(g.n))))


def _dedupe(candidates: list[Graph]) -> list[Graph]:
    buckets: dict[tuple, list[Graph]] = {}
    out = []
    for g in candidates:
        bucket = buckets.setdefault(_invariant(g), [])
        if not any(is_isomorphic(g, h) for h in bucket):
            bucket.append(g)
            out.append(g)
    return out


@lru_cache(maxsize=None)
def _grown(n: int, hereditary: Optional[Callable[[Graph], bool]]) -> tuple[Graph, ...]:
    """All graphs on ``n`` vertices (satisfying a hereditary property), up to isomorphism."""
    if n <= ATLAS_MAX_N:
        return tuple(g for g in _atlas() if g.n == n and (hereditary is None or hereditary(g)))
    candidates = []
    for base in _grown(n - 1, hereditary):
        for mask in range(1 << base.n):
            nbrs = [v for v in range(base.n) if mask >> v & 1]
            g = Graph.from_edges(n, base.edges() + [(v, n - 1) for v in nbrs])
            if hereditary is None or hereditary(g):
                candidates.append(g)
    return tuple(_dedupe(candidates))


def graphs(n: int, hereditary: Optional[Callable[[Graph], bool]] = None) -> list[Graph]:
    return list(_grown(n, hereditary))


def connected_graphs(max_n: int, min_n: int = 1) -> list[Graph]:
    return [g for n in range(min_n, max_n + 1) for g in graphs(n) if is_connected(g)]


def all_graphs(max_n: int, min_n: int = 1) -> list[Graph]:
    return [g for n in range(min_n, max_n + 1) for g in graphs(n)]


def triangle_free_graphs(n: int) -> list[Graph]:
    return graphs(n, is_triangle_free)


def trees(n: int) -> list[Graph]:
    if n == 1:
        return [Graph.from_edges(1, [])]
    return [from_networkx(t) for t in nx.nonisomorphic_trees(n)]


def root_orbits(g: Graph) -> list[int]:
    """One representative (the smallest) per automorphism orbit of vertices."""
    reps: list[int] = []
    for v in range(g.n):
        if not any(is_isomorphic(g.with_root(v), g.with_root(r), respect_roots=True) for r in reps):
            reps.append(v)
    return reps


def rooted(gs: list[Graph]) -> Iterator[Graph]:
    """Every graph of ``gs`` with every root up to automorphism."""
    for g in gs:
        for r in root_orbits(g):
            yield g.with_root(r)
