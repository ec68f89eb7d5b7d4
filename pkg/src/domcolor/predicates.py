"""Structural predicates used as theorem hypotheses."""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, bits


@dataclass(frozen=True)
class Predicates:
    is_connected: bool
    is_bipartite: bool
    is_triangle_free: bool
    pendant_vertices: tuple[int, ...]
    has_isolated_vertex: bool


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= g.adj[v]
        frontier = nxt & ~seen
        seen |= frontier
    return seen == g.full_mask


def bipartition(g: Graph):
    """Return a 0/1 side per vertex, or ``None`` when ``g`` has an odd cycle."""
    side = [-1] * g.n
    for s in range(g.n):
        if side[s] >= 0:
            continue
        side[s] = 0
        stack = [s]
        while stack:
            v = stack.pop()
            for u in bits(g.adj[v]):
                if side[u] < 0:
                    side[u] = 1 - side[v]
                    stack.append(u)
                elif side[u] == side[v]:
                    return None
    return side


def is_bipartite(g: Graph) -> bool:
    return bipartition(g) is not None


def is_triangle_free(g: Graph) -> bool:
    return all(not (g.adj[u] & g.adj[v]) for u, v in g.edges())


def pendant_vertices(g: Graph) -> list[int]:
    return [v for v in range(g.n) if g.degree(v) == 1]


def has_isolated_vertex(g: Graph) -> bool:
    return any(a == 0 for a in g.adj)


def is_tree(g: Graph) -> bool:
    return g.n >= 1 and g.m == g.n - 1 and is_connected(g)


def predicates(g: Graph) -> Predicates:
    return Predicates(
        is_connected=is_connected(g),
        is_bipartite=is_bipartite(g),
        is_triangle_free=is_triangle_free(g),
        pendant_vertices=tuple(pendant_vertices(g)),
        has_isolated_vertex=has_isolated_vertex(g),
    )
