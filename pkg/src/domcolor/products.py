"""Corona, edge corona, hierarchical and bridge-cycle constructions.

Vertex layouts are fixed so that witnesses are reproducible; each
constructor has a ``*_labeling`` companion describing where every factor
vertex lands.

Hierarchical products take their factors as ``[G_N, ..., G_2, G_1]``, the
written order of ``G_N ⊓ ... ⊓ G_1``.  ``G_1`` is the fastest-varying
coordinate and is copied ``n(G_2)···n(G_N)`` times; a level-``i`` edge
exists only where the coordinates ``1..i-1`` all sit at their roots, so the
roots of ``G_1..G_{N-1}`` are required.  The root of ``G_N`` only decides
the root of the result.  In particular ``hierarchical([C_k, G])`` is ``k``
copies of ``G`` with their roots joined along a ``k``-cycle.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Hashable, Sequence

from .errors import GraphError
from .graph import Graph


@dataclass(frozen=True)
class ProductLabeling:
    """``base`` holds the first factor's vertices; ``copies`` maps a key
    (a vertex, an edge, or a coordinate tuple) to the index range of that
    copy of the second factor."""

    n: int
    base: range
    copies: dict[Hashable, range] = field(default_factory=dict)


def corona_labeling(g: Graph, h: Graph) -> ProductLabeling:
    copies = {i: range(g.n + i * h.n, g.n + (i + 1) * h.n) for i in range(g.n)}
    return ProductLabeling(g.n * (1 + h.n), range(g.n), copies)


def corona(g: Graph, h: Graph) -> Graph:
    """Vertices ``0..n(g)-1`` are ``g``; copy ``i`` of ``h`` is joined to vertex ``i``."""
    _need_vertices(g, h)
    lab = corona_labeling(g, h)
    edges = list(g.edges())
    for i, block in lab.copies.items():
        off = block.start
        edges.extend((u + off, v + off) for u, v in h.edges())
        edges.extend((i, x) for x in block)
    return Graph.from_edges(lab.n, edges)


def edge_corona_labeling(g: Graph, h: Graph) -> ProductLabeling:
    copies = {}
    for j, e in enumerate(g.edges()):
        start = g.n + j * h.n
        copies[e] = range(start, start + h.n)
    return ProductLabeling(g.n + g.m * h.n, range(g.n), copies)


def edge_corona(g: Graph, h: Graph) -> Graph:
    """Copies of ``h`` follow ``g``'s vertices, one per edge in lexicographic edge order."""
    _need_vertices(g, h)
    lab = edge_corona_labeling(g, h)
    edges = list(g.edges())
    for (a, b), block in lab.copies.items():
        off = block.start
        edges.extend((u + off, v + off) for u, v in h.edges())
        for x in block:
            edges.append((a, x))
            edges.append((b, x))
    return Graph.from_edges(lab.n, edges)


def hierarchical_index(factors: Sequence[Graph], coords: Sequence[int]) -> int:
    """Index of the tuple ``(x_N, ..., x_1)``; ``x_1`` varies fastest."""
    idx = 0
    for g, x in zip(factors, coords):
        idx = idx * g.n + x
    return idx


def hierarchical(factors: Sequence[Graph]) -> Graph:
    if len(factors) < 2:
        raise GraphError("hierarchical product needs at least two factors")
    for pos, g in enumerate(factors):
        if g.n < 1:
            raise GraphError("hierarchical factors must be non-empty")
        level = len(factors) - pos
        if level < len(factors) and g.root is None:
            raise GraphError(f"factor G_{level} needs a root")
    levels = list(reversed(factors))  # levels[0] is G_1
    total = 1
    for g in factors:
        total *= g.n
    edges = []
    for coords in itertools.product(*(range(g.n) for g in factors)):
        xs = list(reversed(coords))  # xs[0] is x_1
        here = hierarchical_index(factors, coords)
        for i, g in enumerate(levels):
            if i and xs[i - 1] != levels[i - 1].root:
                break
            for y in g.neighbors(xs[i]):
                if y > xs[i]:
                    ys = list(xs)
                    ys[i] = y
                    edges.append((here, hierarchical_index(factors, list(reversed(ys)))))
    root = None
    if all(g.root is not None for g in factors):
        root = hierarchical_index(factors, [g.root for g in factors])
    return Graph.from_edges(total, edges, root)


def bridge_cycle(factors: Sequence[Graph]) -> Graph:
    """Disjoint union of rooted graphs with roots joined in a cycle ``r_1 r_2 ... r_k r_1``."""
    if len(factors) < 3:
        raise GraphError(f"bridge-cycle needs at least 3 factors, got {len(factors)}")
    roots = []
    edges = []
    off = 0
    for i, g in enumerate(factors):
        if g.root is None:
            raise GraphError(f"bridge-cycle factor {i + 1} has no root")
        edges.extend((u + off, v + off) for u, v in g.edges())
        roots.append(off + g.root)
        off += g.n
    k = len(roots)
    edges.extend((roots[i], roots[(i + 1) % k]) for i in range(k))
    return Graph.from_edges(off, edges)


def _need_vertices(g: Graph, h: Graph) -> None:
    if g.n < 1 or h.n < 1:
        raise GraphError("product factors need at least one vertex")
