"""Immutable simple graphs stored as per-vertex neighbourhood bitsets.

Vertices are ``0..n-1``.  ``adj[v]`` is an int whose bit ``u`` is set iff
``uv`` is an edge.  An optional ``root`` marks a distinguished vertex for
rooted constructions (hierarchical products, bridge-cycle graphs).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Optional

from .errors import GraphError

EdgeList = list[tuple[int, int]]


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return bin(mask).count("1")


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]
    root: Optional[int] = None

    def __post_init__(self) -> None:
        if self.n < 0:
            raise GraphError(f"vertex count must be non-negative, got {self.n}")
        if len(self.adj) != self.n:
            raise GraphError("adjacency length does not match n")
        full = (1 << self.n) - 1
        for v, nb in enumerate(self.adj):
            if nb & ~full:
                raise GraphError(f"vertex {v} has a neighbour outside 0..{self.n - 1}")
            if nb >> v & 1:
                raise GraphError(f"self-loop at vertex {v}")
            for u in bits(nb):
                if not self.adj[u] >> v & 1:
                    raise GraphError(f"adjacency not symmetric on edge ({v}, {u})")
        if self.root is not None and not 0 <= self.root < self.n:
            raise GraphError(f"root {self.root} is not a vertex of a graph on {self.n} vertices")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]], root: Optional[int] = None) -> "Graph":
        """Build a graph; duplicate edges are merged, loops and bad endpoints rejected."""
        if n < 0:
            raise GraphError(f"vertex count must be non-negative, got {n}")
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj), root)

    @property
    def m(self) -> int:
        return sum(popcount(a) for a in self.adj) // 2

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def edges(self) -> EdgeList:
        """Edges as ``(u, v)`` with ``u < v``, sorted lexicographically."""
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u] >> (u + 1) << (u + 1))]

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self.adj[v]))

    def degree(self, v: int) -> int:
        return popcount(self.adj[v])

    def degrees(self) -> list[int]:
        return [popcount(a) for a in self.adj]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def with_root(self, root: Optional[int]) -> "Graph":
        return Graph(self.n, self.adj, root)

    def induced(self, keep: Iterable[int]) -> "Graph":
        """Induced subgraph on ``keep``, relabelled in increasing order of the kept vertices."""
        order = sorted(set(keep))
        for v in order:
            if not 0 <= v < self.n:
                raise GraphError(f"vertex {v} out of range")
        pos = {v: i for i, v in enumerate(order)}
        adj = []
        for v in order:
            nb = 0
            for u in bits(self.adj[v]):
                if u in pos:
                    nb |= 1 << pos[u]
            adj.append(nb)
        root = pos.get(self.root) if self.root is not None else None
        return Graph(len(order), tuple(adj), root)

    def relabel(self, perm: list[int]) -> "Graph":
        """Return the graph with vertex ``v`` renamed ``perm[v]``."""
        if sorted(perm) != list(range(self.n)):
            raise GraphError("relabelling must be a permutation of 0..n-1")
        edges = [(perm[u], perm[v]) for u, v in self.edges()]
        root = perm[self.root] if self.root is not None else None
        return Graph.from_edges(self.n, edges, root)

    def __repr__(self) -> str:
        root = "" if self.root is None else f", root={self.root}"
        return f"Graph(n={self.n}, edges={self.edges()}{root})"


def empty_graph(n: int) -> Graph:
    return Graph(n, (0,) * n)


def delete_vertex(g: Graph, v: int) -> Graph:
    """``g - v`` with order-preserving relabelling; the root is dropped if it was ``v``."""
    if not 0 <= v < g.n:
        raise GraphError(f"vertex {v} out of range for a graph on {g.n} vertices")
    return g.induced(u for u in range(g.n) if u != v)


def disjoint_union(graphs: Iterable[Graph]) -> tuple[Graph, list[int]]:
    """Disjoint union (roots dropped) and the offset of each part."""
    edges: EdgeList = []
    offsets = []
    n = 0
    for g in graphs:
        offsets.append(n)
        edges.extend((u + n, v + n) for u, v in g.edges())
        n += g.n
    return Graph.from_edges(n, edges), offsets
