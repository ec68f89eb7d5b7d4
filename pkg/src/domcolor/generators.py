"""Deterministic graph generators.

Random families use SplitMix64 so that any reimplementation can reproduce
them bit for bit:

    state <- state + 0x9E3779B97F4A7C15           (mod 2**64)
    z <- state
    z <- (z xor (z >> 30)) * 0xBF58476D1CE4E5B9    (mod 2**64)
    z <- (z xor (z >> 27)) * 0x94D049BB133111EB    (mod 2**64)
    output z xor (z >> 31)

``random()`` maps an output ``x`` to ``(x >> 11) * 2**-53``; ``below(k)`` uses
rejection sampling (reject ``x >= 2**64 - 2**64 % k``) then ``x % k``.

* ``random_gnp``: one ``random()`` draw per pair ``(i, j)``, ``i < j``, in
  lexicographic order; edge iff the draw is ``< p``.
* ``random_tree``: Pruefer sequence of ``n - 2`` entries drawn with
  ``below(n)``, decoded by always removing the smallest remaining leaf.
* ``random_bipartite``: left side ``0..a-1`` with ``a = 1 + below(n - 1)``,
  then one ``random()`` draw per pair ``(i, j)``, ``i < a <= j``, in
  lexicographic order.
"""

from __future__ import annotations

import heapq
from typing import Optional

from .errors import GraphError
from .graph import Graph

_MASK64 = (1 << 64) - 1


class SplitMix64:
    def __init__(self, seed: int):
        self.state = seed & _MASK64

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def random(self) -> float:
        return (self.next_u64() >> 11) * 2.0 ** -53

    def below(self, k: int) -> int:
        if k <= 0:
            raise ValueError("below() needs a positive bound")
        limit = (1 << 64) - (1 << 64) % k
        while True:
            x = self.next_u64()
            if x < limit:
                return x % k


def path(n: int) -> Graph:
    _check_n(n, 1, "path")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    _check_n(n, 3, "cycle")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)] + [(0, n - 1)])


def complete(n: int) -> Graph:
    _check_n(n, 1, "complete")
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def star(n: int) -> Graph:
    """Star on ``n`` vertices (``K_{1,n-1}``) with centre 0."""
    _check_n(n, 1, "star")
    return Graph.from_edges(n, [(0, i) for i in range(1, n)])


def random_gnp(n: int, p: float, seed: int) -> Graph:
    _check_n(n, 1, "random_gnp")
    _check_p(p)
    rng = SplitMix64(seed)
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
    return Graph.from_edges(n, edges)


def random_tree(n: int, seed: int) -> Graph:
    _check_n(n, 1, "random_tree")
    if n <= 2:
        return path(n)
    rng = SplitMix64(seed)
    prufer = [rng.below(n) for _ in range(n - 2)]
    degree = [1] * n
    for x in prufer:
        degree[x] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for x in prufer:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    u, v = heapq.heappop(leaves), heapq.heappop(leaves)
    edges.append((u, v))
    return Graph.from_edges(n, edges)


def random_bipartite(n: int, p: float, seed: int) -> Graph:
    _check_n(n, 2, "random_bipartite")
    _check_p(p)
    rng = SplitMix64(seed)
    a = 1 + rng.below(n - 1)
    edges = [(i, j) for i in range(a) for j in range(a, n) if rng.random() < p]
    return Graph.from_edges(n, edges)


KINDS = ("path", "cycle", "complete", "star", "random_gnp", "random_tree", "random_bipartite")


def generate(kind: str, n: int, p: Optional[float] = None, seed: Optional[int] = None) -> Graph:
    if kind == "path":
        return path(n)
    if kind == "cycle":
        return cycle(n)
    if kind == "complete":
        return complete(n)
    if kind == "star":
        return star(n)
    if kind in ("random_gnp", "random_tree", "random_bipartite"):
        if seed is None:
            raise GraphError(f"{kind} requires a seed")
        if kind == "random_tree":
            return random_tree(n, seed)
        if p is None:
            raise GraphError(f"{kind} requires an edge probability p")
        return random_gnp(n, p, seed) if kind == "random_gnp" else random_bipartite(n, p, seed)
    raise GraphError(f"unknown generator kind {kind!r}; choose from {', '.join(KINDS)}")


def _check_n(n: int, low: int, kind: str) -> None:
    if not isinstance(n, int) or n < low:
        raise GraphError(f"{kind} needs n >= {low}, got {n!r}")


def _check_p(p: float) -> None:
    if not 0.0 <= p <= 1.0:
        raise GraphError(f"edge probability must lie in [0, 1], got {p}")
