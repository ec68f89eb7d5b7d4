"""Exact classical invariants: chromatic, matching, vertex cover, domination
and total domination numbers.

Every solver is a deterministic branch-and-bound that counts search nodes
against a :class:`Budget`; running out raises :class:`BudgetExceededError`
rather than returning a possibly wrong value.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from typing import Any, Optional

from .errors import BudgetExceededError, UndefinedInvariantError
from .graph import Graph, bits, popcount

DEFAULT_BUDGET = 10**8
BUDGET_ENV = "DOMCOLOR_BUDGET"


def default_budget() -> int:
    raw = os.environ.get(BUDGET_ENV)
    return int(raw) if raw else DEFAULT_BUDGET


class Budget:
    """Search-node counter shared by all calls that receive the same instance."""

    def __init__(self, limit: Optional[int] = None, what: str = "search"):
        self.limit = default_budget() if limit is None else limit
        self.nodes = 0
        self.what = what

    def tick(self, k: int = 1) -> None:
        self.nodes += k
        if self.nodes > self.limit:
            raise BudgetExceededError(self.what, self.limit)


def as_budget(budget: "Budget | int | None", what: str) -> Budget:
    if isinstance(budget, Budget):
        return budget
    return Budget(budget, what)


@dataclass
class InvariantResult:
    value: int
    witness: Any = None
    nodes_explored: int = 0
    extra: dict = field(default_factory=dict)


# -- chromatic number ---------------------------------------------------------

def greedy_clique(g: Graph) -> int:
    """Size of a clique grown greedily from each vertex (a lower bound on chi)."""
    best = 1 if g.n else 0
    for s in range(g.n):
        clique = 1
        cand = g.adj[s]
        while cand:
            v = max(bits(cand), key=lambda u: (popcount(g.adj[u] & cand), -u))
            clique += 1
            cand &= g.adj[v]
        best = max(best, clique)
    return best


def _k_colour(g: Graph, k: int, budget: Budget) -> Optional[list[int]]:
    n = g.n
    colour = [-1] * n
    classes = [0] * k
    deg = g.degrees()

    def pick():
        best = None
        best_key = None
        for v in range(n):
            if colour[v] >= 0:
                continue
            sat = sum(1 for c in range(k) if classes[c] & g.adj[v])
            key = (sat, deg[v])
            if best_key is None or key > best_key:
                best, best_key = v, key
        return best

    def search(used: int) -> bool:
        v = pick()
        if v is None:
            return True
        for c in range(min(used + 1, k)):
            if classes[c] & g.adj[v]:
                continue
            budget.tick()
            colour[v] = c
            classes[c] |= 1 << v
            if search(max(used, c + 1)):
                return True
            classes[c] &= ~(1 << v)
            colour[v] = -1
        return False

    return colour if search(0) else None


def chromatic_number(g: Graph, budget: "Budget | int | None" = None) -> InvariantResult:
    budget = as_budget(budget, "chromatic number")
    start = budget.nodes
    if g.n == 0:
        return InvariantResult(0, [], 0)
    k = greedy_clique(g)
    while True:
        colouring = _k_colour(g, k, budget)
        if colouring is not None:
            return InvariantResult(k, colouring, budget.nodes - start)
        k += 1


# -- matching number ----------------------------------------------------------

def matching_number(g: Graph, budget: "Budget | int | None" = None) -> InvariantResult:
    """Maximum matching by include/exclude branching on the highest-index edge."""
    budget = as_budget(budget, "matching number")
    start = budget.nodes
    edges = g.edges()
    best: list[tuple[int, int]] = []
    free = g.full_mask
    for u, v in edges:  # greedy seed
        if free >> u & 1 and free >> v & 1:
            best.append((u, v))
            free &= ~(1 << u | 1 << v)
    chosen: list[tuple[int, int]] = []

    def search(i: int, free: int) -> None:
        nonlocal best
        budget.tick()
        # skip edges that are already blocked
        while i >= 0 and not (free >> edges[i][0] & 1 and free >> edges[i][1] & 1):
            i -= 1
        if i < 0:
            if len(chosen) > len(best):
                best = list(chosen)
            return
        touched = 0
        for u, v in edges[: i + 1]:
            if free >> u & 1 and free >> v & 1:
                touched |= 1 << u | 1 << v
        if len(chosen) + popcount(touched) // 2 <= len(best):
            return
        u, v = edges[i]
        chosen.append((u, v))
        search(i - 1, free & ~(1 << u | 1 << v))
        chosen.pop()
        search(i - 1, free)

    search(len(edges) - 1, g.full_mask)
    return InvariantResult(len(best), sorted(best), budget.nodes - start)


# -- set-cover style invariants -----------------------------------------------

def _min_cover(universe: int, covers: list[int], budget: Budget) -> list[int]:
    """Smallest index set whose ``covers`` masks union to ``universe``.

    Branches on the uncovered element with the fewest allowed covers,
    trying them in increasing index after dropping any whose uncovered part
    is contained in another's; earlier candidates are excluded from later
    branches.  Two bounds: uncovered elements over the largest gain, and a
    greedy packing of uncovered elements that share no allowed cover.
    """
    ncand = len(covers)
    # greedy upper bound
    best: list[int] = []
    left = universe
    while left:
        w = max(range(ncand), key=lambda x: (popcount(covers[x] & left), -x))
        if not covers[w] & left:
            raise UndefinedInvariantError("universe cannot be covered")
        best.append(w)
        left &= ~covers[w]
    best.sort()

    holders = {e: 0 for e in bits(universe)}
    for w, c in enumerate(covers):
        for e in bits(c & universe):
            holders[e] |= 1 << w

    chosen: list[int] = []

    def search(left: int, allowed: int) -> None:
        nonlocal best
        budget.tick()
        if not left:
            if len(chosen) < len(best):
                best = sorted(chosen)
            return
        room = len(best) - 1 - len(chosen)
        if room <= 0:
            return
        options = sorted((popcount(holders[e] & allowed), e) for e in bits(left))
        if options[0][0] == 0:
            return
        packed = 0
        seen = 0
        for _, e in options:
            h = holders[e] & allowed
            if not h & seen:
                seen |= h
                packed += 1
                if packed > room:
                    return
        gain = max(popcount(covers[w] & left) for w in bits(allowed))
        if -(-popcount(left) // gain) > room:
            return
        pivot = options[0][1]
        kept: list[tuple[int, int]] = []
        for w in sorted(bits(holders[pivot] & allowed), key=lambda x: (-popcount(covers[x] & left), x)):
            part = covers[w] & left
            if not any(part & ~other == 0 for _, other in kept):
                kept.append((w, part))
        for w, _ in sorted(kept):
            chosen.append(w)
            search(left & ~covers[w], allowed & ~(1 << w))
            chosen.pop()
            allowed &= ~(1 << w)

    search(universe, (1 << ncand) - 1)
    return best


def vertex_cover_number(g: Graph, budget: "Budget | int | None" = None) -> InvariantResult:
    budget = as_budget(budget, "vertex cover number")
    start = budget.nodes
    edges = g.edges()
    covers = [0] * g.n
    for i, (u, v) in enumerate(edges):
        covers[u] |= 1 << i
        covers[v] |= 1 << i
    cover = _min_cover((1 << len(edges)) - 1, covers, budget) if edges else []
    return InvariantResult(len(cover), cover, budget.nodes - start)


def domination_number(g: Graph, budget: "Budget | int | None" = None) -> InvariantResult:
    budget = as_budget(budget, "domination number")
    start = budget.nodes
    closed = [a | 1 << v for v, a in enumerate(g.adj)]
    dom = _min_cover(g.full_mask, closed, budget) if g.n else []
    return InvariantResult(len(dom), dom, budget.nodes - start)


def total_domination_number(g: Graph, budget: "Budget | int | None" = None) -> InvariantResult:
    if any(a == 0 for a in g.adj):
        raise UndefinedInvariantError("total domination number is undefined for graphs with an isolated vertex")
    budget = as_budget(budget, "total domination number")
    start = budget.nodes
    dom = _min_cover(g.full_mask, list(g.adj), budget) if g.n else []
    return InvariantResult(len(dom), dom, budget.nodes - start)


# -- witness validators -------------------------------------------------------

def is_matching(g: Graph, edges) -> bool:
    used = 0
    for u, v in edges:
        if not g.has_edge(u, v) or used >> u & 1 or used >> v & 1:
            return False
        used |= 1 << u | 1 << v
    return True


def is_vertex_cover(g: Graph, vertices) -> bool:
    s = set(vertices)
    return all(u in s or v in s for u, v in g.edges())


def is_dominating_set(g: Graph, vertices) -> bool:
    mask = 0
    for v in vertices:
        mask |= g.adj[v] | 1 << v
    return mask == g.full_mask


def is_total_dominating_set(g: Graph, vertices) -> bool:
    mask = 0
    for v in vertices:
        mask |= g.adj[v]
    return mask == g.full_mask
