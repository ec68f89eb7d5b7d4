"""Dominator and dominated colourings: validators, exact solvers and the
root indicator used by the two-factor hierarchical formula.

A *dominator* colouring is proper and every vertex is alone in its class or
adjacent to every member of some class.  A *dominated* colouring is proper
and every class has a vertex adjacent to all of its members.  Domination is
by adjacency only, a vertex never dominates through itself.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional, Sequence

from .errors import BudgetExceededError, DomColorError, GraphError, UndefinedInvariantError
from .graph import Graph, bits, delete_vertex, popcount
from .invariants import (
    Budget,
    InvariantResult,
    as_budget,
    chromatic_number,
    domination_number,
    total_domination_number,
)


@dataclass(frozen=True)
class Coloring:
    """Colour per vertex; colours are exactly ``0..k-1``."""

    colors: tuple[int, ...]

    def __post_init__(self) -> None:
        used = set(self.colors)
        if used != set(range(len(used))):
            raise GraphError(f"colours must be exactly 0..k-1, got {sorted(used)}")

    @classmethod
    def normalized(cls, colors: Sequence[int]) -> "Coloring":
        """Relabel arbitrary colour names by first appearance."""
        rename: dict = {}
        return cls(tuple(rename.setdefault(c, len(rename)) for c in colors))

    @classmethod
    def from_classes(cls, n: int, classes: Sequence[Sequence[int]]) -> "Coloring":
        colors = [-1] * n
        for i, cls_ in enumerate(classes):
            for v in cls_:
                colors[v] = i
        if -1 in colors:
            raise GraphError("classes do not cover every vertex")
        return cls.normalized(colors)

    @property
    def k(self) -> int:
        return len(set(self.colors))

    @property
    def classes(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.k)]
        for v, c in enumerate(self.colors):
            out[c].append(v)
        return out

    def class_masks(self) -> list[int]:
        masks = [0] * self.k
        for v, c in enumerate(self.colors):
            masks[c] |= 1 << v
        return masks

    def canonical(self) -> "Coloring":
        """Same partition with classes numbered by their smallest member."""
        return Coloring.normalized(self.colors)


def _as_coloring(g: Graph, c) -> Coloring:
    col = c if isinstance(c, Coloring) else Coloring.normalized(list(c))
    if len(col.colors) != g.n:
        raise GraphError(f"colouring has {len(col.colors)} entries for a graph on {g.n} vertices")
    return col


def is_proper(g: Graph, c) -> bool:
    col = _as_coloring(g, c)
    return all(col.colors[u] != col.colors[v] for u, v in g.edges())


def is_dominator_coloring(g: Graph, c) -> bool:
    col = _as_coloring(g, c)
    if not is_proper(g, col):
        return False
    masks = col.class_masks()
    for v in range(g.n):
        if masks[col.colors[v]] == 1 << v:
            continue
        if not any(m & ~g.adj[v] == 0 for m in masks):
            return False
    return True


def is_dominated_coloring(g: Graph, c) -> bool:
    col = _as_coloring(g, c)
    if not is_proper(g, col):
        return False
    for m in col.class_masks():
        if not any(m & ~a == 0 for a in g.adj):
            return False
    return True


# -- search --------------------------------------------------------------------

def _max_clique(adj: list[int], budget: Budget) -> int:
    """Exact clique number of the graph given by neighbour masks."""
    n = len(adj)
    best = 0

    def expand(size: int, cand: int) -> None:
        nonlocal best
        budget.tick()
        if not cand:
            best = max(best, size)
            return
        # greedy colouring bound on the candidate set
        order = []
        bound = []
        rest = cand
        colour = 0
        while rest:
            colour += 1
            avail = rest
            while avail:
                v = (avail & -avail).bit_length() - 1
                avail &= ~(adj[v] | 1 << v)
                rest &= ~(1 << v)
                order.append(v)
                bound.append(colour)
        for v, b in zip(reversed(order), reversed(bound)):
            if size + b <= best:
                return
            expand(size + 1, cand & adj[v])
            cand &= ~(1 << v)

    expand(0, (1 << n) - 1)
    return best


def _incompatibility(g: Graph) -> list[int]:
    """Neighbour masks joining vertices that can never share a dominated
    class (adjacent, or no common neighbour)."""
    out = []
    for u in range(g.n):
        mask = 0
        for v in range(g.n):
            if v != u and (g.adj[u] >> v & 1 or not g.adj[u] & g.adj[v]):
                mask |= 1 << v
        out.append(mask)
    return out


def dominated_lower_bound(g: Graph, budget: Budget) -> int:
    """Clique number of the incompatibility graph."""
    return _max_clique(_incompatibility(g), budget)


def _clique_cover(adj: list[int]) -> list[int]:
    """A greedy maximal clique through every vertex, deduplicated."""
    out: list[int] = []
    order = sorted(range(len(adj)), key=lambda v: -bin(adj[v]).count("1"))
    for v in range(len(adj)):
        q = 1 << v
        cand = adj[v]
        for u in order:
            if cand >> u & 1:
                q |= 1 << u
                cand &= adj[u]
        if q & (q - 1) and q not in out:
            out.append(q)
    return out


def _dominated_search(
    g: Graph, k: int, budget: Budget, on_solution: Callable[[list[int]], bool]
) -> bool:
    """Enumerate dominated colourings with at most ``k`` colours, one per
    partition; stop when ``on_solution`` returns True.

    Bound: in every clique of a fixed cover of the incompatibility graph,
    the uncoloured members need fresh colours beyond the classes they may
    still join.
    """
    n = g.n
    adj = g.adj
    full = g.full_mask
    colour = [-1] * n
    members = [0] * k
    common = [full] * k
    deg = g.degrees()
    cliques = _clique_cover(_incompatibility(g))

    def hopeless(used: int, uncoloured: int) -> bool:
        spare = k - used
        for q in cliques:
            rest = q & uncoloured
            if not rest:
                continue
            need = bin(rest).count("1") - spare
            if need <= 0:
                continue
            joinable = 0
            for c in range(used):
                if any(not members[c] & adj[u] and common[c] & adj[u] for u in bits(rest)):
                    joinable += 1
                    if joinable >= need:
                        break
            if joinable < need:
                return True
        return False

    def search(used: int, uncoloured: int) -> bool:
        if not uncoloured:
            return on_solution(list(colour))
        if hopeless(used, uncoloured):
            return False
        best_v = -1
        best_opts: list[int] = []
        for v in bits(uncoloured):
            a = adj[v]
            opts = [c for c in range(used) if not members[c] & a and common[c] & a]
            if used < k:
                opts.append(used)
            if best_v < 0 or len(opts) < len(best_opts) or (
                len(opts) == len(best_opts) and deg[v] > deg[best_v]
            ):
                best_v, best_opts = v, opts
                if not opts:
                    return False
        v = best_v
        a = adj[v]
        for c in best_opts:
            budget.tick()
            old = common[c]
            colour[v] = c
            members[c] |= 1 << v
            common[c] = old & a
            if search(max(used, c + 1), uncoloured & ~(1 << v)):
                return True
            members[c] &= ~(1 << v)
            common[c] = old
            colour[v] = -1
        return False

    return search(0, full)


def _dominator_search(
    g: Graph, k: int, budget: Budget, on_solution: Callable[[list[int]], bool]
) -> bool:
    """Dominator colourings with at most ``k`` colours, one per partition.

    Each class is typed when opened: a singleton class is closed at once, a
    multi class must end with at least two members.  A member ``w`` of a
    multi class is settled once it has a singleton neighbour; otherwise it
    needs a multi class inside ``N(w)`` or a class still to be opened among
    its uncoloured neighbours.  Propagation after every assignment:

    * no possible target: fail;
    * one multi target and nothing fresh: that class is closed to the
      non-neighbours of ``w``;
    * unsettled vertices with only fresh options and pairwise disjoint
      uncoloured neighbourhoods need distinct fresh colours;
    * a one-member multi class needs a compatible uncoloured vertex;
    * an uncoloured vertex whose neighbourhood is a clique can only be
      settled by a singleton in its closed neighbourhood, so it joins the
      packing above;
    * the uncoloured part of each clique from a fixed cover needs fresh
      colours beyond the multi classes it may still join.
    """
    n = g.n
    adj = g.adj
    full = g.full_mask
    colour = [-1] * n
    members = [0] * k
    multi = [False] * k
    deg = g.degrees()
    clique_nbhd = [all(adj[u] & ~adj[x] & ~(1 << x) == 0 for x in bits(adj[u])) for u in range(n)]
    cliques = _clique_cover(list(adj))

    def propagate(used: int, uncoloured: int, singles: int, forbid: list[int]) -> bool:
        coloured = full & ~uncoloured
        changed = True
        while changed:
            changed = False
            needy = []
            for c in range(used):
                if multi[c] and members[c] & (members[c] - 1) == 0:
                    x = members[c]
                    if not any(
                        not members[c] & adj[u] and not forbid[u] >> c & 1 for u in bits(uncoloured & ~x)
                    ):
                        return False
            for w in bits(coloured & ~singles):
                a = adj[w]
                if a & singles:
                    continue
                own = colour[w]
                targets = [c for c in range(used) if multi[c] and c != own and not members[c] & ~a]
                fresh = used < k and a & uncoloured
                if not targets:
                    if not fresh:
                        return False
                    needy.append(a & uncoloured)
                elif len(targets) == 1 and not fresh:
                    c = targets[0]
                    for u in bits(uncoloured & ~a):
                        if not forbid[u] >> c & 1:
                            forbid[u] |= 1 << c
                            changed = True
            for u in bits(uncoloured):
                if clique_nbhd[u] and not adj[u] & singles:
                    needy.append((adj[u] | 1 << u) & uncoloured)
            if needy:
                taken = 0
                packed = 0
                for nb in sorted(needy, key=lambda m: bin(m).count("1")):
                    if not nb & taken:
                        taken |= nb
                        packed += 1
                if packed > k - used:
                    return False
        for q in cliques:
            rest = q & uncoloured
            if not rest:
                continue
            joinable = 0
            for c in range(used):
                if multi[c] and any(not members[c] & adj[u] and not forbid[u] >> c & 1 for u in bits(rest)):
                    joinable += 1
            if bin(rest).count("1") - joinable > k - used:
                return False
        return True

    def search(used: int, uncoloured: int, singles: int, forbid: list[int]) -> bool:
        if not uncoloured:
            return on_solution(list(colour))
        best_v = -1
        best_opts: list[tuple[int, bool]] = []
        for v in bits(uncoloured):
            a = adj[v]
            f = forbid[v]
            opts = [(c, True) for c in range(used) if multi[c] and not members[c] & a and not f >> c & 1]
            if used < k:
                opts.append((used, False))
                if uncoloured & ~a & ~(1 << v):
                    opts.append((used, True))
            if best_v < 0 or len(opts) < len(best_opts) or (
                len(opts) == len(best_opts) and deg[v] > deg[best_v]
            ):
                best_v, best_opts = v, opts
                if not opts:
                    return False
        v = best_v
        rest = uncoloured & ~(1 << v)
        for c, is_multi in best_opts:
            budget.tick()
            colour[v] = c
            members[c] |= 1 << v
            fresh = c == used
            if fresh:
                multi[c] = is_multi
            nused = used + 1 if fresh else used
            nsingles = singles if is_multi else singles | 1 << v
            child = list(forbid)
            if propagate(nused, rest, nsingles, child) and search(nused, rest, nsingles, child):
                return True
            members[c] &= ~(1 << v)
            colour[v] = -1
        return False

    return search(0, full, 0, [0] * n)


def _first(found: list) -> Callable[[list[int]], bool]:
    def take(colours: list[int]) -> bool:
        found.append(colours)
        return True

    return take


def _maximal_independent_sets(adj: tuple[int, ...], within: int, budget: Budget) -> list[int]:
    """Bron-Kerbosch with pivoting on the complement, restricted to ``within``."""
    out: list[int] = []

    def expand(r: int, p: int, x: int) -> None:
        budget.tick()
        if not p and not x:
            out.append(r)
            return
        u = max(bits(p | x), key=lambda w: popcount(p & ~adj[w]))
        for v in bits(p & (adj[u] | 1 << u)):
            keep = ~adj[v] & ~(1 << v)
            expand(r | 1 << v, p & keep, x & keep)
            p &= ~(1 << v)
            x |= 1 << v

    expand(0, within, 0)
    return out


def dominated_classes(g: Graph, budget: "Budget | int | None" = None) -> list[int]:
    """Every maximal possible class of a dominated colouring.

    A class is dominated exactly when it is an independent set inside some
    open neighbourhood, so these are the maximal independent sets of each
    ``G[N(x)]``, deduplicated and sorted.
    """
    budget = as_budget(budget, "dominated classes")
    found: set[int] = set()
    for a in g.adj:
        if a:
            found.update(_maximal_independent_sets(g.adj, a, budget))
    return sorted(found)


def _cover_ilp(n: int, sets: list[int], budget: Budget) -> list[int]:
    """Exact minimum cover of ``range(n)`` by ``sets`` as a 0/1 program.

    HiGHS proves optimality; its branch-and-bound node limit is whatever is
    left of the budget.
    """
    import numpy as np
    from scipy.optimize import Bounds, LinearConstraint, milp
    from scipy.sparse import csr_matrix

    rows, cols = [], []
    for j, s in enumerate(sets):
        for v in bits(s):
            rows.append(v)
            cols.append(j)
    a = csr_matrix((np.ones(len(rows)), (rows, cols)), shape=(n, len(sets)))
    res = milp(
        np.ones(len(sets)),
        constraints=LinearConstraint(a, lb=1),
        integrality=np.ones(len(sets)),
        bounds=Bounds(0, 1),
        options={"mip_rel_gap": 0, "node_limit": max(1, budget.limit - budget.nodes)},
    )
    if res.status == 1:
        raise BudgetExceededError(budget.what, budget.limit)
    if res.status != 0:
        raise DomColorError(f"integer program failed: {res.message}")
    budget.tick(int(getattr(res, "mip_node_count", 0) or 0))
    return [j for j, x in enumerate(res.x) if x > 0.5]


def dominated_chromatic_number(g: Graph, budget: "Budget | int | None" = None) -> InvariantResult:
    """Solved as a minimum cover of V by :func:`dominated_classes`: any cover
    shrinks to a partition because subsets of a dominated class are dominated."""
    if any(a == 0 for a in g.adj) or g.n == 0:
        raise UndefinedInvariantError("dominated chromatic number is undefined for graphs with an isolated vertex")
    budget = as_budget(budget, "dominated chromatic number")
    start = budget.nodes
    classes = dominated_classes(g, budget)
    chosen = _cover_ilp(g.n, classes, budget)
    colours = [-1] * g.n
    for c, w in enumerate(chosen):
        for v in bits(classes[w]):
            if colours[v] < 0:
                colours[v] = c
    col = Coloring.normalized(colours)
    return InvariantResult(col.k, col, budget.nodes - start)


def dominator_chromatic_number(g: Graph, budget: "Budget | int | None" = None) -> InvariantResult:
    budget = as_budget(budget, "dominator chromatic number")
    start = budget.nodes
    if g.n == 0:
        return InvariantResult(0, Coloring(()), 0)
    k = max(chromatic_number(g, budget).value, domination_number(g, budget).value)
    while True:
        found: list = []
        if _dominator_search(g, k, budget, _first(found)):
            col = Coloring.normalized(found[0])
            return InvariantResult(col.k, col, budget.nodes - start)
        k += 1


def optimal_dominated_colorings(g: Graph, budget: "Budget | int | None" = None):
    """All optimal dominated colourings of ``g`` as canonical partitions."""
    budget = as_budget(budget, "dominated colouring enumeration")
    k = dominated_chromatic_number(g, budget).value
    out: list[Coloring] = []

    def collect(colours: list[int]) -> bool:
        out.append(Coloring.normalized(colours).canonical())
        return False

    _dominated_search(g, k, budget, collect)
    return sorted(set(out), key=lambda c: c.colors)


# -- root indicator --------------------------------------------------------------

@dataclass
class IndicatorResult:
    value: int
    witness: Optional[Coloring]
    colorings_examined: int
    reading: str = "literal"


INDICATOR_READINGS = ("literal", "deleted-root")


def indicator_I(h: Graph, budget: "Budget | int | None" = None, reading: str = "literal") -> IndicatorResult:
    """0 if some optimal dominated colouring has a class entirely inside the
    root's neighbourhood, else 1.

    ``reading="literal"`` ranges over optimal dominated colourings of ``h``;
    ``reading="deleted-root"`` ranges over optimal dominated colourings of
    ``h - root`` (the witness is then a colouring of ``h - root``).
    """
    if h.root is None:
        raise GraphError("indicator needs a rooted graph")
    if reading not in INDICATOR_READINGS:
        raise GraphError(f"unknown indicator reading {reading!r}")
    budget = as_budget(budget, "indicator enumeration")
    r = h.root
    if reading == "literal":
        target = h
        root_nbrs = h.adj[r]
    else:
        target = delete_vertex(h, r)
        # bit u of h maps to bit u (u < r) or u - 1 (u > r) of h - r
        low = h.adj[r] & ((1 << r) - 1)
        root_nbrs = low | (h.adj[r] >> (r + 1)) << r
    k = dominated_chromatic_number(target, budget).value
    examined = 0
    hit: list[Coloring] = []

    def check(colours: list[int]) -> bool:
        nonlocal examined
        examined += 1
        col = Coloring.normalized(colours)
        if any(m and not m & ~root_nbrs for m in col.class_masks()):
            hit.append(col.canonical())
            return True
        return False

    _dominated_search(target, k, budget, check)
    if hit:
        return IndicatorResult(0, hit[0], examined, reading)
    return IndicatorResult(1, None, examined, reading)


__all__ = [
    "Coloring",
    "IndicatorResult",
    "is_proper",
    "is_dominator_coloring",
    "is_dominated_coloring",
    "dominator_chromatic_number",
    "dominated_chromatic_number",
    "optimal_dominated_colorings",
    "indicator_I",
    "dominated_lower_bound",
]
