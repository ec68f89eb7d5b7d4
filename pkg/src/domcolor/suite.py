"""Family runner: enumerate instances per theorem, evaluate, and report."""

from __future__ import annotations

import csv
import io
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Iterable, Iterator, Optional, Sequence

from .errors import ConfigError
from .families import all_graphs, connected_graphs, rooted, trees, triangle_free_graphs
from .generators import SplitMix64, complete, cycle, path, random_bipartite, star
from .graph import Graph
from .invariants import DEFAULT_BUDGET
from .theorems import INEQUALITY_THEOREMS, CheckResult, Instance, TheoremId, Verdict, evaluate

NAMED_GRAPHS = {
    "K1": lambda: complete(1),
    "K2": lambda: complete(2),
    "K3": lambda: complete(3),
    "K4": lambda: complete(4),
    "P3": lambda: path(3),
    "P4": lambda: path(4),
    "C3": lambda: cycle(3),
    "C4": lambda: cycle(4),
}


def named_graph(name: str) -> Graph:
    try:
        return NAMED_GRAPHS[name.upper()]()
    except KeyError:
        raise ConfigError(f"unknown named graph {name!r}; known: {', '.join(NAMED_GRAPHS)}") from None


@dataclass
class SuiteConfig:
    theorems: tuple[str, ...] = tuple(t.value for t in TheoremId)
    max_n: int = 5
    h_factors: tuple[str, ...] = ("K1", "K2", "P3", "C3", "P4", "K4")
    edge_h_factors: Optional[tuple[str, ...]] = None
    # (number of factors, largest factor order) for the hierarchical bound
    hier_upper_sizes: tuple[tuple[int, int], ...] = ((2, 4), (3, 3))
    hier_h_max_n: int = 4
    hier_g_max_n: int = 4
    cycle_ks: tuple[int, ...] = tuple(range(3, 11))
    bridge_max_n: int = 5
    bridge_ks: tuple[int, ...] = (3, 4, 5, 6)
    trianglefree_max_n: int = 9
    tree_max_n: int = 9
    random_count: int = 100
    random_max_n: int = 10
    seed: int = 0
    budget: int = DEFAULT_BUDGET
    workers: int = 1

    def theorem_ids(self) -> list[TheoremId]:
        return [TheoremId.parse(t) for t in self.theorems]


def _two_factor(gs: Iterable[Graph], hs: Sequence[Graph]) -> Iterator[Instance]:
    for g in gs:
        for h in hs:
            yield Instance((g, h), ("G", "H"))


def instances_for(tid: TheoremId, cfg: SuiteConfig) -> list[Instance]:
    """Deterministic instance list for one theorem under ``cfg``."""
    if cfg.max_n < 1:
        raise ConfigError("max_n must be at least 1")
    hs = [named_graph(x) for x in cfg.h_factors]
    if tid in (TheoremId.CORONA_DOMINATED, TheoremId.CORONA_DOMINATOR):
        return list(_two_factor(connected_graphs(cfg.max_n), hs))
    if tid.value.startswith("edgecorona"):
        ehs = [named_graph(x) for x in cfg.edge_h_factors] if cfg.edge_h_factors else hs
        return list(_two_factor(connected_graphs(cfg.max_n), ehs))
    if tid is TheoremId.HIER_DOMINATOR_UPPER:
        out = []
        for levels, size in cfg.hier_upper_sizes:
            if levels < 2:
                raise ConfigError("hierarchical products need at least 2 levels")
            small = all_graphs(size)
            out.extend(_hier_lists(small, list(rooted(small)), levels))
        return out
    if tid is TheoremId.HIER_DOMINATED_FORMULA:
        return [
            Instance((g, h), ("G", "H"))
            for h in rooted(all_graphs(cfg.hier_h_max_n))
            for g in all_graphs(cfg.hier_g_max_n)
        ]
    if tid is TheoremId.CYCLE_DOMINATED:
        return [Instance(params=(("k", k),)) for k in cfg.cycle_ks]
    if tid is TheoremId.BRIDGECYCLE_IDENT:
        return [Instance((g,), ("G",), (("k", k),)) for g in rooted(all_graphs(cfg.bridge_max_n)) for k in cfg.bridge_ks]
    if tid is TheoremId.TRIANGLEFREE_TOTALDOM:
        return [Instance((g,), ("G",)) for n in range(1, cfg.trianglefree_max_n + 1) for g in triangle_free_graphs(n)]
    if tid is TheoremId.TREE_DOMINATOR_RANGE:
        return [Instance((t,), ("T",)) for n in range(2, cfg.tree_max_n + 1) for t in trees(n)]
    if tid is TheoremId.KONIG:
        return konig_instances(cfg.random_count, cfg.random_max_n, cfg.seed)
    raise ConfigError(f"no instance family registered for {tid.value}")


def _hier_lists(outer: list[Graph], inner: list[Graph], levels: int) -> Iterator[Instance]:
    names = tuple(f"G{i}" for i in range(levels, 0, -1))

    def rec(prefix: tuple[Graph, ...]) -> Iterator[tuple[Graph, ...]]:
        if len(prefix) == levels:
            yield prefix
            return
        for g in inner:
            yield from rec(prefix + (g,))

    for top in outer:
        for factors in rec((top,)):
            yield Instance(factors, names)


def konig_instances(count: int, max_n: int, seed: int) -> list[Instance]:
    if max_n < 2:
        raise ConfigError("random bipartite graphs need max_n >= 2")
    rng = SplitMix64(seed)
    out = []
    for _ in range(count):
        n = 2 + rng.below(max_n - 1)
        p = round(rng.random(), 6)
        s = rng.next_u64()
        g = random_bipartite(n, p, s)
        out.append(Instance((g,), ("G",), (("n", n), ("p", p), ("seed", s))))
    return out


def _evaluate_job(job: tuple[str, Instance, int]) -> CheckResult:
    tid, inst, budget = job
    return evaluate(tid, inst, budget)


@dataclass
class SuiteReport:
    config: dict
    results: list[CheckResult]
    counts: dict = field(default_factory=dict)

    @classmethod
    def build(cls, config: SuiteConfig, results: list[CheckResult]) -> "SuiteReport":
        results = sorted(results, key=CheckResult.sort_key)
        counts: dict[str, dict[str, int]] = {}
        for r in results:
            per = counts.setdefault(r.theorem.value, {v.value: 0 for v in Verdict})
            per[r.verdict.value] += 1
        return cls(asdict(config), results, counts)

    @property
    def violations(self) -> list[CheckResult]:
        return [r for r in self.results if r.verdict is Verdict.VIOLATED]

    def to_json(self) -> str:
        cfg = dict(self.config)
        cfg.pop("workers", None)  # scheduling does not change results
        doc = {
            "config": cfg,
            "counts": self.counts,
            "violations": len(self.violations),
            "results": [r.to_dict() for r in self.results],
        }
        return json.dumps(doc, indent=2, sort_keys=True) + "\n"

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["theorem", "instance", "lhs", "rhs", "verdict"])
        for r in self.results:
            w.writerow([r.theorem.value, r.instance.label(), _cell(r.lhs), _cell(r.rhs), r.verdict_text])
        return buf.getvalue()

    def summary(self) -> str:
        lines = []
        for tid in sorted(self.counts):
            per = self.counts[tid]
            parts = " ".join(f"{k}={v}" for k, v in per.items() if v)
            lines.append(f"{tid}: {parts}")
        lines.append(f"violations: {len(self.violations)}")
        return "\n".join(lines)


def _cell(v) -> str:
    return "" if v is None else json.dumps(v) if isinstance(v, list) else str(v)


def run_suite(config: SuiteConfig) -> SuiteReport:
    jobs = []
    for tid in config.theorem_ids():
        jobs.extend((tid.value, inst, config.budget) for inst in instances_for(tid, config))
    if config.workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=config.workers) as pool:
            results = list(pool.map(_evaluate_job, jobs, chunksize=8))
    else:
        results = [_evaluate_job(j) for j in jobs]
    return SuiteReport.build(config, results)


# -- sharpness -----------------------------------------------------------------

FAMILIES = {
    "k1": lambda n: [complete(1)],
    "paths": lambda n: [path(i) for i in range(1, n + 1)],
    "cycles": lambda n: [cycle(i) for i in range(3, n + 1)],
    "complete": lambda n: [complete(i) for i in range(1, n + 1)],
    "stars": lambda n: [star(i) for i in range(1, n + 1)],
    "connected": lambda n: connected_graphs(n),
    "all": lambda n: all_graphs(n),
}


def family(name: str, max_n: int) -> list[Graph]:
    try:
        return FAMILIES[name](max_n)
    except KeyError:
        raise ConfigError(f"unknown family {name!r}; known: {', '.join(FAMILIES)}") from None


def find_sharpness(
    theorem: TheoremId | str,
    g_family: str,
    h_family: str,
    max_n: int = 4,
    budget: Optional[int] = None,
) -> list[CheckResult]:
    """EQUALITY instances of an inequality over ``g_family x h_family``, smallest first.

    For the hierarchical bound the pair is ``[G_2, G_1]`` with ``G_1`` taken
    at every root up to automorphism.
    """
    tid = theorem if isinstance(theorem, TheoremId) else TheoremId.parse(theorem)
    if tid not in INEQUALITY_THEOREMS:
        raise ConfigError(f"{tid.value} is not an inequality")
    gs = family(g_family, max_n)
    hs = family(h_family, max_n)
    if tid is TheoremId.HIER_DOMINATOR_UPPER:
        insts = [Instance((g, h), ("G2", "G1")) for g in gs for h in rooted(hs)]
    else:
        insts = list(_two_factor(gs, hs))
    hits = [r for r in (evaluate(tid, i, budget) for i in insts) if r.verdict is Verdict.EQUALITY]
    return sorted(hits, key=lambda r: (sum(g.n for g in r.instance.factors), r.instance.label()))
