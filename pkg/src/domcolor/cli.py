"""Command-line entry point: ``domcolor <subcommand> ...``.

Exit codes: 0 success, 2 theorem violation (verify), 3 usage/configuration
error, 4 input parse error, 5 search budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path
from typing import Optional

from . import formats
from .colorings import (
    Coloring,
    dominated_chromatic_number,
    dominator_chromatic_number,
    indicator_I,
)
from .errors import BudgetExceededError, ConfigError, DomColorError, GraphError, ParseError, UndefinedInvariantError
from .generators import KINDS, generate
from .graph import Graph
from .invariants import (
    BUDGET_ENV,
    DEFAULT_BUDGET,
    chromatic_number,
    domination_number,
    matching_number,
    total_domination_number,
    vertex_cover_number,
)
from .predicates import predicates
from .products import bridge_cycle, corona, edge_corona, hierarchical
from .suite import SuiteConfig, find_sharpness, run_suite
from .theorems import TheoremId

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE, EXIT_PARSE, EXIT_BUDGET = 0, 2, 3, 4, 5

INVARIANTS = {
    "chi": ("chi", chromatic_number),
    "chi-d": ("chi_d", dominator_chromatic_number),
    "chi-dom": ("chi_dom", dominated_chromatic_number),
    "matching": ("alpha_prime", matching_number),
    "cover": ("beta", vertex_cover_number),
    "gamma": ("gamma", domination_number),
    "gamma-t": ("gamma_t", total_domination_number),
}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise UsageError(message)


def _budget(args) -> int:
    if args.budget is not None:
        return args.budget
    raw = os.environ.get(BUDGET_ENV)
    if raw:
        try:
            return int(raw)
        except ValueError:
            raise UsageError(f"{BUDGET_ENV} must be an integer, got {raw!r}") from None
    return DEFAULT_BUDGET


def _load(spec: str, fmt: Optional[str]) -> Graph:
    """``PATH`` or ``PATH@ROOT``; a root given here overrides one in the file."""
    path, root = spec, None
    if "@" in spec:
        path, _, r = spec.rpartition("@")
        try:
            root = int(r)
        except ValueError:
            raise UsageError(f"bad root in {spec!r}") from None
    if not Path(path).is_file():
        raise UsageError(f"no such file: {path}")
    g = formats.read_graph(path, fmt)
    if root is not None:
        if not 0 <= root < g.n:
            raise ParseError(f"root {root} is not a vertex of {path}")
        g = g.with_root(root)
    return g


def _emit_graph(g: Graph, out: str) -> str:
    return formats.to_graph6(g) + "\n" if out == "g6" else formats.to_edge_list(g)


def _witness_lines(col) -> list[str]:
    return [f"{v}: {c}" for v, c in enumerate(col.colors)]


def cmd_parse(args) -> int:
    g = _load(args.input, args.format)
    pred = predicates(g)
    if args.json:
        doc = {"n": g.n, "m": g.m, "root": g.root, "graph6": formats.to_graph6(g), "edges": g.edges()}
        doc.update({k: (list(v) if isinstance(v, tuple) else v) for k, v in vars(pred).items()})
        print(json.dumps(doc, sort_keys=True))
    else:
        print(_emit_graph(g, args.out), end="")
        if args.info:
            print(f"n = {g.n}\nm = {g.m}")
            for k, v in vars(pred).items():
                print(f"{k} = {list(v) if isinstance(v, tuple) else v}")
    return EXIT_OK


def cmd_generate(args) -> int:
    g = generate(args.kind, args.n, p=args.p, seed=args.seed)
    if args.root is not None:
        g = g.with_root(args.root)
    print(_emit_graph(g, args.out), end="")
    return EXIT_OK


def cmd_invariant(args) -> int:
    g = _load(args.input, args.format)
    budget = _budget(args)
    if args.name == "indicator":
        res = indicator_I(g, budget, reading=args.reading)
        if args.json:
            doc = {"invariant": "I", "value": res.value, "reading": res.reading,
                   "colorings_examined": res.colorings_examined,
                   "witness": list(res.witness.colors) if res.witness else None}
            print(json.dumps(doc, sort_keys=True))
        else:
            print(f"I = {res.value}")
            if args.witness and res.witness is not None:
                print("\n".join(_witness_lines(res.witness)))
        return EXIT_OK
    label, fn = INVARIANTS[args.name]
    res = fn(g, budget)
    witness = res.witness
    if isinstance(witness, Coloring):
        witness = list(witness.colors)
    if args.json:
        print(json.dumps({"invariant": label, "value": res.value, "witness": witness,
                          "nodes_explored": res.nodes_explored}, sort_keys=True))
    else:
        print(f"{label} = {res.value}")
        if args.witness:
            if isinstance(res.witness, Coloring) or label == "chi":
                print("\n".join(f"{v}: {c}" for v, c in enumerate(witness)))
            else:
                print(" ".join(str(x) for x in witness) if label != "alpha_prime"
                      else " ".join(f"{u}-{v}" for u, v in witness))
    return EXIT_OK


def cmd_color(args) -> int:
    g = _load(args.input, args.format)
    fn = dominator_chromatic_number if args.kind == "dominator" else dominated_chromatic_number
    res = fn(g, _budget(args))
    if args.json:
        print(json.dumps({"kind": args.kind, "k": res.value, "coloring": list(res.witness.colors),
                          "classes": res.witness.classes}, sort_keys=True))
    else:
        print(f"k = {res.value}")
        if args.witness:
            print("\n".join(_witness_lines(res.witness)))
    return EXIT_OK


def cmd_product(args) -> int:
    kind = args.kind
    if kind in ("corona", "edge-corona"):
        if not (args.g and args.h):
            raise UsageError(f"{kind} needs --g and --h")
        g, h = _load(args.g, args.format), _load(args.h, args.format)
        result = corona(g, h) if kind == "corona" else edge_corona(g, h)
    else:
        if not args.factor:
            raise UsageError(f"{kind} needs --factor (repeatable, FILE or FILE@ROOT)")
        factors = [_load(f, args.format) for f in args.factor]
        result = hierarchical(factors) if kind == "hierarchical" else bridge_cycle(factors)
    print(_emit_graph(result, args.out), end="")
    return EXIT_OK


def _suite_config(args) -> SuiteConfig:
    cfg = SuiteConfig(seed=args.seed, budget=_budget(args), workers=args.workers or (os.cpu_count() or 1))
    if args.theorem != "all":
        cfg.theorems = (TheoremId.parse(args.theorem).value,)
    if args.max_n is not None:
        if args.max_n < 1:
            raise ConfigError("--max-n must be positive")
        cfg.max_n = args.max_n
        cfg.hier_h_max_n = min(cfg.hier_h_max_n, args.max_n)
        cfg.hier_g_max_n = min(cfg.hier_g_max_n, args.max_n)
        cfg.hier_upper_sizes = tuple((lv, min(sz, args.max_n)) for lv, sz in cfg.hier_upper_sizes)
        cfg.bridge_max_n = min(cfg.bridge_max_n, args.max_n)
    if args.h_factors:
        cfg.h_factors = tuple(x.strip() for x in args.h_factors.split(","))
    return cfg


def cmd_verify(args) -> int:
    cfg = _suite_config(args)
    report = run_suite(cfg)
    if args.out:
        text = report.to_csv() if args.out.endswith(".csv") else report.to_json()
        Path(args.out).write_text(text)
    if args.json:
        sys.stdout.write(report.to_json())
    else:
        print(report.summary())
        for r in report.violations:
            print(f"VIOLATED {r.theorem.value} {r.instance.label()} lhs={r.lhs} rhs={r.rhs}")
    return EXIT_VIOLATION if report.violations else EXIT_OK


def cmd_sharpness(args) -> int:
    hits = find_sharpness(args.theorem, args.g_family, args.h_family, args.max_n, _budget(args))
    if args.json:
        print(json.dumps([r.to_dict() for r in hits], indent=2, sort_keys=True))
    else:
        for r in hits:
            print(f"{r.instance.label()} lhs={r.lhs} rhs={r.rhs}")
        print(f"{len(hits)} equality instance(s)")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="domcolor", description="Dominator/dominated colourings of graph products.")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    def graph_opts(sp):
        sp.add_argument("--format", choices=("graph6", "edges"), help="override format detection")

    def solver_opts(sp):
        sp.add_argument("--budget", type=int, help=f"search node limit (default ${BUDGET_ENV} or {DEFAULT_BUDGET})")
        sp.add_argument("--json", action="store_true")

    sp = sub.add_parser("parse", help="read a graph, print it back (optionally converted)")
    sp.add_argument("input")
    sp.add_argument("--out", choices=("g6", "edges"), default="g6")
    sp.add_argument("--info", action="store_true", help="also print structural predicates")
    sp.add_argument("--json", action="store_true")
    graph_opts(sp)
    sp.set_defaults(func=cmd_parse)

    sp = sub.add_parser("generate", help="emit a generated graph")
    sp.add_argument("kind", choices=KINDS)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--p", type=float)
    sp.add_argument("--seed", type=int)
    sp.add_argument("--root", type=int)
    sp.add_argument("--out", choices=("g6", "edges"), default="g6")
    sp.set_defaults(func=cmd_generate)

    sp = sub.add_parser("invariant", help="compute one exact invariant")
    sp.add_argument("name", choices=sorted(INVARIANTS) + ["indicator"])
    sp.add_argument("--input", required=True, help="graph file, optionally FILE@ROOT")
    sp.add_argument("--witness", action="store_true")
    sp.add_argument("--reading", choices=("literal", "deleted-root"), default="literal")
    graph_opts(sp)
    solver_opts(sp)
    sp.set_defaults(func=cmd_invariant)

    sp = sub.add_parser("color", help="optimal dominator or dominated colouring")
    sp.add_argument("kind", choices=("dominator", "dominated"))
    sp.add_argument("--input", required=True)
    sp.add_argument("--witness", action="store_true")
    graph_opts(sp)
    solver_opts(sp)
    sp.set_defaults(func=cmd_color)

    sp = sub.add_parser("product", help="build a graph product")
    sp.add_argument("kind", choices=("corona", "edge-corona", "hierarchical", "bridge-cycle"))
    sp.add_argument("--g")
    sp.add_argument("--h")
    sp.add_argument("--factor", action="append", help="hierarchical: G_N first ... G_1 last")
    sp.add_argument("--out", choices=("g6", "edges"), default="g6")
    graph_opts(sp)
    sp.set_defaults(func=cmd_product)

    sp = sub.add_parser("verify", help="run theorem checks over the instance families")
    sp.add_argument("theorem", help="theorem id (kebab-case) or 'all'")
    sp.add_argument("--max-n", type=int)
    sp.add_argument("--h-factors", help="comma-separated named H graphs, e.g. K1,K2,P3,K3")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--workers", type=int, help="worker processes (default: CPU count)")
    sp.add_argument("--out", help="report path, .json or .csv")
    solver_opts(sp)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("sharpness", help="list equality instances of an inequality")
    sp.add_argument("theorem")
    sp.add_argument("--g-family", required=True)
    sp.add_argument("--h-family", required=True)
    sp.add_argument("--max-n", type=int, default=4)
    solver_opts(sp)
    sp.set_defaults(func=cmd_sharpness)
    return p


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except UsageError as e:
        print(f"domcolor: usage error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except ConfigError as e:
        print(f"domcolor: configuration error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except ParseError as e:
        print(f"domcolor: parse error: {e}", file=sys.stderr)
        return EXIT_PARSE
    except BudgetExceededError as e:
        print(f"domcolor: {e}", file=sys.stderr)
        return EXIT_BUDGET
    except (GraphError, UndefinedInvariantError) as e:
        print(f"domcolor: {e}", file=sys.stderr)
        return EXIT_USAGE
    except DomColorError as e:
        print(f"domcolor: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
