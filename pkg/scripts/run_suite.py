"""Run the theorem suite over a configurable family and write a report.

    python3 scripts/run_suite.py --theorems corona-dominated,cycle-dominated --max-n 4 --out report.json
"""

from __future__ import annotations

import argparse
import time
from dataclasses import fields
from pathlib import Path

from domcolor.suite import SuiteConfig, run_suite


def parse_args(argv=None) -> argparse.Namespace:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--theorems", help="comma-separated theorem ids (default: all)")
    ap.add_argument("--max-n", type=int, default=SuiteConfig.max_n)
    ap.add_argument("--h-factors", default=",".join(SuiteConfig.h_factors))
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--workers", type=int, default=1)
    ap.add_argument("--out", type=Path, help="write .json or .csv report")
    return ap.parse_args(argv)


def main(argv=None) -> int:
    args = parse_args(argv)
    cfg = SuiteConfig(max_n=args.max_n, h_factors=tuple(args.h_factors.split(",")), seed=args.seed, workers=args.workers)
    if args.theorems:
        cfg.theorems = tuple(args.theorems.split(","))
    t = time.perf_counter()
    report = run_suite(cfg)
    print(report.summary())
    print(f"{len(report.results)} checks in {time.perf_counter() - t:.1f}s")
    for r in report.violations:
        print(f"  VIOLATED {r.theorem.value} {r.instance.label()} lhs={r.lhs} rhs={r.rhs}")
    if args.out:
        text = report.to_csv() if args.out.suffix == ".csv" else report.to_json()
        args.out.write_text(text)
    return 2 if report.violations else 0


if __name__ == "__main__":
    raise SystemExit(main())
