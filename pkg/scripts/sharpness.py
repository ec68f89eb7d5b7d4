"""List the smallest equality instances of an inequality.

    python3 scripts/sharpness.py edgecorona-upper --g-family cycles --h-family complete --max-n 4
"""

from __future__ import annotations

import argparse

from domcolor.suite import FAMILIES, find_sharpness


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("theorem")
    ap.add_argument("--g-family", choices=sorted(FAMILIES), default="connected")
    ap.add_argument("--h-family", choices=sorted(FAMILIES), default="complete")
    ap.add_argument("--max-n", type=int, default=4)
    ap.add_argument("--limit", type=int, default=10)
    args = ap.parse_args(argv)
    hits = find_sharpness(args.theorem, args.g_family, args.h_family, args.max_n)
    for r in hits[: args.limit]:
        print(f"{r.instance.label()}  lhs={r.lhs} rhs={r.rhs}")
    print(f"{len(hits)} equality instances")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
