"""Reproduce the smallest instances where a stated formula fails.

Each line shows the computed value, the formula value and a witness
colouring that the validator accepts.
"""

from __future__ import annotations

from domcolor.colorings import is_dominated_coloring
from domcolor.generators import complete, cycle, star
from domcolor.graph import Graph
from domcolor.products import edge_corona
from domcolor.theorems import TheoremId, evaluate, instance

CASES = [
    (TheoremId.CORONA_DOMINATED, instance("G H", complete(1), complete(1))),
    (TheoremId.EDGECORONA_LOWER_NOPENDANT, instance("G H", cycle(3), complete(1))),
    (TheoremId.EDGECORONA_LOWER_PENDANT, instance("G H", star(4), complete(1))),
    (TheoremId.CYCLE_DOMINATED, instance(k=3)),
    (TheoremId.HIER_DOMINATED_FORMULA, instance("G H", complete(2), cycle(5).with_root(0))),
    (TheoremId.HIER_DOMINATED_FORMULA,
     instance("G H", complete(2), Graph.from_edges(5, [(0, 1), (0, 4), (1, 2), (2, 3)]).with_root(1))),
]


def main() -> int:
    for tid, inst in CASES:
        r = evaluate(tid, inst)
        witness = r.witnesses.get("lhs_coloring")
        print(f"{tid.value:28s} {inst.label():28s} lhs={r.lhs} rhs={r.rhs} {r.verdict_text}")
        if witness is not None:
            print(f"{'':28s} witness {witness}")
        alt = r.notes.get("deleted_root_reading")
        if alt:
            print(f"{'':28s} deleted-root reading rhs={alt['rhs']} {alt['verdict']}")
    # a hand-built colouring for the triangle case: edge vertices copy the opposite corner
    assert is_dominated_coloring(edge_corona(cycle(3), complete(1)), [0, 1, 2, 2, 1, 0])
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
