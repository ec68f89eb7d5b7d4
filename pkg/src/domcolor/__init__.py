"""Exact dominator and dominated colourings of graph products.

Graphs are small simple graphs with bitset adjacency (:class:`Graph`).  The
exact solvers count search nodes against a budget and raise instead of
guessing when it runs out.
"""

from .colorings import (
    Coloring,
    dominated_chromatic_number,
    dominator_chromatic_number,
    indicator_I,
    is_dominated_coloring,
    is_dominator_coloring,
    is_proper,
    optimal_dominated_colorings,
)
from .errors import (
    BudgetExceededError,
    ConfigError,
    DomColorError,
    GraphError,
    ParseError,
    UndefinedInvariantError,
)
from .formats import parse_edge_list, parse_graph6, read_graph, to_edge_list, to_graph6
from .generators import complete, cycle, generate, path, random_bipartite, random_gnp, random_tree, star
from .graph import Graph, delete_vertex
from .invariants import (
    Budget,
    InvariantResult,
    chromatic_number,
    domination_number,
    matching_number,
    total_domination_number,
    vertex_cover_number,
)
from .predicates import predicates
from .products import bridge_cycle, corona, edge_corona, hierarchical
from .suite import SuiteConfig, SuiteReport, find_sharpness, run_suite
from .theorems import CheckResult, Instance, TheoremId, Verdict, evaluate
