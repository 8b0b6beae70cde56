"""Multiobjective minimum spanning tree toolkit.

Two solvers over an implicitly built transition graph (a label-setting
multiobjective Dijkstra with arc pruning, and the build-network baseline
with canonical tree representations), red/blue preprocessing, a brute-force
oracle, seeded instance generators, and a benchmark harness.
"""

from .bn import BnLabel, minimal_extensions, solve_bn
from .core import (
    CostVector,
    DisconnectedGraphError,
    EdgeId,
    Frontier,
    InstanceError,
    MultiGraph,
    NegativeCostError,
    UnsupportedSizeError,
    cut,
    dominates,
    dominates_or_equal,
    frontier_dominates,
    lex_less,
)
from .igmda import Label, Limits, SolveResult, SolveStats, reconstruct_tree, solve
from .instance_io import (
    InstanceSpec,
    ParseError,
    generate,
    instance_text,
    parse_instance,
    serialize_instance,
)
from .oracle import TreeSet, enumerate_spanning_trees, nondominated_costs, pareto_filter
from .preprocess import Reduction, is_blue, is_red, lift, reduce
from .transition import ArcCopy, StateMap, build_outgoing, explicit_graph, node_index

__all__ = [
    "ArcCopy", "BnLabel", "CostVector", "DisconnectedGraphError", "EdgeId",
    "Frontier", "InstanceError", "InstanceSpec", "Label", "Limits",
    "MultiGraph", "NegativeCostError", "ParseError", "Reduction",
    "SolveResult", "SolveStats", "StateMap", "TreeSet",
    "UnsupportedSizeError", "build_outgoing", "cut", "dominates",
    "dominates_or_equal", "enumerate_spanning_trees", "explicit_graph",
    "frontier_dominates", "generate", "instance_text", "is_blue", "is_red",
    "lex_less", "lift", "minimal_extensions", "node_index",
    "nondominated_costs", "parse_instance", "pareto_filter",
    "reconstruct_tree", "reduce", "serialize_instance", "solve", "solve_bn",
]

__version__ = "0.1.0"
