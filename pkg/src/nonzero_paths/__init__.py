"""Shortest non-zero paths and cycles in group-labeled graphs."""

from .blossom import (
    Blossom,
    ShrinkResult,
    detour_path,
    expand,
    find_lowest_blossom,
    shrink,
    simplify,
)
from .cycle import CycleResult, shortest_nonzero_cycle, shortest_nonzero_cycle_naive
from .errors import (
    BudgetExceeded,
    InfeasibleError,
    NonZeroPathError,
    ParseError,
    StructuralError,
    UsageError,
)
from .fast import DisjointSetForest, DualSolution, FastCounters, check_dual_feasibility, fast_sup, reconstruct_path
from .graph import Edge, LabeledGraph, Walk, concat
from .groups import CyclicGroup, DirectProduct, FreeGroup, Group, IntegerGroup, Z2, parse_group
from .instance import Instance, parse_instance, render_instance
from .parallel import reduce_parallel_edges
from .recursive import PathResult, SolverStats, shortest_nonzero_path, sup_recursive
from .spt import ShortestPathTree, check_potential, dijkstra, is_consistent, tree_path

__version__ = "0.1.0"
