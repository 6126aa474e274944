"""Metric dimension of corona product graphs: exact search and closed forms."""

from .bounds import BoundKind, BoundResult
from .graph import (
    CoronaStructure,
    FamilyDescriptor,
    Graph,
    complement,
    corona,
    disjoint_union,
    family,
    iterated_corona,
    join,
    make_family,
)
from .metric import UNREACHABLE, DistanceMatrix, all_pairs, bfs_distances, diameter, representation
from .resolver import (
    SolverBudget,
    SolverResult,
    Status,
    greedy_upper_bound,
    is_resolving,
    metric_dimension_exact,
    twin_lower_bound,
    twin_partition,
)
from .expr import parse_graph_expr

__version__ = "0.1.0"
