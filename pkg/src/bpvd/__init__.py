"""Vertex deletion to bipartite permutation graphs.

An exact fixed-parameter solver, a polynomial factor-9 approximation, and a
structural analysis toolkit for the question: can at most k vertices be
removed from a graph so that a bipartite permutation graph remains?
"""

from .errors import (
    BpvdError,
    ContractViolation,
    DiagnosticFailure,
    GenerationError,
    ParseError,
    StructureViolation,
)
from .graph import (
    Bipartition,
    Graph,
    bipartition_or_odd_cycle,
    connected_components,
    distance,
    induced_subgraph,
    parse_graph,
    serialize_graph,
)
from .holecut import FlowNetwork, HoleCut, build_network, max_flow_min_cut, min_hole_cut
from .instances import (
    GenSpec,
    PlantedInstance,
    Xorshift64Star,
    gen_cycle,
    gen_planted,
    gen_staircase,
    gen_thickened_cycle,
    generate,
)
from .patterns import (
    PATTERN_GRAPHS,
    ForbiddenSet,
    Hole,
    PatternKind,
    StrongOrdering,
    bpg_witness,
    find_forbidden_set,
    find_shortest_hole,
    induces_pattern,
    is_almost_bpg,
    is_bpg,
    is_valid_hole,
    verify_adjacency_enclosure,
    verify_strong_ordering,
)
from .solver import (
    FptResult,
    Instance,
    Solution,
    SolveStats,
    approx9,
    oracle_solve,
    solve_component_poly,
    solve_fpt,
)
from .structure import (
    HolePartition,
    StructureReport,
    WindowSpec,
    build_local_orders,
    classify_around_hole,
    verify_structure,
    window,
)

__version__ = "0.1.0"

__all__ = [
    "BpvdError", "ContractViolation", "DiagnosticFailure", "GenerationError",
    "ParseError", "StructureViolation",
    "Graph", "Bipartition", "parse_graph", "serialize_graph", "induced_subgraph",
    "connected_components", "bipartition_or_odd_cycle", "distance",
    "PatternKind", "ForbiddenSet", "Hole", "StrongOrdering", "PATTERN_GRAPHS",
    "induces_pattern", "is_valid_hole", "find_forbidden_set", "find_shortest_hole",
    "is_almost_bpg", "is_bpg", "bpg_witness",
    "verify_strong_ordering", "verify_adjacency_enclosure",
    "HolePartition", "WindowSpec", "StructureReport",
    "classify_around_hole", "build_local_orders", "window", "verify_structure",
    "FlowNetwork", "HoleCut", "build_network", "max_flow_min_cut", "min_hole_cut",
    "Instance", "Solution", "SolveStats", "FptResult",
    "solve_component_poly", "solve_fpt", "approx9", "oracle_solve",
    "GenSpec", "PlantedInstance", "Xorshift64Star",
    "gen_staircase", "gen_cycle", "gen_thickened_cycle", "gen_planted", "generate",
]
