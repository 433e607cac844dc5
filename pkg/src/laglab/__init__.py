"""laglab: hypergraph Lagrangians, colex-initial graphs, and conjecture sweeps."""

from laglab.solver import (
    LagrangianResult,
    SolverOptions,
    evaluate,
    kkt_check,
    lagrangian,
    lagrangian_2graph_oracle,
    link_value,
    support_enumeration,
    symmetry_classes,
)
from laglab.verifier import (
    ConfigurationSpec,
    VerificationReport,
    VerifierOptions,
    build_configuration,
    check_theorem_inequality,
    sweep,
    verify_cell,
)
from laglab.hypergraph import (
    Edge,
    RGraph,
    ancestors,
    build_colex_graph,
    colex_compare,
    colex_rank,
    colex_unrank,
    complement,
    compress,
    count_left_compressed,
    descendants,
    difference_link,
    direct_descendants,
    enumerate_left_compressed,
    is_left_compressed,
    link,
    pair_link,
    parse_edge_list,
    serialize_edge_list,
)

__all__ = [
    "ConfigurationSpec",
    "Edge",
    "LagrangianResult",
    "RGraph",
    "SolverOptions",
    "VerificationReport",
    "VerifierOptions",
    "ancestors",
    "build_colex_graph",
    "build_configuration",
    "check_theorem_inequality",
    "colex_compare",
    "colex_rank",
    "colex_unrank",
    "complement",
    "compress",
    "count_left_compressed",
    "descendants",
    "difference_link",
    "direct_descendants",
    "enumerate_left_compressed",
    "evaluate",
    "is_left_compressed",
    "kkt_check",
    "lagrangian",
    "lagrangian_2graph_oracle",
    "link",
    "link_value",
    "pair_link",
    "parse_edge_list",
    "serialize_edge_list",
    "support_enumeration",
    "sweep",
    "symmetry_classes",
    "verify_cell",
]

__version__ = "0.1.0"
