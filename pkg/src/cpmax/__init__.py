"""Exact max-plus critical-path analysis for project networks.

The toolkit models a project chart as a finite poset, derives its
earliest-finishing-time max-plus polynomial, decomposes cost space into
chambers with a unique critical path each, and answers what-if questions
about cost changes exactly, over rational arithmetic throughout.
"""

from .chambers import (
    ChamberLocation,
    LabeledGraph,
    adjacency_graph,
    adjacency_test,
    cartesian_product,
    chamber_cone_dimension,
    chamber_membership,
    complement_relabel,
    complete_graph,
    degree_sequence,
    graph_equal,
    graph_from_json,
    graph_to_dot,
    graph_to_json,
    interior_point,
    is_complete,
    is_subgraph,
    make_graph,
    newton_edge_test,
    newton_skeleton,
    relabel_vertices,
)
from .errors import (
    BadParameters,
    ChainCapExceeded,
    CycleDetected,
    DimensionMismatch,
    DivisibleTerms,
    DuplicateArc,
    EmptySupport,
    FullTerm,
    IndexOutOfRange,
    InvalidInput,
    LimitExceeded,
    NegativeCost,
    OnWall,
    SearchLimitExceeded,
    SelfLoop,
    ShortCut,
    TermBudgetExceeded,
    ToolkitError,
    UnknownTerm,
    VertexSetMismatch,
)
from .feasibility import (
    ConstraintSystem,
    cone_dimension,
    feasible,
    make_system,
    satisfies,
)
from .network import (
    DEFAULT_CHAIN_CAP,
    Poset,
    ProjectNetwork,
    linear_extension,
    maximal_chains,
    network_from_json,
    network_to_dot,
    network_to_json,
    normalize_shortcuts,
    to_hasse,
    to_poset,
    validate_network,
)
from .realise import (
    CoveringPairObstruction,
    covering_pair_obstruction,
    eft_polynomial,
    realise,
    verify_realisation,
)
from .serialize import dumps, format_rational, loads, parse_rational
from .tropical import (
    EvalResult,
    TropicalPolynomial,
    gen_fnk,
    make_poly,
    poly_from_json,
    poly_to_json,
    product,
)
from .whatif import (
    Crossing,
    Horizon,
    TransitionPrediction,
    WhatIfResult,
    critical_paths,
    predict_transitions,
    ray_trace,
)

__version__ = "0.1.0"
