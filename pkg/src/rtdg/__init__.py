"""Distance graphs of finite spaces under the Rosenbloom-Tsfasman metric."""

from .algebra import (
    CompleteMultipartite,
    Copies,
    JoinPower,
    expr_chromatic,
    expr_component_count,
    expr_degree,
    expr_evaluate,
    expr_parse,
    expr_theorem,
    expr_theorem_product,
    expr_theorem_sn,
    expr_theorem_zq,
    expr_to_string,
    expr_vertex_count,
    normalize,
)
from .coloring import ChromaticResult, Coloring, chromatic_number_exact
from .config import Limits
from .errors import RTDGError
from .graph import (
    ComponentPartition,
    Graph,
    build_distance_graph,
    connected_components,
    degree_sequence,
    is_regular,
    verify_embedding,
)
from .isomorphism import are_isomorphic
from .spaces import (
    DistanceSet,
    Point,
    SpaceSpec,
    enumerate_space,
    perm_compose,
    perm_invert,
    rt_distance,
    rt_distance_perm,
    rt_distance_product,
    rt_distance_zq,
    rt_weight_zq,
)
from .verification import (
    VerificationReport,
    recover_distance_set_sn,
    recover_distance_set_zq,
    verify_corollary_suite_sn,
    verify_corollary_suite_zq,
    verify_metric_axioms,
    verify_sn_embedding,
    verify_structure_theorem,
)

__version__ = "0.1.0"
