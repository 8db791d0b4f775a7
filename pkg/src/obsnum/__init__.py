"""Exact tools for obstacle representations of graphs.

Super-order types of point sequences, verification and construction of
obstacle representations, minimum face obstacles for a fixed embedding,
and log-space evaluators for the probabilistic lower-bound argument.
"""
from .geometry import (
    IDENTICAL,
    PARALLEL,
    DirectedLine,
    Point,
    Sextuple,
    concurrency_poly,
    directed_line,
    is_admissible,
    is_degenerate,
    line_intersection,
    orientation,
    parallel_poly,
    point,
    sextuple_type,
)
from .super_order import (
    enumerate_admissible,
    is_simple,
    order_type,
    perturb_to_simple,
    pstar_sign,
    super_order_type,
)
from .representation import (
    ClusterObstacle,
    Embedding,
    FaceObstacle,
    Graph,
    ObstacleRepresentation,
    PointObstacle,
    PolygonObstacle,
    canonicalize_representation,
    intersect_edges,
    is_blocked,
    midpoint_representation,
    per_obstacle_decomposition,
    verify,
    visibility_graph,
)
from .arrangement import Arrangement, coverage_matrix, non_edge_face_sequence, planarize
from .minimizer import (
    SearchConfig,
    greedy_fixed,
    min_obstacles_fixed,
    obstacle_number_search,
    random_simple_embedding,
    slab_report,
)
from .bounds import (
    BoundConfig,
    binomial_tail_exact,
    chernoff_tail_log,
    hhat,
    lemma1_report,
    wn_lower_bound,
)

__version__ = "0.1.0"
