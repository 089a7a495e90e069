"""Weighted one-center of uncertain points on cactus networks."""

from .errors import (
    BadVertexId,
    CactusError,
    EmptySubtree,
    IndexOutOfRange,
    InfeasibleParams,
    InternalInconsistency,
    InvalidInstance,
    NonpositiveEdgeLength,
    NotABlockNode,
    NotACactus,
    NotACycle,
    NotAHingeNode,
    NotAnArticulation,
    NotANode,
    NotATree,
    NotConnected,
    NotVertexConstrained,
    UnmappablePoint,
)
from .graph import (
    Block,
    CactusGraph,
    Edge,
    GraphPoint,
    biconnected_blocks,
    build_graph,
    shortest_distance,
)
from .model import (
    CenterResult,
    Instance,
    Location,
    UncertainPoint,
    ValidationReport,
    expected_distance_naive,
    expected_distances_all,
    naive_expected_all,
    probability_split_sums,
    validate_instance,
)
from .skeleton import (
    HSubtree,
    SkeletonNode,
    SkeletonTree,
    build_skeleton,
    centroid,
    h_subtree,
)

__all__ = [name for name in dir() if not name.startswith("_")]
