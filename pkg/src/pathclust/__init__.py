"""Multi-manifold clustering by angle-constrained path reachability.

Points sampled near several intersecting smooth surfaces are clustered by
testing, for every point, whether an angle-constrained path in the q-nearest-
neighbor graph connects it to each of M random landmarks; the resulting binary
signatures are grouped and merged down to K clusters with complete-linkage
agglomeration.
"""

from .dataset import (
    PointSet,
    LabeledPointSet,
    load_csv,
    load_labels,
    save_labels,
    save_points_csv,
    pca_project,
)
from .graph import NeighborGraph, CoincidentPointsError, build_knn_graph, vertex_angle
from .pathfinder import (
    LandmarkSet,
    FeatureMatrix,
    select_landmarks,
    alpha_reachable,
    compute_features,
)
from .cluster import (
    FeatureGroups,
    ClusteringResult,
    StageError,
    group_features,
    complete_linkage,
    linkage_with_trace,
    assign_labels,
    pbc_pipeline,
)
from .datagen import (
    MixtureSpec,
    sample_mixture,
    make_benchmark,
    benchmark_names,
    benchmark_info,
)
from .evaluation import ConfusionMatrix, confusion, accuracy

__version__ = "0.1.0"

__all__ = [
    "PointSet", "LabeledPointSet", "load_csv", "load_labels", "save_labels",
    "save_points_csv", "pca_project",
    "NeighborGraph", "CoincidentPointsError", "build_knn_graph", "vertex_angle",
    "LandmarkSet", "FeatureMatrix", "select_landmarks", "alpha_reachable",
    "compute_features",
    "FeatureGroups", "ClusteringResult", "StageError", "group_features",
    "complete_linkage", "linkage_with_trace", "assign_labels", "pbc_pipeline",
    "MixtureSpec", "sample_mixture", "make_benchmark", "benchmark_names",
    "benchmark_info",
    "ConfusionMatrix", "confusion", "accuracy",
]
