"""Grouping of reachability signatures, complete-linkage agglomeration, and
the end-to-end clustering pipeline.

Distinct signature rows are clustered under Hamming distance, which is
integer-valued, so linkage ties are common and the tie rule must be pinned:
among minimum-distance pairs, merge the lexicographically smallest
(min-id, max-id) pair, where a cluster's id is the smallest distinct-row index
among its members.  Complete linkage depends only on the set of distinct rows;
multiplicities are kept for diagnostics only.

The all-zero row (points reached by no landmark) never participates in
linkage: each zero-signature point inherits the label of its nearest Euclidean
neighbor that has a nonzero signature.  Dropping such points would break
accuracy accounting and giving them their own cluster would steal one of the
K labels.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .dataset import PointSet
from .graph import build_knn_graph
from .pathfinder import LandmarkSet, FeatureMatrix, select_landmarks, compute_features

__all__ = [
    "FeatureGroups",
    "ClusteringResult",
    "StageError",
    "group_features",
    "complete_linkage",
    "linkage_with_trace",
    "assign_labels",
    "pbc_pipeline",
]


class StageError(RuntimeError):
    """Pipeline failure tagged with the stage that raised it."""

    def __init__(self, stage: str, cause: Exception):
        super().__init__(f"{stage}: {cause}")
        self.stage = stage
        self.cause = cause


@dataclass(frozen=True)
class FeatureGroups:
    """Deduplicated signature rows.

    distinct_rows is F x M with rows pairwise distinct, ordered by first
    appearance; multiplicity counts points per row and sums to N.
    """

    distinct_rows: np.ndarray
    multiplicity: np.ndarray
    row_of_point: np.ndarray

    @property
    def f(self) -> int:
        return self.distinct_rows.shape[0]


@dataclass(frozen=True)
class ClusteringResult:
    """Per-point labels in 0..k-1 plus diagnostics."""

    labels: np.ndarray
    k: int
    f: int
    landmark_indices: np.ndarray
    zero_signature_count: int
    merge_trace: tuple[tuple[int, int, int], ...] = ()
    expansions: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        labels = np.array(self.labels, dtype=np.int64)
        if np.unique(labels).size != self.k:
            raise ValueError("labels must contain exactly k distinct values")
        labels.setflags(write=False)
        object.__setattr__(self, "labels", labels)

    def diagnostics(self) -> dict:
        return {
            "n_points": int(self.labels.size),
            "k": self.k,
            "distinct_signatures": self.f,
            "landmarks": [int(i) for i in self.landmark_indices],
            "zero_signature_count": self.zero_signature_count,
            "merge_trace": [list(t) for t in self.merge_trace],
            "max_expansions_per_landmark": max(self.expansions, default=0),
        }


def group_features(features: FeatureMatrix) -> FeatureGroups:
    """Exact row deduplication, first-appearance order, O(NM) expected."""
    bits = features.bits
    seen: dict[bytes, int] = {}
    row_of_point = np.empty(bits.shape[0], dtype=np.int64)
    order: list[int] = []
    for i in range(bits.shape[0]):
        key = bits[i].tobytes()
        idx = seen.get(key)
        if idx is None:
            idx = len(seen)
            seen[key] = idx
            order.append(i)
        row_of_point[i] = idx
    distinct = bits[order]
    multiplicity = np.bincount(row_of_point, minlength=distinct.shape[0])
    return FeatureGroups(distinct, multiplicity, row_of_point)


def _hamming_matrix(rows: np.ndarray) -> np.ndarray:
    diff = rows[:, None, :] != rows[None, :, :]
    return diff.sum(axis=2).astype(np.int64)


def complete_linkage(groups: FeatureGroups, k: int) -> dict[int, int]:
    """Agglomerate distinct nonzero rows down to k clusters; map row -> label.

    Starts from singletons and repeatedly merges the pair of clusters with
    minimal complete-linkage Hamming distance D(A,B) = max over member pairs,
    maintained incrementally as D(A+B, C) = max(D(A,C), D(B,C)).  Final labels
    are assigned 0..k-1 in order of each cluster's smallest member row index.
    """
    labels, _ = linkage_with_trace(groups, k)
    return labels


def linkage_with_trace(
    groups: FeatureGroups, k: int
) -> tuple[dict[int, int], tuple[tuple[int, int, int], ...]]:
    """complete_linkage plus the ordered (id_a, id_b, distance) merge record."""
    nonzero = np.flatnonzero(groups.distinct_rows.any(axis=1))
    if nonzero.size < k:
        raise ValueError(
            f"fewer than K distinct rows: {nonzero.size} nonzero signatures for K={k}; "
            "decrease alpha or increase q or M"
        )
    rows = groups.distinct_rows[nonzero]
    dist = _hamming_matrix(rows).astype(np.float64)
    np.fill_diagonal(dist, np.inf)

    ids = nonzero.astype(np.int64).copy()  # cluster id = smallest member row index
    active = np.ones(nonzero.size, dtype=bool)
    members: list[list[int]] = [[int(r)] for r in nonzero]
    trace: list[tuple[int, int, int]] = []

    remaining = nonzero.size
    while remaining > k:
        sub = np.where(active)[0]
        d = dist[np.ix_(sub, sub)]
        dmin = d.min()
        ai, aj = np.where(np.triu(d == dmin, k=1))
        pair_ids = np.sort(np.stack([ids[sub[ai]], ids[sub[aj]]], axis=1), axis=1)
        pick = np.lexsort((pair_ids[:, 1], pair_ids[:, 0]))[0]
        i, j = sub[ai[pick]], sub[aj[pick]]
        if ids[i] > ids[j]:
            i, j = j, i
        trace.append((int(ids[i]), int(ids[j]), int(dmin)))
        # Complete-linkage update: distance to the merged cluster is the max.
        merged = np.maximum(dist[i], dist[j])
        dist[i, :] = merged
        dist[:, i] = merged
        dist[i, i] = np.inf
        active[j] = False
        dist[j, :] = np.inf
        dist[:, j] = np.inf
        members[i].extend(members[j])
        remaining -= 1

    final = sorted((int(ids[c]), members[c]) for c in np.where(active)[0])
    labels: dict[int, int] = {}
    for label, (_, member_rows) in enumerate(final):
        for r in member_rows:
            labels[r] = label
    return labels, tuple(trace)


def assign_labels(groups: FeatureGroups, group_labels: dict[int, int],
                  points: PointSet, *, landmarks: LandmarkSet | None = None,
                  merge_trace: tuple[tuple[int, int, int], ...] = (),
                  expansions: tuple[int, ...] = ()) -> ClusteringResult:
    """Give each point its row's label; zero-signature points borrow a label.

    A zero-signature point takes the label of its nearest Euclidean neighbor
    with a nonzero signature (ties toward the lower point index); labels of
    nonzero-signature points are never altered.
    """
    zero_rows = np.flatnonzero(~groups.distinct_rows.any(axis=1))
    zero_row = int(zero_rows[0]) if zero_rows.size else -1
    missing = [r for r in range(groups.f) if r != zero_row and r not in group_labels]
    if missing:
        raise ValueError(f"group_labels does not cover nonzero rows {missing}")

    n = points.n
    labels = np.empty(n, dtype=np.int64)
    is_zero = groups.row_of_point == zero_row if zero_row >= 0 else np.zeros(n, dtype=bool)
    zero_count = int(is_zero.sum())
    if zero_count == n:
        raise ValueError(
            "all points have zero signatures: no landmark reached anything "
            "(alpha too strict or landmarks disconnected)"
        )
    for i in np.flatnonzero(~is_zero):
        labels[i] = group_labels[int(groups.row_of_point[i])]

    if zero_count:
        coords = points.coords
        donors = np.flatnonzero(~is_zero)
        for i in np.flatnonzero(is_zero):
            diff = coords[donors] - coords[i]
            d2 = (diff * diff).sum(axis=1)
            labels[i] = labels[donors[int(np.argmin(d2))]]

    k = int(np.unique([group_labels[r] for r in group_labels]).size)
    return ClusteringResult(
        labels, k, groups.f,
        landmarks.indices if landmarks is not None else np.empty(0, dtype=np.int64),
        zero_count, tuple(merge_trace), tuple(expansions),
    )


def pbc_pipeline(points: PointSet, q: int, k: int, m: int, alpha: float,
                 seed: int, mode: str = "union",
                 use_cache: bool = False) -> ClusteringResult:
    """Path-based clustering end to end, deterministic given (inputs, seed).

    build graph -> draw landmarks -> reachability signatures -> group rows ->
    complete linkage -> label assignment.  Errors carry their stage name.
    """
    try:
        graph = build_knn_graph(points, q, mode)
    except Exception as exc:
        raise StageError("graph", exc) from exc
    try:
        landmarks = select_landmarks(points.n, m, seed)
    except Exception as exc:
        raise StageError("landmarks", exc) from exc
    try:
        features = compute_features(graph, landmarks, alpha, use_cache)
    except Exception as exc:
        raise StageError("features", exc) from exc
    try:
        groups = group_features(features)
    except Exception as exc:
        raise StageError("group", exc) from exc
    try:
        group_labels, trace = linkage_with_trace(groups, k)
    except Exception as exc:
        raise StageError("cluster", exc) from exc
    try:
        return assign_labels(
            groups, group_labels, points,
            landmarks=landmarks, merge_trace=trace, expansions=features.expansions,
        )
    except Exception as exc:
        raise StageError("assign", exc) from exc
