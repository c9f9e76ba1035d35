"""Landmark selection and angle-constrained reachability.

A path y_1..y_m is alpha-constrained when the interior angle at every
y_t (t = 2..m-1) is at least alpha.  Whether a node can be extended depends on
the edge it was entered through, so node-level search is wrong here: the
traversal runs over DIRECTED-EDGE states.  State (u->v) expands to (v->w)
whenever the interior angle at v between u and w is >= alpha; each directed
edge is visited at most once, so a full sweep expands at most 2*|edges|
states.  Only reachability is needed downstream (the signature bits are
binary), so a breadth-first frontier replaces priority-queue search and path
lengths are never tracked.

Angles enter through cosines: angle >= alpha is equivalent to
cos(angle) <= cos(alpha) on [0, pi], which skips one arccos per candidate.
Backtracking u->v->u has cosine +1 (angle 0) and dies at any alpha > 0; at
alpha = 0 the constraint is vacuous and the sweep reduces to plain
connectivity.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .graph import NeighborGraph

__all__ = [
    "LandmarkSet",
    "FeatureMatrix",
    "select_landmarks",
    "alpha_reachable",
    "compute_features",
]


@dataclass(frozen=True)
class LandmarkSet:
    """M distinct point indices plus the seed they were drawn with."""

    indices: np.ndarray
    seed: int

    def __post_init__(self) -> None:
        idx = np.array(self.indices, dtype=np.int64)
        if idx.ndim != 1 or idx.size < 1:
            raise ValueError("need at least one landmark")
        if np.unique(idx).size != idx.size:
            raise ValueError("landmark indices must be distinct")
        idx.setflags(write=False)
        object.__setattr__(self, "indices", idx)

    @property
    def m(self) -> int:
        return self.indices.size


@dataclass(frozen=True)
class FeatureMatrix:
    """N x M binary reachability signatures; column j belongs to landmark j.

    bits[l_j][j] is always 1 (a landmark reaches itself by the empty path) and
    graph-neighbors of a landmark are always 1 in its column (single-edge
    paths have no interior vertex).  ``expansions[j]`` counts directed-edge
    states expanded while sweeping landmark j.
    """

    bits: np.ndarray
    landmarks: LandmarkSet
    expansions: tuple[int, ...]

    def __post_init__(self) -> None:
        bits = np.array(self.bits, dtype=np.uint8)
        bits.setflags(write=False)
        object.__setattr__(self, "bits", bits)


def select_landmarks(n: int, m: int, seed: int) -> LandmarkSet:
    """Draw M distinct indices uniformly without replacement from 0..N-1.

    Deterministic across platforms: a partial Fisher-Yates shuffle driven by
    numpy's PCG64 stream for the given 64-bit seed.
    """
    if not 1 <= m <= n:
        raise ValueError(f"cannot draw {m} distinct landmarks from {n} points")
    rng = np.random.Generator(np.random.PCG64(seed))
    pool = np.arange(n, dtype=np.int64)
    for i in range(m):
        j = i + int(rng.integers(0, n - i))
        pool[i], pool[j] = pool[j], pool[i]
    return LandmarkSet(pool[:m], seed)


def _sweep(graph: NeighborGraph, source: int, cos_alpha: float,
           use_cache: bool) -> tuple[np.ndarray, int]:
    """Level-synchronous BFS over directed-edge states; returns (bits, pops)."""
    indptr, heads, dirs, deg = graph.indptr, graph.indices, graph.dirs, graph.degrees
    reached = np.zeros(graph.n, dtype=bool)
    reached[source] = True
    visited = np.zeros(heads.size, dtype=bool)
    frontier = np.arange(indptr[source], indptr[source + 1])
    expanded = 0
    if frontier.size:
        visited[frontier] = True
        reached[heads[frontier]] = True
    cache = graph._cos_cache if use_cache else None

    while frontier.size:
        expanded += int(frontier.size)
        v = heads[frontier]
        dv = deg[v]
        total = int(dv.sum())
        if total == 0:
            break
        rep = np.repeat(np.arange(frontier.size), dv)
        local = np.arange(total) - np.repeat(np.cumsum(dv) - dv, dv)
        f = indptr[v][rep] + local
        e = frontier[rep]
        if cache is None:
            # Interior cosine at v between u and w is dot(unit(u-v), unit(w-v))
            # = -dot(dir(u->v), dir(v->w)); negation is exact.
            cos = -np.einsum("ij,ij->i", dirs[e], dirs[f])
        else:
            base, flat, rev = cache
            vv = v[rep]
            cos = flat[base[vv] + (rev[e] - indptr[vv]) * deg[vv] + local]
        np.clip(cos, -1.0, 1.0, out=cos)
        keep = (cos <= cos_alpha) & ~visited[f]
        f = np.unique(f[keep])
        if f.size:
            visited[f] = True
            reached[heads[f]] = True
        frontier = f
    return reached, expanded


def alpha_reachable(graph: NeighborGraph, source: int, alpha: float,
                    use_cache: bool = False) -> np.ndarray:
    """Binary vector: entry i is 1 iff an alpha-constrained path joins source to i.

    The source itself is always marked.  ``use_cache`` reads precomputed
    per-node cosine blocks (see NeighborGraph.enable_angle_cache).
    """
    if not 0 <= source < graph.n:
        raise ValueError(f"source {source} out of range")
    if not 0.0 <= alpha <= math.pi + 1e-12:
        raise ValueError(f"alpha must lie in [0, pi], got {alpha}")
    if use_cache:
        graph.enable_angle_cache()
    bits, _ = _sweep(graph, source, math.cos(alpha), use_cache)
    return bits.astype(np.uint8)


def compute_features(graph: NeighborGraph, landmarks: LandmarkSet, alpha: float,
                     use_cache: bool = False) -> FeatureMatrix:
    """Stack per-landmark reachability columns into the N x M signature matrix.

    Columns are independent (each is a read-only sweep over the shared graph),
    so the result does not depend on evaluation order.
    """
    if landmarks.indices.max() >= graph.n:
        raise ValueError("landmark index out of range for this graph")
    if not 0.0 <= alpha <= math.pi + 1e-12:
        raise ValueError(f"alpha must lie in [0, pi], got {alpha}")
    if use_cache:
        graph.enable_angle_cache()
    cos_alpha = math.cos(alpha)
    bits = np.zeros((graph.n, landmarks.m), dtype=np.uint8)
    pops = []
    for j, source in enumerate(landmarks.indices):
        col, expanded = _sweep(graph, int(source), cos_alpha, use_cache)
        bits[:, j] = col
        pops.append(expanded)
    return FeatureMatrix(bits, landmarks, tuple(pops))
