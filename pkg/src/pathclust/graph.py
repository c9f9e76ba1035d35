"""Symmetric q-nearest-neighbor graphs and the vertex-angle primitive.

The graph is stored in CSR form (``indptr``/``indices``) with per-directed-edge
Euclidean lengths and unit direction vectors; the constrained search consumes
those directly.  Build is O(qN log N) expected through a kd-tree; a brute-force
O(N^2 D) builder is provided as the exact reference and must produce the
identical graph (same candidate-ranking arithmetic, same tie rule).
"""

from __future__ import annotations

import math

import numpy as np
from scipy import sparse
from scipy.spatial import cKDTree

from .dataset import PointSet

__all__ = [
    "NeighborGraph",
    "CoincidentPointsError",
    "build_knn_graph",
    "vertex_angle",
]

_MODES = ("union", "mutual")


class CoincidentPointsError(ValueError):
    """Two points coincide; vertex angles at zero-length edges are undefined."""

    def __init__(self, i: int, j: int):
        super().__init__(
            f"points {i} and {j} coincide (zero distance); "
            "deduplicate the input before building the graph"
        )
        self.pair = (i, j)


class NeighborGraph:
    """Immutable symmetric q-NN graph over a PointSet.

    Adjacency lists are sorted, self-loop free and duplicate free;
    ``edge_length(i, j) == edge_length(j, i)`` is the Euclidean distance.
    Read-only queries are safe to run concurrently.
    """

    def __init__(self, points: PointSet, q: int, mode: str,
                 indptr: np.ndarray, indices: np.ndarray):
        self.points = points
        self.q = q
        self.mode = mode
        self.indptr = indptr
        self.indices = indices
        self.degrees = np.diff(indptr)
        coords = points.coords
        tails = np.repeat(np.arange(points.n), self.degrees)
        diff = coords[indices] - coords[tails]
        self.lengths = np.sqrt((diff * diff).sum(axis=1))
        # Unit direction of each directed edge tail->head.
        self.dirs = diff / self.lengths[:, None]
        self._tails = tails
        self._cos_cache = None
        for arr in (self.indptr, self.indices, self.degrees, self.lengths, self.dirs):
            arr.setflags(write=False)

    @property
    def n(self) -> int:
        return self.points.n

    @property
    def num_edges(self) -> int:
        """Undirected edge count."""
        return self.indices.size // 2

    def neighbors(self, i: int) -> np.ndarray:
        return self.indices[self.indptr[i]:self.indptr[i + 1]]

    def edge_length(self, i: int, j: int) -> float:
        sl = slice(self.indptr[i], self.indptr[i + 1])
        pos = np.searchsorted(self.indices[sl], j)
        block = self.indices[sl]
        if pos >= block.size or block[pos] != j:
            raise KeyError(f"no edge between {i} and {j}")
        return float(self.lengths[self.indptr[i] + pos])

    def edge_set(self) -> set[tuple[int, int]]:
        """Undirected edges as (i, j) pairs with i < j."""
        mask = self._tails < self.indices
        return set(zip(self._tails[mask].tolist(), self.indices[mask].tolist()))

    def enable_angle_cache(self) -> None:
        """Precompute per-node cosine blocks between incident edge directions.

        Costs O(sum(deg^2)) memory; worthwhile for sweeps that reuse one graph
        across several alpha values.
        """
        if self._cos_cache is not None:
            return
        deg = self.degrees
        base = np.zeros(self.n + 1, dtype=np.int64)
        np.cumsum(deg * deg, out=base[1:])
        flat = np.empty(base[-1], dtype=np.float64)
        for v in range(self.n):
            u = self.dirs[self.indptr[v]:self.indptr[v + 1]]
            flat[base[v]:base[v + 1]] = (u @ u.T).ravel()
        # Reverse-edge lookup: rev[e] is the directed edge head(e)->tail(e).
        heads = self.indices
        rev = np.empty(heads.size, dtype=np.int64)
        for e in range(heads.size):
            h = heads[e]
            sl = slice(self.indptr[h], self.indptr[h + 1])
            rev[e] = self.indptr[h] + np.searchsorted(self.indices[sl], self._tails[e])
        self._cos_cache = (base, flat, rev)

    def dump_edges(self, path) -> None:
        """Debug dump: one ``i j length`` line per undirected edge, sorted."""
        mask = self._tails < self.indices
        ii, jj, ll = self._tails[mask], self.indices[mask], self.lengths[mask]
        order = np.lexsort((jj, ii))
        with open(path, "w", encoding="utf-8") as fh:
            for k in order:
                fh.write(f"{ii[k]} {jj[k]} {ll[k]!r}\n")


def vertex_angle(a: np.ndarray, b: np.ndarray, c: np.ndarray) -> float:
    """Angle at b between segments b->a and b->c, in [0, pi].

    Collinear continuation gives pi, doubling back gives 0.  The normalized
    inner product is clamped to [-1, 1] to guard floating-point overshoot.
    """
    a = np.asarray(a, dtype=np.float64)
    b = np.asarray(b, dtype=np.float64)
    c = np.asarray(c, dtype=np.float64)
    u = a - b
    v = c - b
    nu = math.sqrt(float(u @ u))
    nv = math.sqrt(float(v @ v))
    if nu == 0.0 or nv == 0.0:
        raise ValueError("vertex angle undefined for a zero-length segment")
    cos = float(u @ v) / (nu * nv)
    return math.acos(min(1.0, max(-1.0, cos)))


def _rank_candidates(coords: np.ndarray, i: int, cand: np.ndarray, q: int) -> np.ndarray:
    """Pick i's q nearest among cand, ties broken by lower point index."""
    diff = coords[cand] - coords[i]
    d2 = (diff * diff).sum(axis=1)
    zero = np.flatnonzero((d2 == 0.0) & (cand != i))
    if zero.size:
        j = int(cand[zero[0]])
        raise CoincidentPointsError(min(i, j), max(i, j))
    keep = cand != i
    cand, d2 = cand[keep], d2[keep]
    order = np.lexsort((cand, d2))
    return cand[order[:q]]


def _topq_brute(coords: np.ndarray, q: int) -> list[np.ndarray]:
    n = coords.shape[0]
    everyone = np.arange(n)
    return [_rank_candidates(coords, i, everyone, q) for i in range(n)]


def _topq_kdtree(coords: np.ndarray, q: int) -> list[np.ndarray]:
    n = coords.shape[0]
    tree = cKDTree(coords)
    k = min(q + 1, n)
    dist, _ = tree.query(coords, k=k)
    # Radius per point: distance of the q-th neighbor (self included in k).
    # Inflate slightly so candidate sets survive metric-arithmetic ulps; the
    # exact ranking below uses the same formula as the brute-force path.
    radii = dist[:, -1] * (1.0 + 1e-9) + 1e-300
    balls = tree.query_ball_point(coords, radii)
    return [
        _rank_candidates(coords, i, np.asarray(balls[i], dtype=np.int64), q)
        for i in range(n)
    ]


def build_knn_graph(points: PointSet, q: int, mode: str = "union",
                    method: str = "kdtree") -> NeighborGraph:
    """Build the symmetric q-NN graph.

    union mode keeps edge {i,j} when j is among i's q nearest OR vice versa;
    mutual mode requires both.  Nearest-neighbor ties break toward the lower
    point index.  ``method="brute"`` is the O(N^2 D) reference builder and
    returns the identical graph.
    """
    if mode not in _MODES:
        raise ValueError(f"mode must be one of {_MODES}, got {mode!r}")
    n = points.n
    if not 1 <= q <= n - 1:
        raise ValueError(f"q={q} out of range 1..{n - 1}")
    if method == "brute":
        topq = _topq_brute(points.coords, q)
    elif method == "kdtree":
        topq = _topq_kdtree(points.coords, q)
    else:
        raise ValueError(f"unknown method {method!r}")

    rows = np.repeat(np.arange(n), [len(t) for t in topq])
    cols = np.concatenate(topq)
    a = sparse.csr_matrix(
        (np.ones(rows.size, dtype=bool), (rows, cols)), shape=(n, n)
    )
    sym = (a + a.T) if mode == "union" else a.multiply(a.T)
    sym = sparse.csr_matrix(sym)
    sym.sort_indices()
    return NeighborGraph(
        points, q, mode,
        sym.indptr.astype(np.int64), sym.indices.astype(np.int64),
    )
