"""Parametric generators for the synthetic multi-surface benchmarks.

Each surface type knows how to (a) draw points uniformly with respect to its
own surface measure and (b) report the distance from arbitrary points to
itself, which is what the noiseless-residual tests check.  Sampling of curves
is uniform in arc length through an inverse lookup table whose chordal
approximation keeps relative arc-length error below 1e-6; surfaces of
revolution and patches use exact area-element corrections instead.

A mixture draws a surface index per point from the given weights, samples the
surface, and adds noise uniform in the solid D-ball of radius epsilon
(direction times radius^(1/D) scaling), so every sample stays within epsilon
of its generating surface.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .dataset import LabeledPointSet, PointSet

__all__ = [
    "PlanePatch",
    "LineSegment",
    "Sphere",
    "Circle",
    "Cone",
    "SwissRoll",
    "Spiral2D",
    "RoseCurve",
    "FigureEight",
    "DollarSign",
    "MixtureSpec",
    "sample_mixture",
    "make_benchmark",
    "benchmark_names",
    "benchmark_info",
]

_TABLE_SEGMENTS = 8192


def _unit(v: np.ndarray) -> np.ndarray:
    v = np.asarray(v, dtype=np.float64)
    norm = float(np.linalg.norm(v))
    if norm == 0.0:
        raise ValueError("zero direction vector")
    return v / norm


def _check_orthonormal(basis: np.ndarray) -> np.ndarray:
    basis = np.asarray(basis, dtype=np.float64)
    gram = basis.T @ basis
    if not np.allclose(gram, np.eye(basis.shape[1]), atol=1e-9):
        raise ValueError("orientation vectors must be orthonormal within 1e-9")
    return basis


class _ArcTable:
    """Inverse-arc-length lookup for a vectorized planar curve t -> (x, y)."""

    def __init__(self, fn, t0: float, t1: float, segments: int = _TABLE_SEGMENTS):
        self.fn = fn
        self.t0, self.t1 = float(t0), float(t1)
        self.ts = np.linspace(t0, t1, segments + 1)
        pts = fn(self.ts)
        seg = np.sqrt(((pts[1:] - pts[:-1]) ** 2).sum(axis=1))
        self.cum = np.concatenate([[0.0], np.cumsum(seg)])
        self.seg = seg
        self.total = float(self.cum[-1])

    def sample_params(self, n: int, rng: np.random.Generator) -> np.ndarray:
        s = rng.random(n) * self.total
        idx = np.clip(np.searchsorted(self.cum, s, side="right") - 1, 0, self.seg.size - 1)
        frac = (s - self.cum[idx]) / np.where(self.seg[idx] > 0, self.seg[idx], 1.0)
        step = self.ts[1] - self.ts[0]
        return self.ts[idx] + frac * step


def _curve_distance(xy: np.ndarray, fn, t0: float, t1: float, closed: bool,
                    grid: int = 4096, iters: int = 90) -> np.ndarray:
    """Distance from 2-D points to the curve, grid scan plus ternary refine."""
    xy = np.atleast_2d(np.asarray(xy, dtype=np.float64))
    ts = np.linspace(t0, t1, grid)
    curve = fn(ts)
    n = xy.shape[0]
    best_d2 = np.empty(n)
    best_t = np.empty(n)
    for start in range(0, n, 512):
        block = xy[start:start + 512]
        d2 = ((block[:, None, :] - curve[None, :, :]) ** 2).sum(axis=2)
        arg = d2.argmin(axis=1)
        best_d2[start:start + 512] = d2[np.arange(block.shape[0]), arg]
        best_t[start:start + 512] = ts[arg]
    h = ts[1] - ts[0]
    lo, hi = best_t - h, best_t + h
    if not closed:
        lo = np.maximum(lo, t0)
        hi = np.minimum(hi, t1)

    def f(t):
        return ((fn(t) - xy) ** 2).sum(axis=1)

    for _ in range(iters):
        m1 = lo + (hi - lo) / 3.0
        m2 = hi - (hi - lo) / 3.0
        left = f(m1) < f(m2)
        hi = np.where(left, m2, hi)
        lo = np.where(left, lo, m1)
    refined = f((lo + hi) / 2.0)
    return np.sqrt(np.minimum(refined, best_d2))


def _segment_distance(pts: np.ndarray, p0: np.ndarray, p1: np.ndarray) -> np.ndarray:
    axis = p1 - p0
    denom = float(axis @ axis)
    t = np.clip(((pts - p0) @ axis) / denom, 0.0, 1.0)
    proj = p0 + t[:, None] * axis
    return np.sqrt(((pts - proj) ** 2).sum(axis=1))


# ---------------------------------------------------------------------------
# surface types

@dataclass(frozen=True)
class PlanePatch:
    """Rectangular planar patch center + a*u + b*v, |a| <= half_u, |b| <= half_v."""

    center: tuple
    u: tuple
    v: tuple
    half_u: float
    half_v: float
    dim = 2

    def __post_init__(self):
        if self.half_u <= 0 or self.half_v <= 0:
            raise ValueError("patch extents must be positive")
        _check_orthonormal(np.stack([self.u, self.v], axis=1))

    @cached_property
    def _frame(self):
        return (np.asarray(self.center, dtype=np.float64),
                np.asarray(self.u, dtype=np.float64),
                np.asarray(self.v, dtype=np.float64))

    @property
    def ambient(self) -> int:
        return len(self.center)

    def sample(self, n: int, rng: np.random.Generator) -> np.ndarray:
        c, u, v = self._frame
        a = rng.uniform(-self.half_u, self.half_u, n)
        b = rng.uniform(-self.half_v, self.half_v, n)
        return c + a[:, None] * u + b[:, None] * v

    def residual(self, pts: np.ndarray) -> np.ndarray:
        c, u, v = self._frame
        w = np.asarray(pts, dtype=np.float64) - c
        a = np.clip(w @ u, -self.half_u, self.half_u)
        b = np.clip(w @ v, -self.half_v, self.half_v)
        nearest = c + a[:, None] * u + b[:, None] * v
        return np.sqrt(((pts - nearest) ** 2).sum(axis=1))


@dataclass(frozen=True)
class LineSegment:
    p0: tuple
    p1: tuple
    dim = 1

    def __post_init__(self):
        if np.allclose(self.p0, self.p1):
            raise ValueError("degenerate segment")

    @property
    def ambient(self) -> int:
        return len(self.p0)

    def sample(self, n: int, rng: np.random.Generator) -> np.ndarray:
        p0 = np.asarray(self.p0, dtype=np.float64)
        p1 = np.asarray(self.p1, dtype=np.float64)
        t = rng.random(n)
        return p0 + t[:, None] * (p1 - p0)

    def residual(self, pts: np.ndarray) -> np.ndarray:
        return _segment_distance(np.asarray(pts, dtype=np.float64),
                                 np.asarray(self.p0), np.asarray(self.p1))


@dataclass(frozen=True)
class Sphere:
    """Full sphere surface |x - center| = radius in its ambient dimension."""

    center: tuple
    radius: float

    def __post_init__(self):
        if self.radius <= 0:
            raise ValueError("radius must be positive")

    @property
    def ambient(self) -> int:
        return len(self.center)

    @property
    def dim(self) -> int:
        return self.ambient - 1

    def sample(self, n: int, rng: np.random.Generator) -> np.ndarray:
        d = self.ambient
        g = rng.standard_normal((n, d))
        g /= np.sqrt((g * g).sum(axis=1))[:, None]
        return np.asarray(self.center) + self.radius * g

    def residual(self, pts: np.ndarray) -> np.ndarray:
        r = np.sqrt(((pts - np.asarray(self.center)) ** 2).sum(axis=1))
        return np.abs(r - self.radius)


@dataclass(frozen=True)
class Circle:
    """Circle of given radius in the plane spanned by orthonormal u, v."""

    center: tuple
    radius: float
    u: tuple = (1.0, 0.0)
    v: tuple = (0.0, 1.0)
    dim = 1

    def __post_init__(self):
        if self.radius <= 0:
            raise ValueError("radius must be positive")
        _check_orthonormal(np.stack([self.u, self.v], axis=1))

    @property
    def ambient(self) -> int:
        return len(self.center)

    def sample(self, n: int, rng: np.random.Generator) -> np.ndarray:
        theta = rng.uniform(0.0, 2.0 * math.pi, n)
        c = np.asarray(self.center, dtype=np.float64)
        u = np.asarray(self.u, dtype=np.float64)
        v = np.asarray(self.v, dtype=np.float64)
        return c + self.radius * (np.cos(theta)[:, None] * u + np.sin(theta)[:, None] * v)

    def residual(self, pts: np.ndarray) -> np.ndarray:
        c = np.asarray(self.center, dtype=np.float64)
        u = np.asarray(self.u, dtype=np.float64)
        v = np.asarray(self.v, dtype=np.float64)
        w = np.asarray(pts, dtype=np.float64) - c
        pu, pv = w @ u, w @ v
        in_plane = np.hypot(pu, pv)
        perp2 = (w * w).sum(axis=1) - pu * pu - pv * pv
        return np.sqrt((in_plane - self.radius) ** 2 + np.maximum(perp2, 0.0))


@dataclass(frozen=True)
class Cone:
    """Right circular cone: apex + rho*(cos p * e1 + sin p * e2) + slope*rho*axis."""

    apex: tuple
    axis: tuple
    slope: float
    rho_max: float
    dim = 2

    def __post_init__(self):
        if self.rho_max <= 0 or self.slope <= 0:
            raise ValueError("cone parameters must be positive")

    @property
    def ambient(self) -> int:
        return len(self.apex)

    @cached_property
    def _frame(self):
        axis = _unit(self.axis)
        # deterministic orthonormal complement of the axis
        basis = [axis]
        for k in range(axis.size):
            e = np.zeros(axis.size)
            e[k] = 1.0
            for b in basis:
                e = e - (e @ b) * b
            norm = np.linalg.norm(e)
            if norm > 1e-9:
                basis.append(e / norm)
            if len(basis) == 3:
                break
        return np.asarray(self.apex, dtype=np.float64), axis, basis[1], basis[2]

    def sample(self, n: int, rng: np.random.Generator) -> np.ndarray:
        apex, axis, e1, e2 = self._frame
        # area element of a cone grows linearly in rho
        rho = self.rho_max * np.sqrt(rng.random(n))
        phi = rng.uniform(0.0, 2.0 * math.pi, n)
        radial = np.cos(phi)[:, None] * e1 + np.sin(phi)[:, None] * e2
        return apex + rho[:, None] * radial + (self.slope * rho)[:, None] * axis

    def residual(self, pts: np.ndarray) -> np.ndarray:
        apex, axis, _, _ = self._frame
        w = np.asarray(pts, dtype=np.float64) - apex
        z = w @ axis
        r = np.sqrt(np.maximum((w * w).sum(axis=1) - z * z, 0.0))
        # distance in the (r, z) half-plane to the generator segment
        prof = np.stack([r, z], axis=1)
        p0 = np.array([0.0, 0.0])
        p1 = np.array([self.rho_max, self.slope * self.rho_max])
        return _segment_distance(prof, p0, p1)


@dataclass(frozen=True)
class SwissRoll:
    """Spiral profile r = r0 + growth*t extruded along an axis direction."""

    center: tuple
    e1: tuple
    e2: tuple
    axis: tuple
    r0: float
    growth: float
    t0: float
    t1: float
    half_height: float
    dim = 2

    def __post_init__(self):
        if self.r0 <= 0 or self.growth <= 0 or self.half_height <= 0:
            raise ValueError("roll parameters must be positive")
        _check_orthonormal(np.stack([self.e1, self.e2, self.axis], axis=1))

    @property
    def ambient(self) -> int:
        return len(self.center)

    def _profile(self, t: np.ndarray) -> np.ndarray:
        r = self.r0 + self.growth * t
        return np.stack([r * np.cos(t), r * np.sin(t)], axis=-1)

    @cached_property
    def _table(self) -> _ArcTable:
        return _ArcTable(self._profile, self.t0, self.t1)

    def sample(self, n: int, rng: np.random.Generator) -> np.ndarray:
        t = self._table.sample_params(n, rng)
        h = rng.uniform(-self.half_height, self.half_height, n)
        prof = self._profile(t)
        c = np.asarray(self.center, dtype=np.float64)
        e1 = np.asarray(self.e1, dtype=np.float64)
        e2 = np.asarray(self.e2, dtype=np.float64)
        ax = np.asarray(self.axis, dtype=np.float64)
        return c + prof[:, :1] * e1 + prof[:, 1:] * e2 + h[:, None] * ax

    def residual(self, pts: np.ndarray) -> np.ndarray:
        c = np.asarray(self.center, dtype=np.float64)
        e1 = np.asarray(self.e1, dtype=np.float64)
        e2 = np.asarray(self.e2, dtype=np.float64)
        ax = np.asarray(self.axis, dtype=np.float64)
        w = np.asarray(pts, dtype=np.float64) - c
        pu, pv, ph = w @ e1, w @ e2, w @ ax
        d_prof = _curve_distance(np.stack([pu, pv], axis=1),
                                 self._profile, self.t0, self.t1, closed=False)
        dh = np.maximum(np.abs(ph) - self.half_height, 0.0)
        perp2 = (w * w).sum(axis=1) - pu * pu - pv * pv - ph * ph
        return np.sqrt(d_prof ** 2 + dh ** 2 + np.maximum(perp2, 0.0))


class _PlanarCurve:
    """Shared machinery for curves given by a planar parametrization.

    Subclasses provide _point(t) -> (len(t), 2), the parameter interval and
    whether the curve closes.  ``center``/``u``/``v`` embed the curve plane in
    the ambient space.
    """

    closed = False
    dim = 1

    def _point(self, t: np.ndarray) -> np.ndarray:  # pragma: no cover
        raise NotImplementedError

    @property
    def ambient(self) -> int:
        return len(self.center)

    @cached_property
    def _embedding(self):
        c = np.asarray(self.center, dtype=np.float64)
        u = np.asarray(self.u, dtype=np.float64)
        v = np.asarray(self.v, dtype=np.float64)
        _check_orthonormal(np.stack([u, v], axis=1))
        return c, u, v

    @cached_property
    def _table(self) -> _ArcTable:
        return _ArcTable(self._point, self.t0, self.t1)

    def sample(self, n: int, rng: np.random.Generator) -> np.ndarray:
        t = self._table.sample_params(n, rng)
        xy = self._point(t)
        c, u, v = self._embedding
        return c + xy[:, :1] * u + xy[:, 1:] * v

    def residual(self, pts: np.ndarray) -> np.ndarray:
        c, u, v = self._embedding
        w = np.asarray(pts, dtype=np.float64) - c
        pu, pv = w @ u, w @ v
        d2d = _curve_distance(np.stack([pu, pv], axis=1),
                              self._point, self.t0, self.t1, self.closed)
        perp2 = (w * w).sum(axis=1) - pu * pu - pv * pv
        return np.sqrt(d2d ** 2 + np.maximum(perp2, 0.0))


@dataclass(frozen=True)
class Spiral2D(_PlanarCurve):
    """Archimedean spiral r = r0 + growth*t, rotated by phase."""

    r0: float
    growth: float
    t0: float
    t1: float
    phase: float = 0.0
    center: tuple = (0.0, 0.0)
    u: tuple = (1.0, 0.0)
    v: tuple = (0.0, 1.0)

    def __post_init__(self):
        if self.growth <= 0 or self.t1 <= self.t0:
            raise ValueError("need positive growth and a nonempty parameter range")

    def _point(self, t: np.ndarray) -> np.ndarray:
        t = np.asarray(t, dtype=np.float64)
        r = self.r0 + self.growth * t
        a = t + self.phase
        return np.stack([r * np.cos(a), r * np.sin(a)], axis=-1)


@dataclass(frozen=True)
class RoseCurve(_PlanarCurve):
    """Polar rose r = amplitude * cos(freq * theta); freq=2 gives 4 petals."""

    amplitude: float = 1.0
    freq: int = 2
    center: tuple = (0.0, 0.0)
    u: tuple = (1.0, 0.0)
    v: tuple = (0.0, 1.0)
    t0 = 0.0
    t1 = 2.0 * math.pi
    closed = True

    def __post_init__(self):
        if self.amplitude <= 0:
            raise ValueError("amplitude must be positive")

    def _point(self, t: np.ndarray) -> np.ndarray:
        t = np.asarray(t, dtype=np.float64)
        r = self.amplitude * np.cos(self.freq * t)
        return np.stack([r * np.cos(t), r * np.sin(t)], axis=-1)


@dataclass(frozen=True)
class FigureEight(_PlanarCurve):
    """Self-intersecting planar curve (lemniscate of Gerono), one surface."""

    size: float = 1.0
    center: tuple = (0.0, 0.0)
    u: tuple = (1.0, 0.0)
    v: tuple = (0.0, 1.0)
    t0 = 0.0
    t1 = 2.0 * math.pi
    closed = True

    def __post_init__(self):
        if self.size <= 0:
            raise ValueError("size must be positive")

    def _point(self, t: np.ndarray) -> np.ndarray:
        t = np.asarray(t, dtype=np.float64)
        return self.size * np.stack([np.sin(t), np.sin(t) * np.cos(t)], axis=-1)


@dataclass(frozen=True)
class DollarSign(_PlanarCurve):
    """S-shaped pair of circular arcs with a straight stroke through the middle.

    Both arcs have radius ``size`` and pass through the local origin with a
    vertical tangent; the vertical stroke runs through the same point, so the
    three pieces join smoothly and the whole glyph is one surface even though
    it self-intersects nowhere else.
    """

    size: float = 1.0
    bar_half: float = 1.3
    center: tuple = (0.0, 0.0)
    u: tuple = (1.0, 0.0)
    v: tuple = (0.0, 1.0)

    def __post_init__(self):
        if self.size <= 0 or self.bar_half <= 0:
            raise ValueError("size parameters must be positive")

    @cached_property
    def _pieces(self):
        s = self.size
        sweep = 1.5 * math.pi
        return (
            ("arc", np.array([s, 0.0]), s, -0.5 * math.pi, math.pi, sweep * s),
            ("arc", np.array([-s, 0.0]), s, 0.5 * math.pi, 2.0 * math.pi, sweep * s),
            ("seg", np.array([0.0, -self.bar_half]), np.array([0.0, self.bar_half]),
             None, None, 2.0 * self.bar_half),
        )

    def sample(self, n: int, rng: np.random.Generator) -> np.ndarray:
        pieces = self._pieces
        lengths = np.array([p[-1] for p in pieces])
        probs = lengths / lengths.sum()
        choice = rng.choice(len(pieces), size=n, p=probs)
        xy = np.empty((n, 2))
        for k, piece in enumerate(pieces):
            idx = np.flatnonzero(choice == k)
            if idx.size == 0:
                continue
            if piece[0] == "arc":
                _, o, r, a0, a1, _ = piece
                ang = rng.uniform(a0, a1, idx.size)
                xy[idx] = o + r * np.stack([np.cos(ang), np.sin(ang)], axis=-1)
            else:
                _, p0, p1, _, _, _ = piece
                t = rng.random(idx.size)
                xy[idx] = p0 + t[:, None] * (p1 - p0)
        c, u, v = self._embedding
        return c + xy[:, :1] * u + xy[:, 1:] * v

    @staticmethod
    def _arc_distance(xy, o, r, a0, a1):
        w = xy - o
        ang = np.arctan2(w[:, 1], w[:, 0])
        ang = np.where(ang < a0, ang + 2.0 * math.pi, ang)
        on_arc = ang <= a1
        radial = np.abs(np.hypot(w[:, 0], w[:, 1]) - r)
        end0 = o + r * np.array([math.cos(a0), math.sin(a0)])
        end1 = o + r * np.array([math.cos(a1), math.sin(a1)])
        d_ends = np.minimum(np.hypot(*(xy - end0).T), np.hypot(*(xy - end1).T))
        return np.where(on_arc, radial, d_ends)

    def residual(self, pts: np.ndarray) -> np.ndarray:
        c, u, v = self._embedding
        w = np.asarray(pts, dtype=np.float64) - c
        pu, pv = w @ u, w @ v
        xy = np.stack([pu, pv], axis=1)
        best = None
        for piece in self._pieces:
            if piece[0] == "arc":
                _, o, r, a0, a1, _ = piece
                d = self._arc_distance(xy, o, r, a0, a1)
            else:
                _, p0, p1, _, _, _ = piece
                d = _segment_distance(xy, p0, p1)
            best = d if best is None else np.minimum(best, d)
        perp2 = (w * w).sum(axis=1) - pu * pu - pv * pv
        return np.sqrt(best ** 2 + np.maximum(perp2, 0.0))


# ---------------------------------------------------------------------------
# mixtures

@dataclass(frozen=True)
class MixtureSpec:
    """K surfaces with sampling weights, a noise bound, sample count and seed."""

    surfaces: tuple
    weights: tuple
    epsilon: float
    n: int
    seed: int

    def __post_init__(self):
        if not self.surfaces:
            raise ValueError("need at least one surface")
        dims = {s.ambient for s in self.surfaces}
        if len(dims) != 1:
            raise ValueError(f"surfaces live in different ambient dimensions: {dims}")
        w = np.asarray(self.weights, dtype=np.float64)
        if w.size != len(self.surfaces) or (w < 0).any():
            raise ValueError("need one nonnegative weight per surface")
        if abs(float(w.sum()) - 1.0) > 1e-12:
            raise ValueError("weights must sum to 1 within 1e-12")
        if self.epsilon < 0:
            raise ValueError("epsilon must be >= 0")
        if self.n < 1:
            raise ValueError("n must be >= 1")

    @property
    def k(self) -> int:
        return len(self.surfaces)

    @property
    def ambient(self) -> int:
        return self.surfaces[0].ambient


def _ball_noise(n: int, dim: int, eps: float, rng: np.random.Generator) -> np.ndarray:
    if eps == 0.0:
        return np.zeros((n, dim))
    direction = rng.standard_normal((n, dim))
    direction /= np.sqrt((direction * direction).sum(axis=1))[:, None]
    radius = eps * rng.random(n) ** (1.0 / dim)
    return direction * radius[:, None]


def sample_mixture(spec: MixtureSpec) -> LabeledPointSet:
    """Draw n points from the surface mixture with uniform ball noise.

    Deterministic given the seed.  When every weight is positive the draw is
    retried (with a derived seed) in the astronomically rare event that some
    surface receives no points; surfaces that stay empty after that (possible
    only with zero or vanishing weights) are compacted out of the label range
    in surface order.
    """
    weights = np.asarray(spec.weights, dtype=np.float64)
    positive = weights > 0
    for attempt in range(16):
        rng = np.random.Generator(np.random.PCG64(
            np.random.SeedSequence([int(spec.seed), attempt])))
        ks = rng.choice(spec.k, size=spec.n, p=weights)
        coords = np.empty((spec.n, spec.ambient))
        for k, surface in enumerate(spec.surfaces):
            idx = np.flatnonzero(ks == k)
            if idx.size:
                coords[idx] = surface.sample(idx.size, rng)
        coords += _ball_noise(spec.n, spec.ambient, spec.epsilon, rng)
        present = np.zeros(spec.k, dtype=bool)
        present[np.unique(ks)] = True
        if (present | ~positive).all():
            break

    if not present.all():
        remap = np.cumsum(present) - 1
        ks = remap[ks]
    return LabeledPointSet(PointSet(coords), ks.astype(np.int64), int(present.sum()))


# ---------------------------------------------------------------------------
# named benchmarks

@dataclass(frozen=True)
class BenchmarkInfo:
    """Registry entry: cluster count, characteristic scale, surface builder."""

    name: str
    k: int
    scale: float
    description: str
    build: object

    def spec(self, n: int, noise: float, seed: int) -> MixtureSpec:
        surfaces = self.build()
        weights = tuple(1.0 / len(surfaces) for _ in surfaces)
        return MixtureSpec(surfaces, weights, noise, n, seed)


def _tp_surfaces():
    # Three unit-square patches; the third is tilted 45 degrees so the three
    # pairwise intersection segments are parallel rather than concurrent.
    s = 0.5
    rt = 1.0 / math.sqrt(2.0)
    return (
        PlanePatch((0.0, 0.0, 0.0), (1, 0, 0), (0, 1, 0), s, s),
        PlanePatch((0.0, 0.0, 0.0), (0, 0, 1), (0, 1, 0), s, s),
        PlanePatch((0.15, 0.0, 0.15), (rt, 0, -rt), (0, 1, 0), s, s),
    )


def _tsi_surfaces():
    # 2.25 turns each; the pi phase offset interleaves the two arms with a
    # clearance of pi*growth = 0.2 between them.
    b = 1.0 / (5.0 * math.pi)
    return (
        Spiral2D(r0=0.0, growth=b, t0=0.5 * math.pi, t1=5.0 * math.pi, phase=0.0),
        Spiral2D(r0=0.0, growth=b, t0=0.5 * math.pi, t1=5.0 * math.pi, phase=math.pi),
    )


def _fs_surfaces():
    out = []
    for j in range(5):
        ang = j * math.pi / 5.0 + 0.13
        u = (math.cos(ang), math.sin(ang))
        out.append(LineSegment((-u[0], -u[1]), (u[0], u[1])))
    return tuple(out)


def _dspr_surfaces():
    return (
        DollarSign(size=1.0, bar_half=1.3,
                   center=(0.0, 0.0, 0.0), u=(1, 0, 0), v=(0, 1, 0)),
        PlanePatch((0.4, 0.0, 0.0), (1, 0, 0), (0, 0, 1), 1.4, 1.0),
        SwissRoll(center=(0.9, 0.0, 0.2), e1=(1, 0, 0), e2=(0, 0, 1), axis=(0, 1, 0),
                  r0=0.15, growth=0.1, t0=0.5, t1=0.5 + 3.0 * math.pi,
                  half_height=0.9),
    )


def _rp_surfaces():
    return (
        SwissRoll(center=(0.0, 0.0, 0.0), e1=(1, 0, 0), e2=(0, 1, 0), axis=(0, 0, 1),
                  r0=0.3, growth=0.09, t0=0.0, t1=3.0 * math.pi, half_height=0.6),
        PlanePatch((0.0, 0.0, 0.0), (1, 0, 0), (0, 0, 1), 1.3, 0.6),
    )


def _cp_surfaces():
    return (
        Cone(apex=(0.0, 0.0, 0.0), axis=(0, 0, 1), slope=1.0, rho_max=1.0),
        PlanePatch((0.0, 0.0, 0.5), (1, 0, 0), (0, 1, 0), 1.1, 1.1),
    )


def _tsh_surfaces():
    return (
        Sphere((0.0, 0.0, 0.0), 1.0),
        Sphere((1.0, 0.0, 0.0), 1.0),
    )


def _rcc_surfaces():
    return (
        RoseCurve(amplitude=1.0, freq=2),
        Circle((0.0, 0.0), 0.5),
    )


def _self_cross_surfaces():
    return (FigureEight(size=1.0),)


_BENCHMARKS = {
    "TP": BenchmarkInfo("TP", 3, 1.0, "three planes", _tp_surfaces),
    "TSI": BenchmarkInfo("TSI", 2, 1.0, "two spirals", _tsi_surfaces),
    "FS": BenchmarkInfo("FS", 5, 1.0, "five segments", _fs_surfaces),
    "DSPR": BenchmarkInfo("DSPR", 3, 2.0, "dollar sign, plane and roll", _dspr_surfaces),
    "RP": BenchmarkInfo("RP", 2, 1.2, "roll and plane", _rp_surfaces),
    "CP": BenchmarkInfo("CP", 2, 1.2, "cone and plane", _cp_surfaces),
    "TSH": BenchmarkInfo("TSH", 2, 1.5, "two spheres", _tsh_surfaces),
    "RCC": BenchmarkInfo("RCC", 2, 1.0, "rose curve and circle", _rcc_surfaces),
    "SELF-CROSS": BenchmarkInfo("SELF-CROSS", 1, 1.0, "self-intersecting curve",
                                _self_cross_surfaces),
}


def benchmark_names() -> tuple[str, ...]:
    return tuple(_BENCHMARKS)


def benchmark_info(name: str) -> BenchmarkInfo:
    info = _BENCHMARKS.get(name.upper())
    if info is None:
        raise ValueError(
            f"unknown benchmark {name!r}; known: {', '.join(_BENCHMARKS)}")
    return info


def make_benchmark(name: str, n: int, noise: float, seed: int) -> LabeledPointSet:
    """Sample a named benchmark with equal weights and the given noise bound."""
    info = benchmark_info(name)
    if n < 50 * info.k:
        raise ValueError(f"{info.name} needs n >= {50 * info.k}, got {n}")
    data = sample_mixture(info.spec(n, noise, seed))
    if data.k != info.k:
        raise RuntimeError(f"{info.name}: some surface received no samples")
    return data
