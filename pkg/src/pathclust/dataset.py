"""Point-cloud containers, CSV ingestion/serialization, and PCA preprocessing.

CSV conventions: UTF-8, comma-separated, ``\\n`` line endings, one point per
row, optional trailing integer label column, optional header row (detected
when no field of the first row parses as a number).  Label files written by
:func:`save_labels` use one ``index,label`` line per point.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = [
    "PointSet",
    "LabeledPointSet",
    "load_csv",
    "load_labels",
    "save_labels",
    "save_points_csv",
    "pca_project",
]


@dataclass(frozen=True)
class PointSet:
    """Immutable set of N points in R^D.

    Point indices 0..N-1 are stable for the lifetime of the set; the
    coordinate array is made read-only so instances can be shared across
    concurrent tasks.
    """

    coords: np.ndarray

    def __post_init__(self) -> None:
        coords = np.array(self.coords, dtype=np.float64, order="C")
        if coords.ndim != 2:
            raise ValueError(f"coords must be 2-D, got shape {coords.shape}")
        n, d = coords.shape
        if n < 1 or d < 1:
            raise ValueError("need at least one point and one dimension")
        if not np.isfinite(coords).all():
            i, j = np.argwhere(~np.isfinite(coords))[0]
            raise ValueError(f"non-finite coordinate at point {i}, dimension {j}")
        coords.setflags(write=False)
        object.__setattr__(self, "coords", coords)

    @property
    def n(self) -> int:
        return self.coords.shape[0]

    @property
    def dim(self) -> int:
        return self.coords.shape[1]


@dataclass(frozen=True)
class LabeledPointSet:
    """A PointSet plus a ground-truth cluster index per point.

    Labels are dense: every value in 0..k-1 occurs at least once.
    """

    points: PointSet
    labels: np.ndarray
    k: int

    def __post_init__(self) -> None:
        labels = np.array(self.labels, dtype=np.int64)
        if labels.ndim != 1 or labels.shape[0] != self.points.n:
            raise ValueError("labels must be a 1-D array with one entry per point")
        if self.k < 1:
            raise ValueError("k must be >= 1")
        present = np.unique(labels)
        if present[0] < 0 or present[-1] >= self.k:
            raise ValueError(f"labels must lie in 0..{self.k - 1}")
        if present.size != self.k:
            raise ValueError("every label in 0..k-1 must appear at least once")
        labels.setflags(write=False)
        object.__setattr__(self, "labels", labels)


def _parse_field(text: str) -> float | None:
    try:
        return float(text)
    except ValueError:
        return None


def load_csv(path, has_label_column: bool = False) -> PointSet | LabeledPointSet:
    """Load a point set (optionally with a trailing integer label column).

    A header row is skipped when none of its fields parses as a number.
    Labels are re-encoded to a dense 0..K-1 range preserving order of first
    appearance.  Raises ValueError naming the (1-based) row and column on any
    malformed field.
    """
    with open(path, "r", encoding="utf-8", newline="") as fh:
        raw = [line.rstrip("\r\n") for line in fh]
    rows = [line for line in raw if line.strip() != ""]
    if not rows:
        raise ValueError(f"{path}: empty file")

    first = rows[0].split(",")
    if all(_parse_field(f.strip()) is None for f in first):
        rows = rows[1:]
        row_offset = 2
        if not rows:
            raise ValueError(f"{path}: no data rows after header")
    else:
        row_offset = 1

    width = len(rows[0].split(","))
    if has_label_column and width < 2:
        raise ValueError(f"{path}: need at least two columns when a label column is expected")

    data = np.empty((len(rows), width), dtype=np.float64)
    for r, line in enumerate(rows):
        fields = line.split(",")
        if len(fields) != width:
            raise ValueError(
                f"{path}: row {r + row_offset} has {len(fields)} columns, expected {width}"
            )
        for c, field in enumerate(fields):
            value = _parse_field(field.strip())
            if value is None or not np.isfinite(value):
                raise ValueError(
                    f"{path}: row {r + row_offset}, column {c + 1}: "
                    f"cannot parse {field.strip()!r} as a finite number"
                )
            data[r, c] = value

    if not has_label_column:
        return PointSet(data)

    raw_labels = data[:, -1]
    if not np.array_equal(raw_labels, np.floor(raw_labels)) or (raw_labels < 0).any():
        r = int(np.argwhere((raw_labels != np.floor(raw_labels)) | (raw_labels < 0))[0][0])
        raise ValueError(
            f"{path}: row {r + row_offset}, column {width}: "
            f"label must be a nonnegative integer, got {raw_labels[r]}"
        )
    labels = _dense_relabel(raw_labels.astype(np.int64))
    return LabeledPointSet(PointSet(data[:, :-1]), labels, int(labels.max()) + 1)


def _dense_relabel(labels: np.ndarray) -> np.ndarray:
    """Re-encode labels to 0..K-1 in order of first appearance."""
    mapping: dict[int, int] = {}
    out = np.empty_like(labels)
    for i, value in enumerate(labels):
        out[i] = mapping.setdefault(int(value), len(mapping))
    return out


def save_labels(path, labels) -> None:
    """Write one ``index,label`` line per point.

    Accepts a plain label array or any result object with a ``labels`` field.
    """
    labels = np.asarray(getattr(labels, "labels", labels))
    if labels.size == 0:
        raise ValueError("refusing to write an empty label file")
    with open(path, "w", encoding="utf-8", newline="") as fh:
        for i, lab in enumerate(labels):
            fh.write(f"{i},{int(lab)}\n")


def load_labels(path) -> np.ndarray:
    """Read a file written by :func:`save_labels`; labels are returned verbatim."""
    with open(path, "r", encoding="utf-8") as fh:
        lines = [line.strip() for line in fh if line.strip()]
    if not lines:
        raise ValueError(f"{path}: empty label file")
    labels = np.empty(len(lines), dtype=np.int64)
    for r, line in enumerate(lines):
        fields = line.split(",")
        if len(fields) != 2:
            raise ValueError(f"{path}: row {r + 1}: expected 'index,label'")
        idx, lab = (_parse_field(f) for f in fields)
        if idx is None or lab is None or int(idx) != r:
            raise ValueError(f"{path}: row {r + 1}: bad index/label pair {line!r}")
        labels[r] = int(lab)
    return labels


def save_points_csv(path, dataset: PointSet | LabeledPointSet) -> None:
    """Write points one per row; labeled sets get a trailing label column."""
    if isinstance(dataset, LabeledPointSet):
        coords, labels = dataset.points.coords, dataset.labels
    else:
        coords, labels = dataset.coords, None
    with open(path, "w", encoding="utf-8", newline="") as fh:
        for i in range(coords.shape[0]):
            row = ",".join(repr(float(x)) for x in coords[i])
            if labels is not None:
                row += f",{int(labels[i])}"
            fh.write(row + "\n")


def pca_project(points: PointSet, d: int) -> PointSet:
    """Project onto the top-d principal components of the sample covariance.

    The data is centered (no variance scaling), the covariance uses divisor N,
    and eigenvalues are sorted descending.  Each component vector is oriented
    so its largest-magnitude entry is positive (ties broken by lowest
    coordinate index), which makes the output deterministic.  Rank deficiency
    is fine: trailing components then carry zero variance.  Projections within
    a repeated-eigenvalue eigenspace are basis-dependent but distance
    preserving.
    """
    n, dim = points.n, points.dim
    if not 1 <= d <= dim:
        raise ValueError(f"target dimension {d} out of range 1..{dim}")
    if n < 2:
        raise ValueError("need at least two points for PCA")

    centered = points.coords - points.coords.mean(axis=0)
    if d <= min(n, dim):
        # Right singular vectors of the centered matrix are the covariance
        # eigenvectors; singular values give eigenvalues s^2 / N, already
        # sorted descending.
        _, _, vt = np.linalg.svd(centered, full_matrices=False)
        comps = vt[:d]
    else:
        cov = centered.T @ centered / n
        eigvals, eigvecs = np.linalg.eigh(cov)
        comps = eigvecs[:, ::-1][:, :d].T

    comps = comps.copy()
    for row in comps:
        pivot = np.argmax(np.abs(row))
        if row[pivot] < 0:
            row *= -1.0
    return PointSet(centered @ comps.T)
