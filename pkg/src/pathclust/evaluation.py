"""Permutation-matched clustering accuracy and confusion diagnostics.

Predicted labels are only meaningful up to relabeling, so accuracy is the best
fraction of agreeing points over all injective maps from predicted to true
labels, found by maximum-weight assignment on the confusion matrix.  Unequal
label counts are handled by zero padding; unmatched clusters contribute
nothing.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.optimize import linear_sum_assignment

__all__ = ["ConfusionMatrix", "confusion", "accuracy"]

MAX_LABELS = 64


@dataclass(frozen=True)
class ConfusionMatrix:
    """counts[a][b] = number of points predicted a whose true label is b."""

    counts: np.ndarray

    @property
    def n(self) -> int:
        return int(self.counts.sum())


def _check_labels(pred, truth) -> tuple[np.ndarray, np.ndarray]:
    pred = np.asarray(pred, dtype=np.int64)
    truth = np.asarray(truth, dtype=np.int64)
    if pred.ndim != 1 or truth.ndim != 1:
        raise ValueError("labels must be 1-D")
    if pred.size != truth.size:
        raise ValueError(f"length mismatch: {pred.size} predicted vs {truth.size} true")
    if pred.size == 0:
        raise ValueError("empty label arrays")
    if pred.min() < 0 or truth.min() < 0:
        raise ValueError("labels must be nonnegative")
    return pred, truth


def confusion(pred, truth) -> ConfusionMatrix:
    """Count co-occurrences of predicted and true labels."""
    pred, truth = _check_labels(pred, truth)
    kp = int(pred.max()) + 1
    kt = int(truth.max()) + 1
    counts = np.zeros((kp, kt), dtype=np.int64)
    np.add.at(counts, (pred, truth), 1)
    return ConfusionMatrix(counts)


def accuracy(pred, truth) -> float:
    """Fraction of points correct under the best injective relabeling.

    Solved as a maximum-weight bipartite assignment over the (zero-padded,
    square) confusion matrix; equals brute-force maximization over label
    permutations.
    """
    pred, truth = _check_labels(pred, truth)
    counts = confusion(pred, truth).counts
    kp, kt = counts.shape
    if max(kp, kt) > MAX_LABELS:
        raise ValueError(f"more than {MAX_LABELS} labels")
    size = max(kp, kt)
    padded = np.zeros((size, size), dtype=np.int64)
    padded[:kp, :kt] = counts
    rows, cols = linear_sum_assignment(padded, maximize=True)
    return float(padded[rows, cols].sum()) / float(pred.size)
