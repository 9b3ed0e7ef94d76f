"""Rational interpolation in barycentric form.

    r(x) = sum_i lam_i f_i/(x - x_i) / sum_i lam_i/(x - x_i)

With alternating weights ``lam_i = (-1)**i`` and sorted nodes the
denominator keeps one sign between consecutive nodes, so ``r`` has no real
poles on ``[x_0, x_n]``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .errors import InputError

__all__ = ["WeightScheme", "DuplicateNodes", "BarycentricInterpolant", "build", "evaluate"]

NODE_SNAP = 1e-14


class DuplicateNodes(InputError):
    """Interpolation nodes are not distinct."""


class WeightScheme(str, enum.Enum):
    ALTERNATING = "alternating"
    CUSTOM = "custom"


@dataclass(frozen=True, eq=False)
class BarycentricInterpolant:
    nodes: np.ndarray
    values: np.ndarray
    weights: np.ndarray

    def __call__(self, x):
        return evaluate(self, x)

    def denominator(self, x) -> np.ndarray:
        """``sum_i lam_i/(x - x_i)``; used by pole-freeness checks."""
        x = np.asarray(x, dtype=float)
        with np.errstate(divide="ignore"):
            return (self.weights / np.subtract.outer(x, self.nodes)).sum(axis=-1)


def build(nodes, values, scheme: WeightScheme | str = WeightScheme.ALTERNATING,
          weights=None) -> BarycentricInterpolant:
    """Interpolant through ``(nodes[i], values[i])``.

    Raises:
        DuplicateNodes: two nodes coincide.
        InputError: nodes unsorted, lengths differ, or custom weights invalid.
    """
    x = np.asarray(nodes, dtype=float).ravel()
    f = np.asarray(values, dtype=float).ravel()
    if x.size == 0 or x.size != f.size:
        raise InputError("nodes and values must be non-empty and of equal length")
    if not (np.all(np.isfinite(x)) and np.all(np.isfinite(f))):
        raise InputError("nodes and values must be finite")
    gaps = np.diff(x)
    if np.any(gaps == 0):
        raise DuplicateNodes("nodes must be distinct")
    if np.any(gaps < 0):
        raise InputError("nodes must be sorted increasingly")
    scheme = WeightScheme(scheme)
    if scheme == WeightScheme.ALTERNATING:
        lam = (-1.0) ** np.arange(x.size)
    else:
        if weights is None:
            raise InputError("custom scheme needs weights")
        lam = np.asarray(weights, dtype=float).ravel()
        if lam.size != x.size or np.any(lam == 0) or not np.all(np.isfinite(lam)):
            raise InputError("custom weights must be finite, non-zero and one per node")
    for arr in (x, f, lam):
        arr.setflags(write=False)
    return BarycentricInterpolant(x, f, lam)


def evaluate(b: BarycentricInterpolant, x):
    """Barycentric value; points within ``1e-14`` (relative) of a node return that node's value."""
    xs = np.asarray(x, dtype=float)
    flat = np.atleast_1d(xs).ravel()
    diff = np.subtract.outer(flat, b.nodes)
    tol = NODE_SNAP * np.maximum(1.0, np.abs(b.nodes))
    hit = np.abs(diff) <= tol
    out = np.empty(flat.size)
    on_node = hit.any(axis=1)
    out[on_node] = b.values[np.argmax(hit[on_node], axis=1)]
    if np.any(~on_node):
        t = b.weights / diff[~on_node]
        out[~on_node] = (t @ b.values) / t.sum(axis=1)
    return float(out[0]) if xs.ndim == 0 else out.reshape(xs.shape)
