"""Small dense solver that reports degeneracy instead of perturbing it."""

from __future__ import annotations

import numpy as np

from .errors import SingularSystem

PIVOT_RATIO = 1e-12


def solve_pivoted(a: np.ndarray, b: np.ndarray, pivot_ratio: float = PIVOT_RATIO,
                  what: str = "linear system", scale: float | None = None) -> np.ndarray:
    """Gaussian elimination with partial pivoting.

    Raises :class:`SingularSystem` as soon as a pivot falls below
    ``pivot_ratio * scale``, where ``scale`` defaults to ``max|a|``.
    """
    a = np.array(a, dtype=float)
    b = np.array(b, dtype=float)
    n = a.shape[0]
    if n == 0:
        return np.zeros(0)
    scale = max(float(np.max(np.abs(a))), scale or 0.0)
    if scale == 0.0:
        raise SingularSystem(f"{what}: zero matrix")
    for k in range(n):
        p = k + int(np.argmax(np.abs(a[k:, k])))
        if abs(a[p, k]) < pivot_ratio * scale:
            raise SingularSystem(f"{what}: pivot {abs(a[p, k]):.3e} below {pivot_ratio:g} x {scale:.3e}")
        if p != k:
            a[[k, p]] = a[[p, k]]
            b[[k, p]] = b[[p, k]]
        m = a[k + 1:, k] / a[k, k]
        a[k + 1:, k:] -= np.outer(m, a[k, k:])
        b[k + 1:] -= m * b[k]
    x = np.zeros(n)
    for k in range(n - 1, -1, -1):
        x[k] = (b[k] - a[k, k + 1:] @ x[k + 1:]) / a[k, k]
    return x


def solve_consistent(a: np.ndarray, b: np.ndarray, scale: float, pivot_ratio: float = PIVOT_RATIO,
                     what: str = "linear system", residual_tol: float = 1e-10) -> np.ndarray:
    """Solve ``a x = b``, accepting singular systems only when they are consistent.

    Pivots and singular values are judged against ``scale``, the magnitude of
    the data the system was built from.  A singular system falls back to the
    least-norm solution; it is returned only if its residual stays below
    ``residual_tol * scale * max(1, max|x|)``, and otherwise
    :class:`SingularSystem` is raised.
    """
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    if a.shape[0] == 0:
        return np.zeros(0)
    if not np.any(b):
        # x = 0 satisfies the homogeneous system whatever its rank
        return np.zeros(a.shape[1])
    try:
        x = solve_pivoted(a, b, pivot_ratio, what=what, scale=scale)
    except SingularSystem:
        u, sv, vt = np.linalg.svd(a)
        keep = sv > pivot_ratio * scale
        x = vt[keep].T @ ((u[:, keep].T @ b) / sv[keep])
    if np.max(np.abs(a @ x - b)) > residual_tol * scale * max(1.0, float(np.max(np.abs(x)))):
        raise SingularSystem(f"{what}: singular system with inconsistent conditions")
    return x
