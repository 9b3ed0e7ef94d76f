"""Convergence acceleration of scalar sequences.

Transforms return :class:`numpy.ma.MaskedArray` values: entries whose
denominators underflow are masked rather than raising, so a degenerate
window never poisons the rest of the output.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .errors import InputError, SingularDeterminant, TooShort

__all__ = [
    "EpsilonTable",
    "ConvergenceKind",
    "ConvergenceClass",
    "aitken",
    "wynn_epsilon",
    "shanks",
    "classify",
]

ABS_TINY = 1e-300
REL_TINY = 1e-14


def _as_sequence(s, minimum: int) -> np.ndarray:
    arr = np.asarray(s, dtype=float).ravel()
    if arr.size < minimum:
        raise TooShort(f"need at least {minimum} terms, got {arr.size}")
    if not np.all(np.isfinite(arr)):
        raise InputError("sequence contains non-finite values")
    return arr


def _tiny(delta: np.ndarray, scale: np.ndarray) -> np.ndarray:
    return (np.abs(delta) < ABS_TINY) | (np.abs(delta) <= REL_TINY * scale)


def aitken(s) -> np.ma.MaskedArray:
    """Aitken delta-squared transform; entry ``i`` uses ``s[i], s[i+1], s[i+2]``."""
    s = _as_sequence(s, 3)
    d1 = s[1:-1] - s[:-2]
    d2 = s[2:] - s[1:-1]
    dd = d2 - d1
    bad = _tiny(dd, np.maximum(np.abs(d1), np.abs(d2)))
    with np.errstate(divide="ignore", invalid="ignore"):
        out = s[1:-1] - d2 * d1 / np.where(bad, 1.0, dd)
    return np.ma.MaskedArray(out, mask=bad)


@dataclass(frozen=True, eq=False)
class EpsilonTable:
    """Triangular Wynn table; ``entries[k][n]`` is ``T_k^{(n)}``."""

    entries: list[np.ndarray]
    valid: list[np.ndarray]
    source_len: int

    def column(self, k: int) -> np.ma.MaskedArray:
        return np.ma.MaskedArray(self.entries[k], mask=~self.valid[k])

    @property
    def k_max(self) -> int:
        return len(self.entries) - 1

    def even_columns(self) -> list[np.ma.MaskedArray]:
        return [self.column(k) for k in range(0, self.k_max + 1, 2)]

    def best_estimate(self) -> float:
        """Last valid entry of the highest even column that has one."""
        for k in range(self.k_max - self.k_max % 2, -1, -2):
            idx = np.flatnonzero(self.valid[k])
            if idx.size:
                return float(self.entries[k][idx[-1]])
        return float("nan")


def wynn_epsilon(s, k_max: int | None = None) -> EpsilonTable:
    """Wynn epsilon algorithm up to column ``k_max`` (default: as far as data allow).

    Even columns hold the accelerated estimates, ``T_{2k}^{(n)}`` being the
    order-``k`` Shanks transform of ``s[n:]``.
    """
    s = _as_sequence(s, 2)
    limit = s.size - 1
    k_max = limit if k_max is None else min(int(k_max), limit)
    if k_max < 0:
        raise InputError("k_max must be non-negative")
    entries = [s.copy()]
    valid = [np.ones(s.size, dtype=bool)]
    prev, prev_valid = np.zeros(s.size + 1), np.ones(s.size + 1, dtype=bool)
    for k in range(k_max):
        cur, cur_valid = entries[-1], valid[-1]
        delta = cur[1:] - cur[:-1]
        bad = _tiny(delta, np.maximum(np.abs(cur[1:]), np.abs(cur[:-1])))
        with np.errstate(divide="ignore", invalid="ignore"):
            nxt = prev[1:cur.size] + 1.0 / np.where(bad, 1.0, delta)
        ok = ~bad & cur_valid[1:] & cur_valid[:-1] & prev_valid[1:cur.size] & np.isfinite(nxt)
        entries.append(np.where(ok, nxt, np.nan))
        valid.append(ok)
        prev, prev_valid = cur, cur_valid
    return EpsilonTable(entries, valid, int(s.size))


def _hankel_det(rows: list[np.ndarray]) -> tuple[float, float]:
    mat = np.array(rows)
    scale = float(np.prod([max(np.linalg.norm(r), ABS_TINY) for r in rows]))
    return float(np.linalg.det(mat)), scale


def shanks(s, k: int, p: int) -> float:
    """Order-``k`` Shanks transform as a ratio of determinants, centred at ``s[p]``.

    The stencil spans ``s[p-k] .. s[p+k]``.  Only ``k <= 3`` is offered: the
    determinants serve as a cross-check of :func:`wynn_epsilon`, which is the
    numerically preferred route.
    """
    s = _as_sequence(s, 1)
    if k < 0 or k > 3:
        raise InputError("determinantal Shanks is limited to 0 <= k <= 3; use wynn_epsilon")
    n = p - k
    if n < 0 or p + k >= s.size:
        raise InputError(f"stencil s[{p - k}..{p + k}] is out of range for {s.size} terms")
    if k == 0:
        return float(s[p])
    ds = np.diff(s)
    diff_rows = [ds[n + i: n + i + k + 1] for i in range(k)]
    num, _ = _hankel_det([s[n: n + k + 1]] + diff_rows)
    den, scale = _hankel_det([np.ones(k + 1)] + diff_rows)
    if abs(den) <= REL_TINY * scale or abs(den) < ABS_TINY:
        raise SingularDeterminant(f"Shanks denominator vanishes (k={k}, p={p})")
    return num / den


class ConvergenceKind(str, enum.Enum):
    SUPERLINEAR = "superlinear"
    LINEAR = "linear"
    LOGARITHMIC = "logarithmic"
    DIVERGENT = "divergent"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class ConvergenceClass:
    kind: ConvergenceKind
    ratio_estimate: float
    limit_estimate: float


def classify(s, band: float = 0.05) -> ConvergenceClass:
    """Convergence type from the limit of successive difference ratios.

    The ratios ``(S_{n+2}-S_{n+1})/(S_{n+1}-S_n)`` share their limit ``a``
    with ``(S_{n+1}-S)/(S_n-S)`` but need no estimate of ``S``.  The tail of
    the ratios is fitted as ``a + b/n``, plus ``c/n**2`` when there are
    enough points.  ``|a| < band`` is superlinear, ``|a|`` within ``band`` of
    1 logarithmic (or divergent if the differences do not shrink), larger
    values divergent.
    """
    s = _as_sequence(s, 5)
    limit = wynn_epsilon(s).best_estimate()
    d = np.diff(s)
    nz = np.flatnonzero(d)
    if nz.size == 0 or nz[-1] < d.size - 2:
        # differences vanish: the sequence has already converged
        return ConvergenceClass(ConvergenceKind.SUPERLINEAR, 0.0, float(s[-1]))
    if np.count_nonzero(d[nz[0]:] == 0.0):
        return ConvergenceClass(ConvergenceKind.UNKNOWN, float("nan"), limit)
    ratios = d[nz[0] + 1:] / d[nz[0]:-1]
    idx = np.arange(nz[0] + 1, d.size, dtype=float)
    tail = max(3, ratios.size // 2)
    r, n = ratios[-tail:], idx[-tail:]
    powers = 3 if tail >= 5 else 2
    design = np.column_stack([n ** -float(j) for j in range(powers)])
    coef, *_ = np.linalg.lstsq(design, r, rcond=None)
    a = coef[0]
    resid = r - design @ coef
    if not np.isfinite(a) or np.max(np.abs(resid)) > 0.1 * max(1.0, np.max(np.abs(r))):
        return ConvergenceClass(ConvergenceKind.UNKNOWN, float(a), limit)
    mag = abs(a)
    if mag < band:
        kind = ConvergenceKind.SUPERLINEAR
    elif mag < 1.0 - band:
        kind = ConvergenceKind.LINEAR
    elif mag <= 1.0 + band:
        shrinking = abs(d[-1]) < abs(d[-tail - 1])
        kind = ConvergenceKind.LOGARITHMIC if shrinking else ConvergenceKind.DIVERGENT
    else:
        kind = ConvergenceKind.DIVERGENT
    return ConvergenceClass(kind, float(a), limit)
