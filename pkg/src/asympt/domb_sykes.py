"""Domb-Sykes estimates of the nearest singularity from series coefficients.

For a singularity ``(1 -/+ eps/eps0)**alpha`` the coefficient ratios behave as
``C_n/C_{n-1} ~ I + s/n`` with ``|I| = 1/eps0`` and ``s/I = -(1 + alpha)``.
A straight-line fit in ``1/n`` therefore yields both parameters.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .errors import TooFewPoints, ZeroCoefficientInWindow
from .series_core import PowerSeries

__all__ = ["SignPattern", "Growth", "DombSykesFit", "fit", "square_ratio_fit", "sign_pattern",
           "plot_points"]

MIN_POINTS = 4


class SignPattern(str, enum.Enum):
    SAME_SIGN = "same_sign"
    ALTERNATING = "alternating"
    PERIOD4 = "period4"
    IRREGULAR = "irregular"


class Growth(str, enum.Enum):
    """Coarse growth class of the coefficients."""

    POWER = "power"  # finite radius
    FACTORIAL = "factorial"  # C_n ~ k**n n!, zero radius
    EXPONENTIAL = "exponential"  # C_n ~ k**n / n!, entire (exp(k eps) factor)


@dataclass(frozen=True)
class DombSykesFit:
    eps0: float
    alpha: float
    sign_pattern: SignPattern
    intercept: float
    slope: float
    fit_residual: float
    points_used: int
    growth: Growth = Growth.POWER
    growth_k: float = float("nan")


def sign_pattern(f: PowerSeries | np.ndarray) -> SignPattern:
    """Sign structure of the non-zero coefficients (zeros are skipped)."""
    c = f.coeffs if isinstance(f, PowerSeries) else np.asarray(f, dtype=float)
    if c.size < 8:
        raise TooFewPoints("sign pattern needs at least 8 coefficients")
    s = np.sign(c[c != 0])
    if s.size < 2:
        return SignPattern.SAME_SIGN
    if np.all(s == s[0]):
        return SignPattern.SAME_SIGN
    if np.all(s[1:] == -s[:-1]):
        return SignPattern.ALTERNATING
    if s.size >= 4 and np.all(s[2:] == -s[:-2]):
        return SignPattern.PERIOD4
    return SignPattern.IRREGULAR


def _line_fit(n: np.ndarray, r: np.ndarray, weighted: bool) -> tuple[float, float, float]:
    w = n ** 2 if weighted else np.ones_like(n)
    design = np.column_stack([np.ones_like(n), 1.0 / n])
    sw = np.sqrt(w)
    (intercept, slope), *_ = np.linalg.lstsq(design * sw[:, None], r * sw, rcond=None)
    resid = r - design @ np.array([intercept, slope])
    rms = float(np.sqrt(np.sum(w * resid ** 2) / np.sum(w)))
    return float(intercept), float(slope), rms


def _growth(n: np.ndarray, r: np.ndarray, intercept: float, slope: float) -> tuple[Growth, float]:
    ar = np.abs(r)
    per_n = ar / n
    if n.size >= 3 and np.all(np.diff(ar) > 0) and np.ptp(per_n) <= 0.25 * np.mean(per_n):
        return Growth.FACTORIAL, float(per_n[-1])
    times_n = ar * n
    if (n.size >= 3 and np.all(np.diff(ar) < 0) and np.ptp(times_n) <= 0.25 * np.mean(times_n)
            and abs(intercept) <= 0.05 * abs(slope) / n[0]):
        return Growth.EXPONENTIAL, float(times_n[-1])
    return Growth.POWER, float("nan")


def _finish(n, r, f, weighted) -> DombSykesFit:
    if n.size < MIN_POINTS:
        raise TooFewPoints(f"need at least {MIN_POINTS} ratio points, got {n.size}")
    intercept, slope, rms = _line_fit(n, r, weighted)
    eps0 = 1.0 / abs(intercept) if intercept != 0 else float("inf")
    alpha = -slope / intercept - 1.0 if intercept != 0 else float("nan")
    # signs are read over the fit window, where the asymptotic pattern has set in
    window = f.coeffs[int(n[0]) - 1:]
    try:
        pattern = sign_pattern(window if window.size >= 8 else f)
    except TooFewPoints:
        pattern = SignPattern.IRREGULAR
    growth, k = _growth(n, r, intercept, slope)
    return DombSykesFit(eps0, alpha, pattern, intercept, slope, rms, int(n.size), growth, k)


def plot_points(f: PowerSeries, n_min: int = 1) -> tuple[np.ndarray, np.ndarray]:
    """``(1/n, C_n/C_{n-1})`` for ``n >= n_min``."""
    c = f.coeffs
    n = np.arange(max(n_min, 1), c.size)
    if np.any(c[n - 1] == 0):
        bad = int(n[np.flatnonzero(c[n - 1] == 0)[0]] - 1)
        raise ZeroCoefficientInWindow(f"coefficient {bad} is zero")
    return 1.0 / n, c[n] / c[n - 1]


def fit(f: PowerSeries, n_min: int = 1, weighted: bool = True) -> DombSykesFit:
    """Weighted least-squares line through ``C_n/C_{n-1}`` against ``1/n``.

    Args:
        f: series coefficients.
        n_min: first ratio index used.
        weighted: weight points by ``n**2`` (later ratios are closer to the
            asymptotic form).
    """
    inv_n, r = plot_points(f, n_min)
    return _finish(1.0 / inv_n, r, f, weighted)


def square_ratio_fit(f: PowerSeries, n_min: int = 2, weighted: bool = True) -> DombSykesFit:
    """The same fit on ``sqrt|C_n/C_{n-2}|``.

    Useful when the sign pattern is periodic (complex-conjugate singularities)
    or every other coefficient vanishes.  Pairs where both coefficients are
    zero are skipped.
    """
    c = f.coeffs
    ns, rs = [], []
    for n in range(max(n_min, 2), c.size):
        if c[n] == 0 and c[n - 2] == 0:
            continue
        if c[n - 2] == 0:
            raise ZeroCoefficientInWindow(f"coefficient {n - 2} is zero")
        ns.append(n)
        rs.append(np.sqrt(abs(c[n] / c[n - 2])))
    if not ns:
        raise TooFewPoints("no usable coefficient pairs")
    return _finish(np.asarray(ns, dtype=float), np.asarray(rs), f, weighted)
