"""Diagonal Fourier-Padé approximant of the square wave ``sign(x)`` on ``(-pi, pi)``.

The approximant is

    sum_{j=0}^{J} q_{2j+1} sin((2j+1)x) / (1 + sum_{i=1}^{M} s_{2i} cos(2ix))

with ``J = (N-1)//2`` and ``M = N//2``.  Coefficients are closed-form factorial
ratios, evaluated in log-gamma form so that large ``N`` does not overflow.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np
from scipy.optimize import minimize_scalar

from .errors import EvaluationAtPole, InputError

__all__ = [
    "FourierPadeSign",
    "build",
    "evaluate",
    "s_coefficient",
    "s_coefficient_printed",
    "partial_sum",
    "gibbs_overshoot",
    "GIBBS_LIMIT",
]

# sup of the partial sums as the number of terms grows: (2/pi) Si(pi)
GIBBS_LIMIT = 1.1789797444721672


def _lf(n: int) -> float:
    return math.lgamma(n + 1)


def s_coefficient(N: int, i: int) -> float:
    """``s_{2i} = 2(-1)^i (N!)^4 (2N+2i)!(2N-2i)! / ((N-i)!(N+i)!(N-2i)!(N+2i)! [(2N)!]^2)``."""
    if not 0 <= 2 * i <= N:
        raise InputError(f"s_(2i) needs 0 <= 2i <= N, got i={i}, N={N}")
    log = (4 * _lf(N) + _lf(2 * N + 2 * i) + _lf(2 * N - 2 * i) - _lf(N - i) - _lf(N + i)
           - _lf(N - 2 * i) - _lf(N + 2 * i) - 2 * _lf(2 * N))
    return 2.0 * (-1) ** i * math.exp(log)


def s_coefficient_printed(N: int, i: int) -> float:
    """Variant with ``(N-1)!(N+1)!`` in place of ``(N-i)!(N+i)!``; kept for comparison only."""
    if not 0 <= 2 * i <= N or N < 1:
        raise InputError(f"s_(2i) needs 0 <= 2i <= N, got i={i}, N={N}")
    log = (4 * _lf(N) + _lf(2 * N + 2 * i) + _lf(2 * N - 2 * i) - _lf(N - 1) - _lf(N + 1)
           - _lf(N - 2 * i) - _lf(N + 2 * i) - 2 * _lf(2 * N))
    return 2.0 * (-1) ** i * math.exp(log)


@dataclass(frozen=True, eq=False)
class FourierPadeSign:
    """Attributes:
        N: order.
        q: sine coefficients ``q_1, q_3, ..., q_{2J+1}``.
        s: cosine coefficients ``s_2, s_4, ..., s_{2M}``.
    """

    N: int
    q: np.ndarray
    s: np.ndarray

    def __call__(self, x):
        return evaluate(self, x)


def build(N: int) -> FourierPadeSign:
    """Coefficients of the order-``N`` approximant (``N >= 1``)."""
    if N < 1:
        raise InputError("order must be at least 1")
    J, M = (N - 1) // 2, N // 2
    s = np.array([s_coefficient(N, i) for i in range(1, M + 1)])
    q = np.empty(J + 1)
    for j in range(J + 1):
        k = 2 * j + 1
        acc = 1.0 / k ** 2 + sum(s[i - 1] / (k ** 2 - (2 * i) ** 2) for i in range(1, M + 1))
        q[j] = 4.0 / math.pi * k * acc
    return FourierPadeSign(N, q, s)


def evaluate(fp: FourierPadeSign, x):
    """Value of the trigonometric rational at ``x`` (scalar or array)."""
    x = np.asarray(x, dtype=float)
    k = 2 * np.arange(fp.q.size) + 1
    num = np.sin(np.multiply.outer(x, k)) @ fp.q
    i2 = 2 * np.arange(1, fp.s.size + 1)
    den = 1.0 + (np.cos(np.multiply.outer(x, i2)) @ fp.s if fp.s.size else 0.0)
    if np.any(np.abs(den) < 1e-14 * (1.0 + np.sum(np.abs(fp.s)))):
        raise EvaluationAtPole("Fourier-Padé denominator vanishes")
    return num / den


def partial_sum(terms: int) -> Callable:
    """``(4/pi) sum_{j<terms} sin((2j+1)x)/(2j+1)`` as a function of ``x``."""
    if terms < 1:
        raise InputError("need at least one term")
    k = 2 * np.arange(terms) + 1

    def value(x):
        x = np.asarray(x, dtype=float)
        return 4.0 / math.pi * (np.sin(np.multiply.outer(x, k)) @ (1.0 / k))

    return value


def gibbs_overshoot(f: Callable, grid: int = 4000, target: float = 1.0) -> float:
    """``max f - target`` over the open interval ``(0, pi)``.

    The maximum is located on a uniform grid and then refined by a bounded
    scalar search around the best grid point.
    """
    if grid < 1000:
        raise InputError("grid must have at least 1000 points")
    h = math.pi / (grid + 1)
    x = h * np.arange(1, grid + 1)
    y = np.asarray(f(x), dtype=float)
    k = int(np.argmax(y))
    lo, hi = x[max(k - 1, 0)], x[min(k + 1, grid - 1)]
    best = float(y[k])
    if hi > lo:
        res = minimize_scalar(lambda t: -float(f(t)), bounds=(lo, hi), method="bounded",
                              options={"xatol": 1e-12})
        best = max(best, -float(res.fun))
    return best - target
