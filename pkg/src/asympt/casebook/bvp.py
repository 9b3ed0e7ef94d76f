"""Decaying solution of ``eps y'' - x y = kappa eps y``, ``y(0) = 1``, ``y(inf) = 0``.

In ``xi = x eps^(-1/3)`` the problem is Airy's equation when ``kappa = 0``.  An
asymptotically equivalent function joins the Maclaurin expansion with the WKB
tail and is checked against a shooting solution.
"""

from __future__ import annotations

import math

import numpy as np
from scipy.integrate import solve_ivp
from scipy.special import airy

from ..errors import InputError, NoSignChange
from ._result import CaseResult, Provenance, Reference

# y'(0) = -a in xi; b scales the WKB tail
A = 3.0 ** (1 / 3) * math.gamma(2 / 3) / math.gamma(1 / 3)
B = 9.0 ** (1 / 3) * math.gamma(2 / 3) / (2.0 * math.sqrt(math.pi))


def aef(xi, a: float = A, b: float = B):
    """``(1 - a xi + (2/3) xi^1.5 - (2/3) a xi^2.5 + (32/5) a xi^4)
    / (1 + (32/5)(a/b) xi^4.25) * exp(-(2/3) xi^1.5)``."""
    xi = np.asarray(xi, dtype=float)
    if np.any(xi < 0):
        raise InputError("xi must be non-negative")
    s = xi ** 1.5
    num = 1.0 - a * xi + 2.0 / 3.0 * s - 2.0 / 3.0 * a * xi * s + 32.0 / 5.0 * a * xi ** 4
    den = 1.0 + 32.0 / 5.0 * a / b * xi ** 4.25
    return num / den * np.exp(-2.0 / 3.0 * s)


def airy_solution(xi):
    """``Ai(xi)/Ai(0)``, the exact decaying solution for ``kappa = 0``."""
    return airy(np.asarray(xi, dtype=float))[0] / airy(0.0)[0]


def shooting(eps: float = 0.1, x_max: float | None = None, kappa: float = 0.0,
             tol: float = 1e-14) -> tuple[float, callable]:
    """Initial slope ``y'(0)`` (in ``x``) of the decaying solution, by bisection.

    A trial slope is too steep if the solution crosses zero before ``x_max``
    and too shallow if it turns upward while still positive.

    Returns:
        ``(slope, y)`` where ``y(x)`` is the dense solution on ``[0, x_max]``.
    """
    if eps <= 0:
        raise InputError("eps must be positive")
    scale = eps ** (1 / 3)
    x_max = 8.0 * scale if x_max is None else x_max

    def rhs(x, u):
        return [u[1], (x / eps + kappa) * u[0]]

    def turned(_, u):
        return u[1]

    def crossed(_, u):
        return u[0]

    turned.terminal = crossed.terminal = True
    turned.direction, crossed.direction = 1, -1

    def run(s, dense=False):
        return solve_ivp(rhs, (0.0, x_max), [1.0, s], method="DOP853", rtol=1e-12, atol=1e-14,
                         events=(turned, crossed), dense_output=dense)

    lo, hi = -4.0 / scale, 0.0  # too steep, too shallow
    if run(lo).t_events[1].size == 0 or run(hi).t_events[0].size == 0:
        raise NoSignChange("slope bracket does not straddle the decaying solution")
    while hi - lo > tol * abs(lo):
        mid = 0.5 * (lo + hi)
        sol = run(mid)
        if sol.t_events[1].size:
            lo = mid
        elif sol.t_events[0].size:
            hi = mid
        else:
            lo = hi = mid
    slope = 0.5 * (lo + hi)
    sol = solve_ivp(rhs, (0.0, x_max), [1.0, slope], method="DOP853", rtol=1e-12, atol=1e-14,
                    dense_output=True)
    return slope, lambda x: sol.sol(np.asarray(x, dtype=float))[0]


def bvp_aef(eps: float = 0.1, xi_max: float = 5.0, points: int = 501) -> CaseResult:
    r = CaseResult("bvp")
    scale = eps ** (1 / 3)
    slope, y = shooting(eps)
    xi = np.linspace(0.0, xi_max, points)
    oracle = y(xi * scale)
    approx = aef(xi)
    rel = np.abs(approx - oracle) / np.abs(oracle)
    r.computed["a"] = A
    r.computed["b"] = B
    r.computed["y_at_0"] = float(aef(0.0))
    r.references["y_at_0"] = Reference(1.0, Provenance.PUBLISHED, 0.0)
    r.computed["max_rel_dev"] = float(np.max(rel))
    r.references["max_rel_dev"] = Reference(0.0, Provenance.PUBLISHED, 0.02,
                                            "published bound 1.5%")
    r.computed["oracle_slope_xi"] = slope * scale
    r.references["oracle_slope_xi"] = Reference(-A, Provenance.DERIVED, 1e-8)
    r.computed["oracle_vs_airy"] = float(np.max(np.abs(oracle - airy_solution(xi))
                                                / airy_solution(xi)))
    r.references["oracle_vs_airy"] = Reference(0.0, Provenance.DERIVED, 1e-6)
    r.data.update(xi=xi, aef=approx, oracle=oracle, rel_dev=rel)
    return r
