"""The real root of ``x**5 + x = 1`` by four different parameter embeddings."""

from __future__ import annotations

import math

import numpy as np
from scipy.optimize import brentq

from .. import series_core as sc
from ..pade import construct
from ..series_core import PowerSeries
from ._result import CaseResult, Provenance, Reference

EXACT_ROOT = 0.75487767


def exact_root() -> float:
    return brentq(lambda x: x ** 5 + x - 1.0, 0.0, 1.0, xtol=1e-15)


def eps_nonlinear_series(order: int) -> PowerSeries:
    """``x(eps)`` for ``eps x**5 + x = 1``: ``a_k = (-1)^k (5k)!/(k!(4k+1)!)``."""
    a = np.empty(order + 1)
    a[0] = 1.0
    for k in range(1, order + 1):
        # ratio a_k / a_{k-1} from the closed form
        num = -np.prod(np.arange(5 * k - 4, 5 * k + 1, dtype=float))
        den = k * np.prod(np.arange(4 * k - 2, 4 * k + 2, dtype=float))
        a[k] = a[k - 1] * num / den
    return PowerSeries(a)


def eps_linear_series(order: int) -> PowerSeries:
    """``x(eps)`` for ``x**5 + eps x = 1`` by Newton iteration on formal series."""
    e = PowerSeries.variable(order)
    return sc.solve_series(lambda x: x ** 5 + e * x - 1.0, lambda x: 5.0 * x ** 4 + e, 1.0, order)


def eps_linear_closed_form(n: int) -> float:
    """``b_n = -Gamma((4n-1)/5) / (5 Gamma((4-n)/5) n!)``; zero where the lower Gamma has a pole."""
    from scipy.special import gamma, rgamma

    return float(-gamma((4 * n - 1) / 5) * rgamma((4 - n) / 5) / (5 * math.factorial(n)))


def delta_series(order: int) -> PowerSeries:
    """``x(delta)`` for ``x**(1+delta) + x = 1``, with ``x**delta = exp(delta ln x)``."""
    d = PowerSeries.variable(order)

    def x_pow_delta(x: PowerSeries) -> PowerSeries:
        return sc.exp(sc.mul(d, sc.log(x)))

    return sc.solve_series(lambda x: sc.mul(x, x_pow_delta(x)) + x - 1.0,
                           lambda x: sc.mul(1.0 + d, x_pow_delta(x)) + 1.0, 0.5, order)


def large_n_first(n: float) -> float:
    return (math.log(n) / n) ** (1.0 / n)


def large_n_second(n: float) -> float:
    return ((math.log(n) - math.log(math.log(n))) / n) ** (1.0 / n)


def quintic_root() -> CaseResult:
    r = CaseResult("quintic")
    root = exact_root()
    r.computed["exact_root"] = root
    r.references["exact_root"] = Reference(EXACT_ROOT, Provenance.PUBLISHED, 5e-9)

    a = eps_nonlinear_series(6)
    r.computed["nonlinear_sum_a0_a6"] = float(np.sum(a.coeffs))
    r.references["nonlinear_sum_a0_a6"] = Reference(21476.0, Provenance.PUBLISHED, 0.5)
    r.computed["nonlinear_pade33_at_1"] = float(construct(a, 3, 3)(1.0))
    r.references["nonlinear_pade33_at_1"] = Reference(0.76369, Provenance.PUBLISHED, 5e-4)

    b = eps_linear_series(6)
    r.computed["linear_sum_b0_b6"] = float(np.sum(b.coeffs))
    r.computed["linear_rel_error"] = abs(r.computed["linear_sum_b0_b6"] - EXACT_ROOT) / EXACT_ROOT
    r.references["linear_rel_error"] = Reference(7e-4, Provenance.PUBLISHED, 3e-4,
                                                  "criterion: at most 1e-3")

    c = delta_series(12)
    r.computed["delta_pade33_at_4"] = float(construct(c, 3, 3)(4.0))
    r.references["delta_pade33_at_4"] = Reference(0.75448, Provenance.PUBLISHED, 1e-5)
    r.computed["delta_pade66_at_4"] = float(construct(c, 6, 6)(4.0))
    r.references["delta_pade66_at_4"] = Reference(0.75487654, Provenance.PUBLISHED, 1e-6)

    r.computed["large_n_first_n5"] = large_n_first(5)
    r.references["large_n_first_n5"] = Reference(0.79715, Provenance.PUBLISHED, 1e-4)
    r.computed["large_n_second_n5"] = large_n_second(5)
    r.references["large_n_second_n5"] = Reference(0.74318, Provenance.PUBLISHED, 1e-4)
    r.computed["large_n_first_n2"] = large_n_first(2)
    r.references["large_n_first_n2"] = Reference(0.58871, Provenance.PUBLISHED, 1e-5)

    r.data["a"] = a.coeffs.copy()
    r.data["b"] = b.coeffs.copy()
    r.data["c"] = c.coeffs.copy()
    return r
