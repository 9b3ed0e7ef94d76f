"""Finite-time blow-up of ``x' = alpha x + eps x^2``, ``x(0) = 1``, seen as a pole."""

from __future__ import annotations

import math

import numpy as np
from scipy.optimize import brentq

from ..errors import InputError
from ..pade import construct
from ..series_core import PowerSeries
from ._result import CaseResult, Provenance, Reference


def exact(t, alpha: float, eps: float):
    """``alpha e^(alpha t) / (alpha + eps - eps e^(alpha t))``."""
    e = np.exp(alpha * np.asarray(t, dtype=float))
    return alpha * e / (alpha + eps - eps * e)


def blowup_time(alpha: float, eps: float) -> float:
    """``ln((alpha + eps)/eps) / alpha``; infinite when ``eps = 0``."""
    return math.inf if eps == 0 else math.log((alpha + eps) / eps) / alpha


def regular_series(t: float, alpha: float, order: int = 2) -> PowerSeries:
    """Expansion in ``eps`` at fixed ``t``: ``e^(alpha t) sum_k ((e^(alpha t) - 1)/alpha)^k eps^k``."""
    e = math.exp(alpha * t)
    return PowerSeries(e * ((e - 1.0) / alpha) ** np.arange(order + 1))


def pade_value(t: float, alpha: float, eps: float) -> float:
    """``[1/1]`` approximant in ``eps`` of the regular expansion."""
    return float(construct(regular_series(t, alpha), 1, 1)(eps))


def pade_denominator(t: float, alpha: float, eps: float) -> float:
    return float(np.polynomial.polynomial.polyval(eps, construct(regular_series(t, alpha), 1, 1).den))


def blowup(alpha: float = 0.1, eps: float = 0.01, points: int = 200) -> CaseResult:
    if alpha <= 0 or eps < 0:
        raise InputError("need alpha > 0 and eps >= 0")
    r = CaseResult("blowup")
    t_star = blowup_time(alpha, eps)
    r.computed["t_blowup_exact"] = t_star
    t_end = 0.9 * t_star if math.isfinite(t_star) else 50.0 / alpha
    t = np.linspace(0.0, t_end, points)
    pa = np.array([pade_value(ti, alpha, eps) for ti in t])
    ex = exact(t, alpha, eps)
    r.computed["max_rel_dev"] = float(np.max(np.abs(pa - ex) / np.abs(ex)))
    r.references["max_rel_dev"] = Reference(0.0, Provenance.DERIVED, 1e-10)
    if math.isfinite(t_star):
        r.computed["t_blowup_pade"] = brentq(lambda s: pade_denominator(s, alpha, eps),
                                             0.0, 2.0 * t_star, xtol=1e-14)
        r.references["t_blowup_pade"] = Reference(t_star, Provenance.DERIVED, 1e-9 * t_star)
    else:
        den = np.array([pade_denominator(ti, alpha, eps) for ti in t])
        r.computed["pole_free"] = float(np.all(den > 0))
        r.references["pole_free"] = Reference(1.0, Provenance.TRIVIAL, 0.0)
    r.data.update(t=t, pade=pa, exact=ex)
    return r
