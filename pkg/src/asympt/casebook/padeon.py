"""Localised solution of ``y'' - y + 2y^3 = 0`` recovered from its quasilinear series."""

from __future__ import annotations

import numpy as np
from scipy.optimize import brentq

from ..pade import RationalApproximant, construct
from ..series_core import PowerSeries
from ._result import CaseResult, Provenance, Reference


def quasilinear_series() -> PowerSeries:
    """``y = u (1 - u^2/4 + u^4/16)`` with ``u = C exp(-x)``."""
    return PowerSeries([0.0, 1.0, 0.0, -0.25, 0.0, 0.0625])


def padeon_approximant() -> RationalApproximant:
    """``[1/2]`` approximant in ``u``: ``u / (1 + u^2/4)``."""
    return construct(quasilinear_series(), 1, 2)


def amplitude(pa: RationalApproximant) -> float:
    """``C`` from ``y(0) = 1``.

    ``u/(1 + u^2/4) = 1`` has the double root ``u = 2`` where it touches its
    maximum, so the root is located as the maximiser on ``(0, inf)``.
    """
    # stationary point of the approximant: derivative of num*den' - num'*den
    num, den = pa.num, pa.den
    dnum = np.polynomial.polynomial.polyder(num)
    dden = np.polynomial.polynomial.polyder(den)
    poly = np.polynomial.polynomial
    g = poly.polysub(poly.polymul(dnum, den), poly.polymul(num, dden))
    return brentq(lambda u: poly.polyval(u, g), 0.5, 10.0, xtol=1e-15)


def padeon(points: int = 501) -> CaseResult:
    r = CaseResult("padeon")
    pa = padeon_approximant()
    c = amplitude(pa)
    r.computed["C"] = c
    r.references["C"] = Reference(2.0, Provenance.DERIVED, 1e-12)
    x = np.linspace(0.0, 20.0, points)
    y = np.asarray(pa(c * np.exp(-x)), dtype=float)
    exact = 1.0 / np.cosh(x)
    r.computed["y_at_0"] = float(y[0])
    r.references["y_at_0"] = Reference(1.0, Provenance.PUBLISHED, 1e-12)
    r.computed["y_at_5"] = float(pa(c * np.exp(-5.0)))
    r.references["y_at_5"] = Reference(float(1.0 / np.cosh(5.0)), Provenance.DERIVED, 1e-12)
    r.computed["max_abs_dev"] = float(np.max(np.abs(y - exact)))
    r.references["max_abs_dev"] = Reference(0.0, Provenance.DERIVED, 1e-12)
    r.computed["y_at_20"] = float(y[-1])
    r.data.update(x=x, padeon=y, sech=exact)
    return r
