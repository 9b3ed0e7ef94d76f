"""Period of ``x'' + x**n = 0`` from the small-exponent approximation."""

from __future__ import annotations

import math

from scipy.special import beta

from ..errors import InputError
from ._result import CaseResult, Provenance, Reference

# Table values (n = 3, 5); the n = 1 entry is pi/2
TABLE_A1 = {3: 1.30, 5: 1.20}
TABLE_A2 = {3: 1.25, 5: 1.16}


def _lam(n: float) -> float:
    if n < 1:
        raise InputError("exponent n must be at least 1")
    return 2.0 / (n + 1.0)


def a1_exact(n: float) -> float:
    """``0.5 lam B(0.5 lam, 0.5)``: the quarter-period integral."""
    lam = _lam(n)
    return float(0.5 * lam * beta(0.5 * lam, 0.5))


def a2_approx(n: float) -> float:
    """``(pi/2)**lam``: the same integral in the small-``lam`` approximation."""
    return (math.pi / 2.0) ** _lam(n)


def period_approx(n: float) -> float:
    """``T = 4 (pi / (2 sqrt(lam)))**lam``."""
    lam = _lam(n)
    return 4.0 * (math.pi / (2.0 * math.sqrt(lam))) ** lam


def period_exact(n: float) -> float:
    lam = _lam(n)
    return 4.0 * lam ** (-lam / 2.0) * a1_exact(n)


def oscillator_period(n: int = 3) -> CaseResult:
    if n < 1 or n % 2 == 0:
        raise InputError("n must be an odd positive integer")
    r = CaseResult("oscillator")
    r.computed["A1"] = a1_exact(n)
    r.computed["A2"] = a2_approx(n)
    r.computed["delta"] = abs(r.computed["A1"] - r.computed["A2"]) / r.computed["A1"]
    r.computed["T_approx"] = period_approx(n)
    r.computed["T_exact"] = period_exact(n)
    if n == 1:
        r.references["T_approx"] = Reference(2 * math.pi, Provenance.PUBLISHED, 1e-12)
        r.references["A1"] = Reference(math.pi / 2, Provenance.DERIVED, 1e-12)
        r.references["A2"] = Reference(math.pi / 2, Provenance.DERIVED, 1e-12)
    if n in TABLE_A1:
        r.references["A1"] = Reference(TABLE_A1[n], Provenance.PUBLISHED, 0.01)
        r.references["A2"] = Reference(TABLE_A2[n], Provenance.PUBLISHED, 0.01)
    return r
