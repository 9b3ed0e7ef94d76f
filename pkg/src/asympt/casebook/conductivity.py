"""Effective conductivity of cubic arrays of perfectly conducting spheres."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from ..errors import InputError, OutOfRange
from ._result import CaseResult, Provenance, Reference

M_TERMS = 19


class Array(str, enum.Enum):
    SC = "SC"
    BCC = "BCC"
    FCC = "FCC"


@dataclass(frozen=True)
class ArrayConstants:
    a: tuple[float, float, float, float, float, float]
    m1: float
    m2: float
    c_max: float


CONSTANTS = {
    Array.SC: ArrayConstants((1.305, 0.231, 0.405, 0.0723, 0.153, 0.0105),
                             math.pi / 2, 0.7, math.pi / 6),
    Array.BCC: ArrayConstants((0.129, -0.413, 0.764, 0.257, 0.0113, 0.00562),
                              math.sqrt(3) * math.pi / 2, 2.4, math.sqrt(3) * math.pi / 8),
    Array.FCC: ArrayConstants((0.0753, 0.697, -0.741, 0.0420, 0.0231, 9.14e-7),
                              math.sqrt(2) * math.pi, 7.1, math.sqrt(2) * math.pi / 6),
}


def _constants(array: Array | str) -> ArrayConstants:
    try:
        return CONSTANTS[Array(array)]
    except ValueError:
        raise InputError(f"unknown array {array!r}; expected SC, BCC or FCC") from None


def _check_range(k: ArrayConstants, c) -> np.ndarray:
    c = np.asarray(c, dtype=float)
    if np.any(c < 0) or np.any(c > k.c_max):
        raise OutOfRange(f"volume fraction must lie in [0, {k.c_max:.6g}]")
    return c


def gap(array: Array | str, c) -> np.ndarray:
    """Dimensionless gap ``chi = 1 - (c/c_max)^(1/3)``."""
    k = _constants(array)
    return 1.0 - np.cbrt(_check_range(k, c) / k.c_max)


def near_field(array: Array | str, c) -> np.ndarray:
    """Dilute expansion ``1 - 3c / D(c)`` with the tabulated constants."""
    k = _constants(array)
    c = _check_range(k, c)
    a1, a2, a3, a4, a5, a6 = k.a
    d = (-1.0 + c + a1 * c ** (10 / 3) * (1 + a2 * c ** (11 / 3)) / (1 - a3 * c ** (7 / 3))
         + a4 * c ** (14 / 3) + a5 * c ** 6 + a6 * c ** (22 / 3))
    return 1.0 - 3.0 * c / d


def far_field(array: Array | str, c) -> np.ndarray:
    """Near-contact form ``-M1 ln(chi) - M2``."""
    k = _constants(array)
    with np.errstate(divide="ignore"):
        return -k.m1 * np.log(gap(array, c)) - k.m2


@dataclass(frozen=True)
class AefCoefficients:
    alpha: np.ndarray  # alpha_0 .. alpha_m, multiplying c^(i/3)
    p2: float
    p3: float


def aef_coefficients(array: Array | str, m: int = M_TERMS, n: int = 2) -> AefCoefficients:
    """Coefficients of ``(P1(c) + P2 c^((m+1)/3) + P3 ln chi) / Q(c)``.

    ``alpha_j = -Q(c_max) M1 / (j c_max^(j/3))`` reproduce the small-``c`` series of
    ``-P3 ln chi``, so the logarithm cancels at low concentration; ``alpha_3``
    and ``alpha_10`` also carry the dilute terms.  ``n = 2`` adds ``P2`` to match
    the constant ``-M2`` at contact.
    """
    if m < 10:
        raise InputError("m must be at least 10")
    if n not in (1, 2):
        raise InputError("n must be 1 or 2")
    k = _constants(array)
    cm, a1 = k.c_max, k.a[0]
    q_max = 1.0 - cm - a1 * cm ** (10 / 3)
    j = np.arange(1, m + 1, dtype=float)
    alpha = np.empty(m + 1)
    alpha[0] = 1.0
    alpha[1:] = -q_max * k.m1 / (j * cm ** (j / 3))
    alpha[3] += 2.0
    alpha[10] -= a1
    p3 = -k.m1 * q_max
    p1_max = float(np.sum(alpha * cm ** (np.arange(m + 1) / 3)))
    p2 = -(p1_max + q_max * k.m2) / cm ** ((m + 1) / 3) if n == 2 else 0.0
    return AefCoefficients(alpha, p2, p3)


def aef(array: Array | str, c, m: int = M_TERMS, n: int = 2) -> np.ndarray:
    """Asymptotically equivalent function valid on ``[0, c_max)``."""
    k = _constants(array)
    c = _check_range(k, c)
    co = aef_coefficients(array, m, n)
    p1 = np.polynomial.polynomial.polyval(np.cbrt(c), co.alpha)
    q = 1.0 - c - k.a[0] * c ** (10 / 3)
    with np.errstate(divide="ignore"):
        return (p1 + co.p2 * c ** ((m + 1) / 3) + co.p3 * np.log(gap(array, c))) / q


def wiener_bounds(phi, eps: float) -> tuple[np.ndarray, np.ndarray]:
    """Harmonic and arithmetic means of ``1`` and ``1 + eps`` at volume fraction ``phi``."""
    phi = np.asarray(phi, dtype=float)
    return 1.0 / ((1.0 - phi) + phi / (1.0 + eps)), 1.0 + phi * eps


def weak_contrast(phi, eps: float) -> np.ndarray:
    """``q/q1 = 1 + phi eps - phi(1 - phi) eps^2 / 2`` truncated at second order."""
    phi = np.asarray(phi, dtype=float)
    return 1.0 + phi * eps - 0.5 * phi * (1.0 - phi) * eps ** 2


def conductivity(array: Array | str = Array.SC, c: float = 0.3, eps: float = 1.0) -> CaseResult:
    """AEF, limiting forms and bound checks for one array at volume fraction ``c``.

    Args:
        array: SC, BCC or FCC.
        c: volume fraction of inclusions.
        eps: contrast ``q2/q1 - 1`` used for the weak-contrast bound check.
    """
    k = _constants(array)
    c = float(_check_range(k, c))
    r = CaseResult("conductivity")
    r.computed["c"] = c
    r.computed["c_max"] = k.c_max
    r.computed["aef"] = float(aef(array, c))
    r.computed["near_field"] = float(near_field(array, c))
    r.computed["far_field"] = float(far_field(array, c))
    r.computed["aef_at_zero"] = float(aef(array, 0.0))
    r.references["aef_at_zero"] = Reference(1.0, Provenance.TRIVIAL, 0.0, "no inclusions")

    chi = np.geomspace(1e-3, 1e-6, 30)
    cc = k.c_max * (1.0 - chi) ** 3
    ratio = aef(array, cc) / far_field(array, cc)
    r.computed["contact_ratio_worst"] = float(ratio[np.argmax(np.abs(ratio - 1.0))])
    r.references["contact_ratio_worst"] = Reference(1.0, Provenance.PUBLISHED, 0.02,
                                                    "tabulated M1, M2")

    phi = np.linspace(0.0, 0.1, 101)
    lo, hi = wiener_bounds(phi, eps)
    q = weak_contrast(phi, eps)
    tol = 1e-14
    r.computed["weak_contrast_within_bounds"] = float(np.all((lo - tol <= q) & (q <= hi + tol)))
    r.references["weak_contrast_within_bounds"] = Reference(1.0, Provenance.DERIVED, 0.0)
    # perfectly conducting inclusions: the harmonic bound is 1/(1-c), the arithmetic one infinite
    kn = near_field(array, phi)
    r.computed["near_field_above_lower_bound"] = float(np.all(kn >= 1.0 / (1.0 - phi) - tol))
    r.references["near_field_above_lower_bound"] = Reference(1.0, Provenance.DERIVED, 0.0)

    grid = np.linspace(0.0, k.c_max * (1 - 1e-9), 400)
    r.data.update(c=grid, aef=aef(array, grid), near_field=near_field(array, grid),
                  far_field=far_field(array, grid))
    return r
