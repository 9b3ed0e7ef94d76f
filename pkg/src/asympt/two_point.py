"""Two-point Padé approximants and rational interpolants between two limits.

The far-field data are written as ``eps**p * sum_i d_i eps**-i`` so that an
``[n/m]`` approximant can only match them when ``n - m == p``.  Fractional
exponents are handled on a fixed lattice ``t = z**(1/q)``, which turns the
problem into a two-point approximant in ``t`` with some coefficients pinned
to zero.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from ._linalg import PIVOT_RATIO, solve_consistent
from .errors import (InconsistentAsymptotics, InconsistentDegrees, InputError,
                     InsufficientCoefficients)
from .pade import RationalApproximant
from .series_core import PowerSeries, SeriesKind

__all__ = [
    "TwoPointData",
    "FractionalRational",
    "construct_tppa",
    "rational_aef",
    "sommerfeld_fit",
]


@dataclass(frozen=True)
class TwoPointData:
    """Expansions of one function at zero and at infinity.

    Attributes:
        at_zero: coefficients ``c_i`` of ``eps**i``.
        at_infinity: coefficients ``d_i`` of ``eps**(p - i)``.
        k_zero: how many conditions are taken at zero.
        offset: leading far-field power ``p``.
    """

    at_zero: PowerSeries
    at_infinity: PowerSeries
    k_zero: int
    offset: int = 0

    def __post_init__(self):
        if self.at_zero.kind != SeriesKind.AT_ZERO:
            raise InputError("at_zero must be an expansion about zero")
        if self.at_infinity.kind != SeriesKind.AT_INFINITY:
            raise InputError("at_infinity must be an expansion about infinity")
        if self.k_zero < 0:
            raise InputError("k_zero must be non-negative")


def _solve_two_point(near: np.ndarray, far: np.ndarray, p: int, num_exps: Sequence[int],
                     den_exps: Sequence[int], k_zero: int, what: str) -> tuple[np.ndarray, np.ndarray]:
    """Coefficients on the given exponent sets matching ``k_zero`` near rows and the rest far.

    ``den_exps`` must contain 0 (normalised to 1).  Returns dense coefficient
    arrays indexed by exponent.
    """
    num_exps = sorted(set(num_exps))
    den_free = sorted(set(den_exps) - {0})
    n_top, m_top = num_exps[-1], max(den_exps)
    if n_top - m_top != p:
        raise InconsistentDegrees(
            f"{what}: degree difference {n_top - m_top} does not match far-field power {p}")
    unknowns = len(num_exps) + len(den_free)
    k_far = unknowns - k_zero
    if k_zero < 0 or k_far < 0:
        raise InputError(f"{what}: {k_zero} conditions at zero exceed the {unknowns} unknowns")
    col_a = {e: i for i, e in enumerate(num_exps)}
    col_b = {e: len(num_exps) + i for i, e in enumerate(den_free)}

    rows, rhs = [], []
    j = 0
    while len(rows) < k_zero:
        if j >= near.size:
            raise InsufficientCoefficients(f"{what}: not enough coefficients at zero")
        row = np.zeros(unknowns)
        if j in col_a:
            row[col_a[j]] = 1.0
        touched = j in col_a
        for e, c in col_b.items():
            if e <= j:
                row[c] = -near[j - e]
                touched = True
        if touched:
            rows.append(row)
            rhs.append(near[j])
        elif near[j] != 0.0:
            raise InconsistentAsymptotics(f"{what}: exponent set cannot reproduce the term of order {j}")
        j += 1
    i = 0
    n_far = 0
    while n_far < k_far:
        if i >= far.size:
            raise InsufficientCoefficients(f"{what}: not enough coefficients at infinity")
        row = np.zeros(unknowns)
        e_num = n_top - i
        touched = e_num in col_a
        if touched:
            row[col_a[e_num]] = 1.0
        for e, c in col_b.items():
            idx = i - (m_top - e)
            if idx >= 0:
                row[c] = -far[idx]
                touched = True
        b0 = far[i - m_top] if i >= m_top else 0.0
        if touched:
            rows.append(row)
            rhs.append(b0)
            n_far += 1
        elif b0 != 0.0:
            raise InconsistentAsymptotics(f"{what}: exponent set cannot reproduce far-field term {i}")
        i += 1

    x = np.zeros(0)
    if unknowns:
        a_mat, b_vec = np.array(rows), np.array(rhs)
        scale = max(float(np.max(np.abs(near))), float(np.max(np.abs(far))), 1e-300)
        x = solve_consistent(a_mat, b_vec, scale, PIVOT_RATIO, what=what)
    num = np.zeros(n_top + 1)
    den = np.zeros(m_top + 1)
    den[0] = 1.0
    for e, c in col_a.items():
        num[e] = x[c]
    for e, c in col_b.items():
        den[e] = x[c]
    return num, den


def construct_tppa(d: TwoPointData, n: int, m: int) -> RationalApproximant:
    """The ``[n/m]`` two-point Padé approximant.

    The first ``d.k_zero`` Taylor coefficients at zero and the first
    ``n + m + 1 - d.k_zero`` far-field coefficients are reproduced exactly.

    Raises:
        InconsistentDegrees: ``n - m`` differs from the far-field power.
        SingularSystem: the matching system is degenerate.
    """
    if n < 0 or m < 0:
        raise InputError("degrees must be non-negative")
    if d.k_zero > n + m + 1:
        raise InputError(f"k_zero={d.k_zero} exceeds n+m+1={n + m + 1}")
    if n - m != d.offset:
        raise InconsistentDegrees(f"[{n}/{m}] cannot match far-field power {d.offset}")
    if d.at_zero.order + 1 < d.k_zero:
        raise InsufficientCoefficients(f"need {d.k_zero} coefficients at zero")
    if d.at_infinity.order + 1 < n + m + 1 - d.k_zero:
        raise InsufficientCoefficients(f"need {n + m + 1 - d.k_zero} coefficients at infinity")
    num, den = _solve_two_point(d.at_zero.coeffs, d.at_infinity.coeffs, d.offset,
                                range(n + 1), range(m + 1), d.k_zero, f"TPPA [{n}/{m}]")
    return RationalApproximant(num, den)


@dataclass(frozen=True, eq=False)
class FractionalRational:
    """``sum a_i z**p_i / sum b_j z**r_j`` with rational exponents."""

    num_powers: tuple[Fraction, ...]
    num_coeffs: np.ndarray
    den_powers: tuple[Fraction, ...]
    den_coeffs: np.ndarray

    def __call__(self, z):
        z = np.asarray(z, dtype=float)
        num = sum(c * z ** float(p) for p, c in zip(self.num_powers, self.num_coeffs))
        den = sum(c * z ** float(p) for p, c in zip(self.den_powers, self.den_coeffs))
        return num / den

    def to_json(self) -> dict:
        return {
            "schema": 1,
            "num": [[str(p), float(c)] for p, c in zip(self.num_powers, self.num_coeffs)],
            "den": [[str(p), float(c)] for p, c in zip(self.den_powers, self.den_coeffs)],
        }


def _as_fractions(values: Iterable) -> list[Fraction]:
    try:
        return [Fraction(v).limit_denominator(10**6) if isinstance(v, float) else Fraction(v) for v in values]
    except (TypeError, ValueError, ZeroDivisionError) as exc:
        raise InputError(f"exponents must be rationals: {exc}") from None


def _spread(coeffs: np.ndarray, step: int) -> np.ndarray:
    out = np.zeros((coeffs.size - 1) * step + 1)
    out[::step] = coeffs
    return out


def rational_aef(near: PowerSeries, far: PowerSeries, far_power, num_powers: Sequence,
                 den_powers: Sequence, k_zero: int | None = None, near_step=1,
                 far_step=1) -> FractionalRational:
    """Rational function in fractional powers of ``z`` matching two limits.

    Args:
        near: coefficients of ``z**(i * near_step)`` as ``z -> 0``.
        far: coefficients of ``z**(far_power - i * far_step)`` as ``z -> inf``.
        far_power: leading far-field exponent ``r``.
        num_powers: exponents allowed in the numerator.
        den_powers: exponents allowed in the denominator; must contain 0.
        k_zero: conditions taken at zero.  Defaults to all unknowns not
            fixed by the available far-field coefficients.
        near_step, far_step: exponent spacing of the two input series.

    Raises:
        InconsistentAsymptotics: the exponent sets cannot reproduce both limits.
    """
    if near.kind != SeriesKind.AT_ZERO or far.kind != SeriesKind.AT_INFINITY:
        raise InputError("need an at_zero near field and an at_infinity far field")
    nump = _as_fractions(num_powers)
    denp = _as_fractions(den_powers)
    r, ns, fs = _as_fractions([far_power, near_step, far_step])
    if not nump or not denp or 0 not in denp:
        raise InconsistentAsymptotics("denominator exponents must include 0 and both sets be non-empty")
    if min(nump) < 0 or min(denp) < 0 or ns <= 0 or fs <= 0:
        raise InputError("exponents and steps must be non-negative")
    if max(nump) - max(denp) != r:
        raise InconsistentAsymptotics(
            f"leading exponents differ by {max(nump) - max(denp)}, far field needs {r}")
    q = math.lcm(*(f.denominator for f in nump + denp + [r, ns, fs]))
    num_t = [int(p * q) for p in nump]
    den_t = [int(p * q) for p in denp]
    near_t = _spread(near.coeffs, int(ns * q))
    far_t = _spread(far.coeffs, int(fs * q))
    unknowns = len(set(num_t)) + len(set(den_t)) - 1
    if k_zero is None:
        k_zero = max(unknowns - (far.order + 1), 0)
    num, den = _solve_two_point(near_t, far_t, int(r * q), num_t, den_t, k_zero, "rational AEF")
    keep_n = sorted(set(num_t))
    keep_d = sorted(set(den_t))
    return FractionalRational(tuple(Fraction(e, q) for e in keep_n), num[keep_n],
                              tuple(Fraction(e, q) for e in keep_d), den[keep_d])


def sommerfeld_fit(f: PowerSeries) -> tuple[float, float]:
    """``(A, mu)`` such that ``(1 + A x)**mu`` matches ``1 + a_1 x + a_2 x**2``."""
    if f.order < 2:
        raise InsufficientCoefficients("the fit needs c_0, c_1 and c_2")
    c0, a1, a2 = (float(v) for v in f.coeffs[:3])
    if c0 != 1.0:
        raise InputError("the fit needs c_0 = 1")
    if a1 == 0.0:
        raise InputError("the fit needs c_1 != 0")
    gap = a1 * a1 - 2.0 * a2
    if gap == 0.0:
        raise InputError("a_1**2 = 2 a_2: exponent is unbounded (exponential limit)")
    return gap / a1, a1 * a1 / gap
