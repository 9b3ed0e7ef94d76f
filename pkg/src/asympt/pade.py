"""One-point Padé approximants, the Padé table and pole/zero diagnostics."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np
from numpy.polynomial import polynomial as P

from ._linalg import PIVOT_RATIO, solve_consistent
from .errors import (EvaluationAtPole, InputError, InsufficientCoefficients, SingularSystem)
from .series_core import PowerSeries, SeriesKind, divide

__all__ = [
    "RationalApproximant",
    "Pole",
    "PoleZeroReport",
    "BoundsReport",
    "construct",
    "evaluate",
    "pade_table",
    "pole_zero_report",
    "smooth_diagonal",
    "bounds_check",
    "polynomial_roots",
]

FROISSART_TOL = 1e-6


@dataclass(frozen=True, eq=False)
class RationalApproximant:
    """``(a_0 + ... + a_n x**n) / (1 + b_1 x + ... + b_m x**m)``."""

    num: np.ndarray
    den: np.ndarray

    def __post_init__(self):
        num = np.array(self.num, dtype=float).ravel()
        den = np.array(self.den, dtype=float).ravel()
        if num.size == 0 or den.size == 0:
            raise InputError("numerator and denominator need at least one coefficient")
        if den[0] == 0:
            raise InputError("denominator must not vanish at the origin")
        if den[0] != 1.0:
            num, den = num / den[0], den / den[0]
        if not (np.all(np.isfinite(num)) and np.all(np.isfinite(den))):
            raise InputError("approximant coefficients must be finite")
        num.setflags(write=False)
        den.setflags(write=False)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    @property
    def degrees(self) -> tuple[int, int]:
        return self.num.size - 1, self.den.size - 1

    def __call__(self, x):
        return evaluate(self, x)

    def __repr__(self) -> str:
        n, m = self.degrees
        return f"RationalApproximant[{n}/{m}](num={self.num.tolist()}, den={self.den.tolist()})"

    def maclaurin(self, order: int) -> PowerSeries:
        """Re-expansion about the origin through ``order``."""
        num = np.zeros(order + 1)
        den = np.zeros(order + 1)
        num[: min(order + 1, self.num.size)] = self.num[: order + 1]
        den[: min(order + 1, self.den.size)] = self.den[: order + 1]
        return divide(PowerSeries(num), PowerSeries(den))

    def to_json(self) -> dict:
        return {"schema": 1, "num": self.num.tolist(), "den": self.den.tolist()}

    @classmethod
    def from_json(cls, obj: dict) -> RationalApproximant:
        try:
            return cls(obj["num"], obj["den"])
        except (KeyError, TypeError) as exc:
            raise InputError("approximant JSON needs 'num' and 'den' arrays") from exc


def _coeff(c: np.ndarray, j: int) -> float:
    return float(c[j]) if 0 <= j < c.size else 0.0


def construct(f: PowerSeries, n: int, m: int, pivot_ratio: float = PIVOT_RATIO) -> RationalApproximant:
    """The ``[n/m]`` Padé approximant of ``f``.

    The denominator solves the Toeplitz system that cancels orders
    ``n+1 .. n+m``; the numerator then follows by convolution.  When that
    system is singular but consistent (inside a square block of the table)
    the least-norm solution is used; it may carry cancelling pole-zero
    pairs.  Inconsistent systems, the gaps of the table, raise
    :class:`SingularSystem`.
    """
    if n < 0 or m < 0:
        raise InputError("degrees must be non-negative")
    if f.kind != SeriesKind.AT_ZERO:
        raise InputError("Padé construction expects an expansion about zero")
    if f.order < n + m:
        raise InsufficientCoefficients(f"[{n}/{m}] needs {n + m + 1} coefficients, got {f.order + 1}")
    # x -> r x with r a power of two balances geometric growth exactly
    r = _balance_radius(f.coeffs[: n + m + 1])
    c = f.coeffs[: n + m + 1] * r ** np.arange(n + m + 1)
    b = np.ones(m + 1)
    if m:
        a_mat = np.array([[_coeff(c, n + r - s) for s in range(1, m + 1)] for r in range(1, m + 1)])
        rhs = -np.array([_coeff(c, n + r) for r in range(1, m + 1)])
        b[1:] = solve_consistent(a_mat, rhs, float(np.max(np.abs(c))), pivot_ratio,
                                 what=f"Padé [{n}/{m}]")
    a = np.array([sum(b[s] * _coeff(c, j - s) for s in range(0, min(j, m) + 1)) for j in range(n + 1)])
    return RationalApproximant(a / r ** np.arange(n + 1), b / r ** np.arange(m + 1))


def _balance_radius(c: np.ndarray) -> float:
    """Power of two ``r`` with ``|c_k| r^k`` no larger than the leading nonzero term's size."""
    nz = np.flatnonzero(c)
    if nz.size < 2:
        return 1.0
    j = nz[0]
    k = nz[1:]
    growth = float(np.max((np.abs(c[k]) / abs(c[j])) ** (1.0 / (k - j))))
    if not 0.0 < growth < math.inf:
        return 1.0
    # keep r**k well inside the exponent range
    cap = 500 // max(int(k[-1]), 1)
    return float(2.0 ** min(max(-round(math.log2(growth)), -cap), cap))


def _den_tolerance(r: RationalApproximant, x) -> float:
    ax = np.abs(x)
    return 1e-14 * float(np.sum(np.abs(r.den) * ax ** np.arange(r.den.size)))


def evaluate(r: RationalApproximant, x):
    """Horner evaluation of ``num(x)/den(x)``; raises at (numerical) poles."""
    xs = np.asarray(x)
    num = P.polyval(xs, r.num)
    den = P.polyval(xs, r.den)
    if xs.ndim == 0:
        if abs(den) <= _den_tolerance(r, xs):
            raise EvaluationAtPole(f"denominator vanishes at x={complex(xs)!r}")
        return num / den
    bad = np.abs(den) <= np.array([_den_tolerance(r, v) for v in xs.ravel()]).reshape(xs.shape)
    if np.any(bad):
        raise EvaluationAtPole(f"denominator vanishes at x={xs[bad][0]!r}")
    return num / den


def pade_table(f: PowerSeries, max_n: int, max_m: int) -> list[list[RationalApproximant | None]]:
    """Grid ``table[m][n]`` of approximants; ``None`` marks a gap (singular block)."""
    if f.order < max_n + max_m:
        raise InsufficientCoefficients(
            f"table up to [{max_n}/{max_m}] needs {max_n + max_m + 1} coefficients")
    table: list[list[RationalApproximant | None]] = []
    for m in range(max_m + 1):
        row: list[RationalApproximant | None] = []
        for n in range(max_n + 1):
            try:
                row.append(construct(f, n, m))
            except SingularSystem:
                row.append(None)
        table.append(row)
    return table


def polynomial_roots(coeffs: np.ndarray) -> np.ndarray:
    """Roots of ``sum coeffs[k] x**k`` from the eigenvalues of its companion matrix.

    Vanishing leading coefficients are dropped (those roots sit at infinity).
    """
    c = np.trim_zeros(np.asarray(coeffs, dtype=complex), "b")
    if c.size <= 1:
        return np.zeros(0, dtype=complex)
    if c.size == 2:
        return np.array([-c[0] / c[1]])
    comp = np.zeros((c.size - 1, c.size - 1), dtype=complex)
    comp[1:, :-1] = np.eye(c.size - 2)
    comp[:, -1] = -c[:-1] / c[-1]
    return np.linalg.eigvals(comp)


def _polish(coeffs: np.ndarray, z: complex, steps: int = 8) -> tuple[complex, bool]:
    d = P.polyder(coeffs)
    for _ in range(steps):
        fz = P.polyval(z, coeffs)
        dz = P.polyval(z, d)
        if dz == 0:
            break
        step = fz / dz
        z = z - step
        if abs(step) <= 1e-15 * max(1.0, abs(z)):
            return z, True
    scale = float(np.sum(np.abs(coeffs) * abs(z) ** np.arange(coeffs.size)))
    return z, abs(P.polyval(z, coeffs)) <= 1e-10 * scale


@dataclass(frozen=True)
class Pole:
    location: complex
    residue: float
    converged: bool = True


@dataclass(frozen=True)
class PoleZeroReport:
    poles: list[Pole]
    zeros: list[complex]
    froissart_pairs: list[tuple[complex, complex, float]] = field(default_factory=list)


def pole_zero_report(r: RationalApproximant, radius: float = math.inf,
                     froissart_tol: float = FROISSART_TOL) -> PoleZeroReport:
    """Denominator roots inside ``|z| <= radius`` with residues, plus Froissart doublets."""
    den = np.trim_zeros(r.den, "b")
    num = np.trim_zeros(r.num, "b")
    dden = P.polyder(den) if den.size > 1 else np.zeros(1)
    poles: list[Pole] = []
    for z in polynomial_roots(den):
        z, ok = _polish(den, complex(z))
        if abs(z) > radius:
            continue
        dz = P.polyval(z, dden)
        res = abs(P.polyval(z, r.num) / dz) if dz != 0 else math.inf
        poles.append(Pole(complex(z), float(res), ok))
    zeros = [complex(_polish(num, complex(z))[0]) for z in polynomial_roots(num)] if num.size > 1 else []
    pairs = []
    for p in poles:
        if not zeros:
            break
        dist = [abs(p.location - z) for z in zeros]
        k = int(np.argmin(dist))
        if dist[k] < froissart_tol * max(1.0, abs(p.location)):
            pairs.append((p.location, zeros[k], float(dist[k])))
    poles.sort(key=lambda p: abs(p.location))
    return PoleZeroReport(poles, zeros, pairs)


def smooth_diagonal(f: PowerSeries, n: int) -> Callable:
    """Blend of the ``[n/n]`` and ``[n-1/n-1]`` approximants weighted by ``|q|**2``.

    Returns a function of a (real or complex) point.  On the real axis it is
    an ordinary weighted average of the two approximants.
    """
    if n < 1:
        raise InputError("smoothing needs n >= 1")
    hi = construct(f, n, n)
    lo = construct(f, n - 1, n - 1)

    def value(x):
        p1, q1 = P.polyval(x, hi.num), P.polyval(x, hi.den)
        p0, q0 = P.polyval(x, lo.num), P.polyval(x, lo.den)
        w = np.conj(q1) * q1 + np.conj(q0) * q0
        out = (np.conj(q1) * p1 + np.conj(q0) * p0) / w
        if np.isrealobj(x):
            return np.real(out)
        return out

    return value


@dataclass(frozen=True)
class BoundsReport:
    lower: float  # [n/n-1]
    diagonal: float  # [n/n]
    upper: float  # [n/n+1]
    ordered: bool


def bounds_check(f: PowerSeries, n: int, x: float) -> BoundsReport:
    """Values of ``[n/n-1]``, ``[n/n]``, ``[n/n+1]`` at ``x`` and whether they are ordered."""
    if n < 1:
        raise InputError("bounds need n >= 1")
    lo = float(evaluate(construct(f, n, n - 1), x))
    mid = float(evaluate(construct(f, n, n), x))
    hi = float(evaluate(construct(f, n, n + 1), x))
    return BoundsReport(lo, mid, hi, bool(lo <= mid <= hi))
