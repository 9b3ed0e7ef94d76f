"""Regular C-fractions ``a + c_0/(1 + c_1 x/(1 + c_2 x/(1 + ...)))``.

Coefficients come from the quotient-difference (QD) scheme.  A fraction
whose remaining coefficients vanish terminates exactly; a zero pivot with
non-vanishing data is a breakdown, recorded on the result.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import Breakdown, EvaluationBreakdown, InputError, InsufficientCoefficients
from .series_core import PowerSeries, SeriesKind

__all__ = ["CFraction", "from_series", "evaluate", "convergents"]

QD_TINY = 1e-13


@dataclass(frozen=True, eq=False)
class CFraction:
    """Attributes:
        a: additive head.
        c: partial-numerator coefficients ``c_0 .. c_N``.
        terminated: the tail after ``c_N`` is identically zero.
        breakdown_index: first coefficient index the QD scheme could not form.
    """

    a: float
    c: np.ndarray
    terminated: bool = False
    breakdown_index: int | None = None

    def __post_init__(self):
        c = np.array(self.c, dtype=float).ravel()
        if c.size == 0 or not np.all(np.isfinite(c)) or not np.isfinite(self.a):
            raise InputError("C-fraction coefficients must be finite and non-empty")
        c.setflags(write=False)
        object.__setattr__(self, "c", c)

    @property
    def depth(self) -> int:
        return self.c.size - 1

    def __call__(self, x, depth: int | None = None):
        return evaluate(self, x, depth)


def from_series(f: PowerSeries, depth: int, strict: bool = False) -> CFraction:
    """C-fraction whose depth-``d`` truncation matches ``f`` through order ``d``.

    Args:
        f: series about zero with ``c_0 != 0``.
        depth: number of partial numerators after ``c_0``.
        strict: raise :class:`Breakdown` instead of returning a shortened fraction.
    """
    if f.kind != SeriesKind.AT_ZERO:
        raise InputError("C-fractions are built from expansions about zero")
    if depth < 0:
        raise InputError("depth must be non-negative")
    if f.order < depth:
        raise InsufficientCoefficients(f"depth {depth} needs {depth + 1} coefficients")
    if f.coeffs[0] == 0:
        raise InputError("C-fraction needs c_0 != 0")
    u = f.coeffs[: depth + 1] / f.coeffs[0]
    c = [float(f.coeffs[0])]
    if depth == 0:
        return CFraction(0.0, c)

    def stop(index: int, exact: bool) -> CFraction:
        if not exact and strict:
            raise Breakdown(f"QD pivot vanished at coefficient {index}")
        return CFraction(0.0, c, terminated=exact, breakdown_index=None if exact else index)

    if np.all(np.abs(u[1:]) <= QD_TINY * np.max(np.abs(u))):
        return stop(1, True)
    if np.any(np.abs(u[:-1]) <= QD_TINY * np.max(np.abs(u))):
        return stop(1, False)
    q = u[1:] / u[:-1]  # q_1^{(n)}, n = 0 .. depth-1
    e = np.zeros(q.size + 1)  # e_0^{(n)}
    c.append(-float(q[0]))
    for j in range(2, depth + 1):
        if j % 2 == 0:
            # e_k^{(n)} = q_k^{(n+1)} - q_k^{(n)} + e_{k-1}^{(n+1)}
            new = q[1:] - q[:-1] + e[1:q.size]
            scale = np.maximum.reduce([np.abs(q[1:]), np.abs(q[:-1]), np.abs(e[1:q.size])])
            new = np.where(np.abs(new) <= QD_TINY * scale, 0.0, new)
            e = new
            val = e[0]
        else:
            # q_{k+1}^{(n)} = q_k^{(n+1)} e_k^{(n+1)} / e_k^{(n)}
            if np.any(e[:-1] == 0.0):
                return stop(j, False)
            q = q[1:e.size] * e[1:] / e[:-1]
            val = q[0]
        if np.all((e if j % 2 == 0 else q) == 0.0):
            return stop(j, True)
        c.append(-float(val))
    return CFraction(0.0, c)


def evaluate(cf: CFraction, x, depth: int | None = None):
    """Bottom-up evaluation of the fraction truncated at ``depth``."""
    depth = cf.depth if depth is None else int(depth)
    if depth < 0:
        raise InputError("depth must be non-negative")
    depth = min(depth, cf.depth) if cf.terminated else depth
    if depth > cf.depth:
        raise InsufficientCoefficients(f"fraction has depth {cf.depth}, asked for {depth}")
    t = 1.0
    for k in range(depth, 0, -1):
        if abs(t) < 1e-300:
            raise EvaluationBreakdown(f"denominator underflow at level {k}")
        term = cf.c[k] * x
        t = 1.0 + term / t
        if abs(t) <= 1e-14 * max(1.0, abs(term)):
            raise EvaluationBreakdown(f"denominator cancels at level {k}")
    return cf.a + cf.c[0] / t


def convergents(cf: CFraction, x, max_depth: int | None = None) -> np.ma.MaskedArray:
    """Values at depths ``0 .. max_depth``; entries that break down are masked."""
    max_depth = cf.depth if max_depth is None else int(max_depth)
    vals = np.zeros(max_depth + 1)
    mask = np.zeros(max_depth + 1, dtype=bool)
    for d in range(max_depth + 1):
        try:
            vals[d] = evaluate(cf, x, d)
        except EvaluationBreakdown:
            vals[d], mask[d] = np.nan, True
    return np.ma.MaskedArray(vals, mask=mask)
