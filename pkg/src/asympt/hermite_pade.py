"""Hermite-Padé implicit approximants and the localized soliton amplitude.

An implicit approximant is a polynomial

    F_p(eps, g) = sum_{m=1}^{p} sum_{k=0}^{m} C[m-k, k] eps**(m-k) g**k,  C[0, 1] = 1,

fitted so that ``F_p(eps, g_N(eps)) = O(eps**(N+1))``, with ``g = f - f(0)``.
Its ``p`` roots in ``g`` at fixed ``eps`` give all branches of ``f``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from numpy.polynomial import polynomial as P
from scipy.optimize import brentq, linear_sum_assignment

from .errors import (DegeneratePolynomial, InputError, InsufficientCoefficients, NoSignChange,
                     SingularSystem)
from .pade import RationalApproximant, construct, polynomial_roots
from .series_core import PowerSeries, SeriesKind

__all__ = [
    "ImplicitPoly",
    "unknown_count",
    "construct_implicit",
    "branches",
    "multiple_roots",
    "track_branches",
    "discriminant",
    "fold_points",
    "SolitonSeries",
    "soliton_series",
    "soliton_series_printed",
    "soliton_pade",
    "soliton_a0",
    "DEFAULT_BRACKETS",
    "NUMERICAL_A0",
]


def unknown_count(p: int) -> int:
    """Free coefficients of ``F_p`` once ``C[0, 1] = 1`` is pinned."""
    return (p * p + 3 * p - 2) // 2


def _monomials(p: int) -> list[tuple[int, int]]:
    return [(m - k, k) for m in range(1, p + 1) for k in range(m + 1)]


@dataclass(frozen=True, eq=False)
class ImplicitPoly:
    """Attributes:
        p: total degree.
        C: ``C[i, k]`` multiplies ``eps**i g**k`` (zero for ``i + k > p`` or ``i = k = 0``).
        shift: ``f(0)``; the polynomial acts on ``g = f - shift``.
        rank_deficiency: dimension of the solution family the fit chose from
            (0 when the coefficients are unique).
    """

    p: int
    C: np.ndarray
    shift: float = 0.0
    rank_deficiency: int = 0

    def coefficients_in_f(self, eps) -> np.ndarray:
        """Coefficients (low to high) of ``F(eps, .)`` as a polynomial in ``g``."""
        powers = np.asarray(eps) ** np.arange(self.p + 1)
        return powers @ self.C

    def __call__(self, eps, f):
        eps, g = np.broadcast_arrays(np.asarray(eps), np.asarray(f) - self.shift)
        return P.polyval2d(eps, g, self.C)

    def to_json(self) -> dict:
        terms = [{"eps_power": i, "f_power": k, "coeff": float(self.C[i, k])}
                 for i, k in _monomials(self.p) if self.C[i, k] != 0.0]
        return {"schema": 1, "p": self.p, "shift": self.shift, "terms": terms}


def _power_series_table(g: np.ndarray, p: int, order: int) -> list[np.ndarray]:
    out = [np.zeros(order + 1)]
    out[0][0] = 1.0
    for _ in range(p):
        out.append(np.convolve(out[-1], g)[: order + 1])
    return out


def construct_implicit(f: PowerSeries, p: int) -> ImplicitPoly:
    """Fit ``F_p`` to the first ``N = unknown_count(p)`` orders of ``f``.

    The homogeneous conditions are solved with ``C[0, 1] = 1`` pinned and the
    least-norm choice among any remaining freedom.

    Raises:
        InsufficientCoefficients: ``f`` is shorter than order ``N``.
        SingularSystem: the conditions cannot be satisfied.
    """
    if p < 2:
        raise InputError("implicit approximants need p >= 2")
    if f.kind != SeriesKind.AT_ZERO:
        raise InputError("implicit approximants are built from expansions about zero")
    N = unknown_count(p)
    if f.order < N:
        raise InsufficientCoefficients(f"p={p} needs coefficients through order {N}")
    g = f.coeffs[: N + 1].copy()
    shift = float(g[0])
    g[0] = 0.0
    gk = _power_series_table(g, p, N)
    free = [mk for mk in _monomials(p) if mk != (0, 1)]
    cols = []
    for i, k in free:
        col = np.zeros(N + 1)
        col[i:] = gk[k][: N + 1 - i]
        cols.append(col[1:])
    a_mat = np.column_stack(cols)
    rhs = -gk[1][1:]
    x, _, rank, _ = np.linalg.lstsq(a_mat, rhs, rcond=None)
    scale = max(1.0, float(np.max(np.abs(g))) ** p) * max(1.0, float(np.max(np.abs(x))))
    if np.max(np.abs(a_mat @ x - rhs)) > 1e-9 * scale:
        raise SingularSystem("implicit approximant conditions are inconsistent")
    C = np.zeros((p + 1, p + 1))
    C[0, 1] = 1.0
    for (i, k), v in zip(free, x):
        C[i, k] = v
    C[np.abs(C) < 1e-14 * np.max(np.abs(C))] = 0.0
    return ImplicitPoly(p, C, shift, int(len(free) - rank))


def branches(F: ImplicitPoly, eps) -> np.ndarray:
    """All roots ``f`` of ``F(eps, f) = 0``, sorted by real then imaginary part."""
    coeffs = F.coefficients_in_f(eps)
    if not np.any(np.abs(coeffs) > 1e-14 * np.max(np.abs(F.C))):
        raise DegeneratePolynomial(f"F(eps={eps}, .) vanishes identically")
    roots = polynomial_roots(coeffs) + F.shift
    roots = np.where(np.abs(roots.imag) <= 1e-12 * np.maximum(1.0, np.abs(roots)), roots.real, roots)
    roots = roots[np.lexsort((roots.imag, roots.real))]
    return roots.real if np.all(roots.imag == 0) else roots


def multiple_roots(roots: np.ndarray, tol: float = 1e-6) -> np.ndarray:
    """Flag roots that coincide with another root within ``tol`` (relative)."""
    flags = np.zeros(roots.size, dtype=bool)
    for i in range(roots.size):
        for j in range(i + 1, roots.size):
            if abs(roots[i] - roots[j]) <= tol * max(1.0, abs(roots[i])):
                flags[i] = flags[j] = True
    return flags


def track_branches(F: ImplicitPoly, eps_grid) -> np.ndarray:
    """Roots along ``eps_grid`` with columns ordered by continuity.

    Row ``i`` holds the branches at ``eps_grid[i]``; each column follows one
    branch, matched to the previous row by minimal total displacement.
    """
    eps_grid = np.asarray(eps_grid, dtype=float)
    rows = [branches(F, eps_grid[0]).astype(complex)]
    for e in eps_grid[1:]:
        cur = branches(F, e).astype(complex)
        prev = rows[-1]
        if cur.size != prev.size:
            raise DegeneratePolynomial(f"number of branches changes at eps={e}")
        cost = np.abs(prev[:, None] - cur[None, :])
        _, perm = linear_sum_assignment(cost)
        rows.append(cur[perm])
    return np.array(rows)


def discriminant(F: ImplicitPoly, eps) -> float:
    """Discriminant of ``F(eps, .)`` in ``f``; it vanishes where branches meet."""
    c = np.trim_zeros(F.coefficients_in_f(eps), "b")
    d = c.size - 1
    if d < 1:
        raise DegeneratePolynomial("polynomial in f has degree < 1")
    if d == 1:
        return 1.0
    if d == 2:
        return float(c[1] ** 2 - 4 * c[2] * c[0])
    r = polynomial_roots(c)
    prod = np.prod([(r[i] - r[j]) ** 2 for i in range(d) for j in range(i + 1, d)])
    return float(np.real(c[-1] ** (2 * d - 2) * prod))


def fold_points(F: ImplicitPoly, lo: float, hi: float, samples: int = 400) -> list[float]:
    """Real ``eps`` in ``[lo, hi]`` where the discriminant changes sign."""
    grid = np.linspace(lo, hi, samples)
    vals = np.array([discriminant(F, e) for e in grid])
    out = []
    for i in range(samples - 1):
        if vals[i] == 0.0:
            out.append(float(grid[i]))
        elif vals[i] * vals[i + 1] < 0:
            out.append(float(brentq(lambda e: discriminant(F, e), grid[i], grid[i + 1], xtol=1e-14)))
    return out


# -- localized soliton ---------------------------------------------------------

# numerical amplitude of the ground-state solution
NUMERICAL_A0 = 2.206208

# brackets isolating the physical root of the top numerator coefficient
DEFAULT_BRACKETS = {1: (1.5, 2.0), 2: (2.1, 2.3), 3: (2.205, 2.22), 4: (2.21, 2.22)}


@dataclass(frozen=True, eq=False)
class SolitonSeries:
    """``phi(xi) = A0 + sum_j C[j] xi**(2j)``; ``C[0] = A0``."""

    A0: float
    C: np.ndarray

    def in_xi_squared(self) -> PowerSeries:
        return PowerSeries(self.C)


def soliton_series(A0: float, terms: int = 6) -> SolitonSeries:
    """Maclaurin coefficients of ``phi'' + phi'/xi - phi + phi**3 = 0``, ``phi(0) = A0``.

    In ``t = xi**2`` the equation gives ``4 (j+1)**2 d_{j+1} = d_j - (phi**3)_j``.
    ``terms`` counts the coefficients after ``A0``.
    """
    if terms < 0:
        raise InputError("terms must be non-negative")
    d = np.zeros(terms + 1)
    d[0] = A0
    for j in range(terms):
        sq = np.convolve(d[: j + 1], d[: j + 1])[: j + 1]
        cube_j = float(np.dot(sq[: j + 1], d[j::-1]))
        d[j + 1] = (d[j] - cube_j) / (4.0 * (j + 1) ** 2)
    return SolitonSeries(float(A0), d)


def soliton_series_printed(A0: float) -> SolitonSeries:
    """``C_2 .. C_12`` from the closed-form list as commonly printed.

    Several entries disagree with the differential equation; use
    :func:`soliton_series` for computation.
    """
    ct = 1.0 - 3.0 * A0 ** 2
    c2 = 0.25 * A0 * (1.0 - A0 ** 2)
    c4 = 0.25 * c2 * ct
    c6 = c4 / 6.0 - 3.0 * A0 ** 2 * ct ** 2 / 16.0
    c8 = (ct * c6 - 6.0 * A0 * c2 * c4 - c2 ** 3) / 64.0
    c10 = -0.01 * (ct * c8 + 6.0 * A0 * c2 * c6 + 3.0 * A0 * c4 ** 2 + 3.0 * c2 ** 2 * c4)
    c12 = -(-ct * c10 + 6.0 * A0 * c2 * c8 + 6.0 * A0 * c4 * c6 + 3.0 * c2 * c4 ** 2) / 144.0
    return SolitonSeries(float(A0), np.array([A0, c2, c4, c6, c8, c10, c12]))


def soliton_pade(A0: float, N: int) -> RationalApproximant:
    """``[N/N]`` Padé approximant in ``t = xi**2`` of the soliton series."""
    if N < 1:
        raise InputError("N must be at least 1")
    return construct(soliton_series(A0, 2 * N).in_xi_squared(), N, N)


def _top_numerator(A0: float, N: int) -> float:
    return float(soliton_pade(A0, N).num[N])


def soliton_a0(N: int, bracket: tuple[float, float] | None = None) -> float:
    """Amplitude ``A0`` for which the ``[N/N]`` approximant decays at infinity.

    The decay condition is a vanishing top numerator coefficient with a
    non-vanishing top denominator coefficient.

    Raises:
        NoSignChange: the bracket does not isolate a root.
        SingularSystem: the top denominator coefficient also vanishes.
    """
    if bracket is None:
        if N not in DEFAULT_BRACKETS:
            raise InputError(f"no default bracket for N={N}; pass one explicitly")
        bracket = DEFAULT_BRACKETS[N]
    lo, hi = bracket
    f_lo, f_hi = _top_numerator(lo, N), _top_numerator(hi, N)
    if f_lo * f_hi > 0:
        raise NoSignChange(f"top numerator coefficient has no sign change on [{lo}, {hi}]")
    root = brentq(_top_numerator, lo, hi, args=(N,), xtol=1e-13, rtol=4 * np.finfo(float).eps)
    pa = soliton_pade(root, N)
    if abs(pa.den[N]) <= 1e-10 * np.max(np.abs(pa.den)):
        raise SingularSystem("top denominator coefficient vanishes with the numerator one")
    return float(root)
