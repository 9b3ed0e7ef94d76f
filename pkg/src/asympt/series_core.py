"""Truncated power series with explicit trusted-order bookkeeping.

A :class:`PowerSeries` holds ``c_0 .. c_N`` of an expansion either about
``eps = 0`` (``kind="at_zero"``) or about ``eps = inf`` in the reciprocal
variable (``kind="at_infinity"``, coefficients of ``eps**-i``).  Every
operation returns a series whose order is no larger than the orders of its
inputs, so truncation is never silently extended.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

import numpy as np

from .errors import InputError, InsufficientCoefficients, KindMismatch, NumericalError

__all__ = [
    "SeriesKind",
    "PowerSeries",
    "SingularityModel",
    "ExtractionRule",
    "add",
    "mul",
    "scale",
    "divide",
    "reciprocal",
    "compose",
    "revert",
    "power",
    "log",
    "exp",
    "euler_transform",
    "inverse_euler_transform",
    "extract_singularity",
    "solve_series",
    "binomial_series",
]


class SeriesKind(str, enum.Enum):
    AT_ZERO = "at_zero"
    AT_INFINITY = "at_infinity"


@dataclass(frozen=True, eq=False)
class PowerSeries:
    """Truncated real power series ``sum_{n<=order} coeffs[n] * var**n``."""

    coeffs: np.ndarray
    kind: SeriesKind = SeriesKind.AT_ZERO

    def __post_init__(self):
        c = np.array(self.coeffs, dtype=float).ravel()
        if c.size == 0:
            raise InputError("a series needs at least one coefficient")
        if not np.all(np.isfinite(c)):
            raise InputError("series coefficients must be finite")
        c.setflags(write=False)
        object.__setattr__(self, "coeffs", c)
        object.__setattr__(self, "kind", SeriesKind(self.kind))

    # -- construction helpers -------------------------------------------------

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[float], kind: SeriesKind | str = SeriesKind.AT_ZERO) -> PowerSeries:
        return cls(np.asarray(list(coeffs), dtype=float), SeriesKind(kind))

    @classmethod
    def variable(cls, order: int, kind: SeriesKind | str = SeriesKind.AT_ZERO) -> PowerSeries:
        """The identity series ``eps`` trusted through ``order``."""
        if order < 1:
            raise InputError("the identity series needs order >= 1")
        c = np.zeros(order + 1)
        c[1] = 1.0
        return cls(c, SeriesKind(kind))

    @classmethod
    def constant(cls, value: float, order: int, kind: SeriesKind | str = SeriesKind.AT_ZERO) -> PowerSeries:
        c = np.zeros(order + 1)
        c[0] = value
        return cls(c, SeriesKind(kind))

    @classmethod
    def from_function(cls, gen: Callable[[int], float], order: int,
                      kind: SeriesKind | str = SeriesKind.AT_ZERO) -> PowerSeries:
        return cls(np.array([gen(n) for n in range(order + 1)], dtype=float), SeriesKind(kind))

    # -- basic properties -----------------------------------------------------

    @property
    def order(self) -> int:
        return self.coeffs.size - 1

    def __len__(self) -> int:
        return self.coeffs.size

    def __getitem__(self, n: int) -> float:
        return float(self.coeffs[n])

    def __repr__(self) -> str:
        return f"PowerSeries({self.coeffs.tolist()!r}, kind={self.kind.value!r})"

    def truncate(self, order: int) -> PowerSeries:
        if order > self.order:
            raise InsufficientCoefficients(
                f"cannot extend a series of order {self.order} to order {order}")
        if order < 0:
            raise InputError("order must be non-negative")
        return PowerSeries(self.coeffs[: order + 1], self.kind)

    def __call__(self, x):
        """Partial sum at ``x`` (in the expansion variable; ``1/eps`` for at-infinity)."""
        return np.polynomial.polynomial.polyval(x, self.coeffs)

    def partial_sums(self, x: float) -> np.ndarray:
        """``S_0 .. S_N`` with ``S_n = sum_{k<=n} c_k x**k``."""
        return np.cumsum(self.coeffs * np.power(float(x), np.arange(self.coeffs.size)))

    def derivative(self) -> PowerSeries:
        if self.order == 0:
            return PowerSeries([0.0], self.kind)
        return PowerSeries(self.coeffs[1:] * np.arange(1, self.coeffs.size), self.kind)

    def allclose(self, other: PowerSeries, atol: float = 1e-12, rtol: float = 0.0) -> bool:
        n = min(self.order, other.order)
        return bool(np.allclose(self.coeffs[: n + 1], other.coeffs[: n + 1], atol=atol, rtol=rtol))

    # -- serialisation --------------------------------------------------------

    def to_json(self) -> dict:
        return {"kind": self.kind.value, "coeffs": [float(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, obj: dict) -> PowerSeries:
        if not isinstance(obj, dict) or "coeffs" not in obj:
            raise InputError("series JSON must be an object with a 'coeffs' array")
        kind = obj.get("kind", SeriesKind.AT_ZERO.value)
        try:
            kind = SeriesKind(kind)
        except ValueError:
            raise InputError(f"unknown series kind {kind!r}") from None
        coeffs = obj["coeffs"]
        if not isinstance(coeffs, list) or not all(isinstance(c, (int, float)) for c in coeffs):
            raise InputError("'coeffs' must be a list of numbers")
        return cls(np.asarray(coeffs, dtype=float), kind)

    # -- operators ------------------------------------------------------------

    def __add__(self, other):
        return add(self, other)

    __radd__ = __add__

    def __neg__(self) -> PowerSeries:
        return PowerSeries(-self.coeffs, self.kind)

    def __sub__(self, other):
        if isinstance(other, PowerSeries):
            return add(self, -other)
        return add(self, -float(other))

    def __rsub__(self, other):
        return add(-self, other)

    def __mul__(self, other):
        if isinstance(other, PowerSeries):
            return mul(self, other)
        return scale(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, PowerSeries):
            return divide(self, other)
        return scale(self, 1.0 / float(other))

    def __pow__(self, r):
        return power(self, r)


@dataclass(frozen=True)
class SingularityModel:
    """Modelled nearest singularity ``A (1 - eps/eps0)**alpha [* log(1 - eps/eps0)]``.

    The factor is normalised to equal one at the origin; any constant
    ``eps0**alpha`` belongs in ``amplitude``.
    """

    location: float
    exponent: float
    is_log: bool = False
    amplitude: float = 1.0

    def __post_init__(self):
        if self.location == 0 or not math.isfinite(self.location):
            raise InputError("singularity location must be finite and non-zero")
        if not math.isfinite(self.exponent):
            raise InputError("singularity exponent must be finite")


class ExtractionRule(str, enum.Enum):
    MULTIPLICATIVE = "multiplicative"
    ADDITIVE = "additive"


def _check_kind(a: PowerSeries, b: PowerSeries) -> None:
    if a.kind != b.kind:
        raise KindMismatch(f"cannot combine {a.kind.value} and {b.kind.value} series")


def add(a: PowerSeries, b: PowerSeries | float) -> PowerSeries:
    if not isinstance(b, PowerSeries):
        c = a.coeffs.copy()
        c[0] += float(b)
        return PowerSeries(c, a.kind)
    _check_kind(a, b)
    n = min(a.order, b.order)
    return PowerSeries(a.coeffs[: n + 1] + b.coeffs[: n + 1], a.kind)


def mul(a: PowerSeries, b: PowerSeries | float) -> PowerSeries:
    """Cauchy product truncated to the shared trusted order."""
    if not isinstance(b, PowerSeries):
        return scale(a, b)
    _check_kind(a, b)
    n = min(a.order, b.order)
    return PowerSeries(np.convolve(a.coeffs[: n + 1], b.coeffs[: n + 1])[: n + 1], a.kind)


def scale(a: PowerSeries, factor: float) -> PowerSeries:
    return PowerSeries(a.coeffs * float(factor), a.kind)


def reciprocal(a: PowerSeries) -> PowerSeries:
    c = a.coeffs
    if c[0] == 0:
        raise NumericalError("reciprocal of a series with zero constant term")
    out = np.zeros_like(c)
    out[0] = 1.0 / c[0]
    for n in range(1, c.size):
        out[n] = -np.dot(c[1: n + 1], out[n - 1:: -1][:n]) / c[0]
    return PowerSeries(out, a.kind)


def divide(a: PowerSeries, b: PowerSeries) -> PowerSeries:
    """``a / b``; leading zeros of ``b`` are cancelled against ``a`` (order drops accordingly)."""
    _check_kind(a, b)
    nz = np.flatnonzero(b.coeffs)
    if nz.size == 0:
        raise NumericalError("division by the zero series")
    s = int(nz[0])
    if s:
        if np.any(a.coeffs[:s] != 0):
            raise NumericalError("quotient is not a power series (pole at the origin)")
        a = PowerSeries(a.coeffs[s:], a.kind) if a.order >= s else None
        b = PowerSeries(b.coeffs[s:], b.kind)
        if a is None:
            raise InsufficientCoefficients("numerator too short to cancel the denominator's zero")
    return mul(a, reciprocal(b))


def compose(f: PowerSeries, g: PowerSeries) -> PowerSeries:
    """``f(g(eps))`` for ``g(0) = 0`` by Horner nesting of truncated products."""
    _check_kind(f, g)
    if g.coeffs[0] != 0:
        raise InputError("inner series must vanish at the origin")
    n = min(f.order, g.order)
    g = g.truncate(n)
    result = PowerSeries.constant(f.coeffs[n], n, f.kind)
    for k in range(n - 1, -1, -1):
        result = add(mul(result, g), f.coeffs[k])
    return result


def revert(f: PowerSeries) -> PowerSeries:
    """Compositional inverse ``g`` with ``f(g(x)) = x`` (Newton iteration on formal series)."""
    c = f.coeffs
    if f.order < 1:
        raise InsufficientCoefficients("reversion needs at least c_0 and c_1")
    if c[0] != 0:
        raise InputError("reversion requires c_0 = 0")
    if c[1] == 0:
        raise NumericalError("reversion requires c_1 != 0 (map not invertible at the origin)")
    n = f.order
    x = PowerSeries.variable(n, f.kind)
    df = f.derivative()
    g = PowerSeries(np.concatenate([[0.0, 1.0 / c[1]], np.zeros(n - 1)]), f.kind)
    # each step doubles the number of correct coefficients
    for _ in range(int(math.ceil(math.log2(n + 1))) + 2):
        resid = compose(f, g) - x
        if not np.any(resid.coeffs):
            break
        slope = compose(PowerSeries(np.concatenate([df.coeffs, [0.0]]), f.kind), g)
        g = g - divide(resid, slope)
        g = PowerSeries(np.concatenate([[0.0], g.coeffs[1:]]), f.kind)
    return g


def power(f: PowerSeries, r: float) -> PowerSeries:
    """``f**r`` via the J. C. P. Miller recurrence (no log/exp round trip)."""
    c = f.coeffs
    r = float(r)
    is_int = r == int(r)
    if is_int and r >= 0:
        out = PowerSeries.constant(1.0, f.order, f.kind)
        for _ in range(int(r)):
            out = mul(out, f)
        return out
    if c[0] == 0:
        raise NumericalError("negative or fractional power of a series with zero constant term")
    if not is_int and c[0] < 0:
        raise InputError("fractional power needs a positive constant term")
    out = np.zeros_like(c)
    out[0] = c[0] ** r
    for n in range(1, c.size):
        k = np.arange(1, n + 1)
        out[n] = np.dot(((r + 1.0) * k - n) * c[1: n + 1], out[n - 1:: -1][:n]) / (n * c[0])
    return PowerSeries(out, f.kind)


def log(f: PowerSeries) -> PowerSeries:
    c = f.coeffs
    if c[0] <= 0:
        raise InputError("log needs a positive constant term")
    q = divide(f.derivative(), f.truncate(max(f.order - 1, 0))) if f.order else None
    out = np.zeros_like(c)
    out[0] = math.log(c[0])
    if q is not None:
        out[1:] = q.coeffs / np.arange(1, c.size)
    return PowerSeries(out, f.kind)


def exp(f: PowerSeries) -> PowerSeries:
    c = f.coeffs
    out = np.zeros_like(c)
    out[0] = math.exp(c[0])
    k = np.arange(1, c.size) * c[1:]
    for n in range(1, c.size):
        out[n] = np.dot(k[:n], out[n - 1:: -1][:n]) / n
    return PowerSeries(out, f.kind)


def binomial_series(alpha: float, a: float, order: int) -> PowerSeries:
    """Expansion of ``(1 + a*eps)**alpha`` by its ratio recurrence."""
    out = np.zeros(order + 1)
    out[0] = 1.0
    for n in range(1, order + 1):
        out[n] = out[n - 1] * (alpha - n + 1) / n * a
    return PowerSeries(out)


def _euler_map(order: int, eps0: float, kind: SeriesKind) -> PowerSeries:
    # eps = t / (1 + t/eps0)  for  t = eps / (1 - eps/eps0)
    c = np.zeros(order + 1)
    if order >= 1:
        c[1:] = (-1.0 / eps0) ** np.arange(order)
    return PowerSeries(c, kind)


def euler_transform(f: PowerSeries, eps0: float) -> PowerSeries:
    """Re-expand ``f`` in ``t = eps / (1 - eps/eps0)``, pushing ``eps = eps0`` to ``t = inf``."""
    if f.kind != SeriesKind.AT_ZERO:
        raise KindMismatch("Euler transform applies to expansions about zero")
    if eps0 == 0 or not math.isfinite(eps0):
        raise InputError("eps0 must be finite and non-zero")
    if f.order == 0:
        return f
    return compose(f, _euler_map(f.order, eps0, f.kind))


def inverse_euler_transform(h: PowerSeries, eps0: float) -> PowerSeries:
    """Undo :func:`euler_transform`: substitute ``t = eps / (1 - eps/eps0)``."""
    if eps0 == 0 or not math.isfinite(eps0):
        raise InputError("eps0 must be finite and non-zero")
    if h.order == 0:
        return h
    c = np.zeros(h.order + 1)
    c[1:] = (1.0 / eps0) ** np.arange(h.order)
    return compose(h, PowerSeries(c, h.kind))


def _model_series(s: SingularityModel, order: int) -> PowerSeries:
    base = binomial_series(s.exponent, -1.0 / s.location, order)
    if s.is_log:
        lg = np.zeros(order + 1)
        n = np.arange(1, order + 1)
        lg[1:] = -((1.0 / s.location) ** n) / n
        base = mul(base, PowerSeries(lg))
    return base


def extract_singularity(f: PowerSeries, s: SingularityModel,
                        rule: ExtractionRule | str = ExtractionRule.MULTIPLICATIVE) -> PowerSeries:
    """Remove a modelled singular factor (multiplicative) or term (additive) from ``f``."""
    rule = ExtractionRule(rule)
    if f.kind != SeriesKind.AT_ZERO:
        raise KindMismatch("singularity extraction applies to expansions about zero")
    model = _model_series(s, f.order)
    if rule is ExtractionRule.MULTIPLICATIVE:
        return divide(f, scale(model, s.amplitude))
    return f - scale(model, s.amplitude)


def solve_series(residual: Callable[[PowerSeries], PowerSeries],
                 derivative: Callable[[PowerSeries], PowerSeries],
                 initial: float | Sequence[float], order: int,
                 max_iter: int = 64) -> PowerSeries:
    """Newton iteration ``x <- x - G(x)/G'(x)`` on formal series of the given order.

    ``initial`` is the root of the leading-order problem (or a longer
    starting series).  Iteration stops when the update vanishes exactly or
    stops shrinking.
    """
    start = np.zeros(order + 1)
    init = np.atleast_1d(np.asarray(initial, dtype=float))
    start[: min(init.size, order + 1)] = init[: order + 1]
    x = PowerSeries(start)
    # quadratic convergence: a few sweeps past log2(order) reach round-off
    sweeps = min(max_iter, int(math.ceil(math.log2(order + 1))) + 6)
    for _ in range(sweeps):
        step = divide(residual(x), derivative(x))
        x = x - step
        if float(np.max(np.abs(step.coeffs))) <= 1e-15 * float(np.max(np.abs(x.coeffs))):
            break
    return x
