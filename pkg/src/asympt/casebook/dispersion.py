"""Dispersion of a mass-spring chain and of its continuum replacements."""

from __future__ import annotations

import math

import numpy as np

from ..errors import OutOfRange
from ._result import CaseResult, Provenance, Reference


def discrete(kh):
    """Exact chain frequency ``2|sin(kh/2)|`` (in units of ``sqrt(c/m)``)."""
    return 2.0 * np.abs(np.sin(0.5 * np.asarray(kh, dtype=float)))


def continuum(kh):
    return np.asarray(kh, dtype=float)


def higher_order(kh):
    """Sixth-order gradient model: ``kh sqrt(1 - (kh)^2/12 + (kh)^4/360)``."""
    k2 = np.asarray(kh, dtype=float) ** 2
    return np.sqrt(k2 * (1.0 - k2 / 12.0 + k2 * k2 / 360.0))


def quasicontinuum(kh):
    """Padé-regularised model: ``kh / sqrt(1 + (kh)^2/12)``."""
    kh = np.asarray(kh, dtype=float)
    return kh / np.sqrt(1.0 + kh * kh / 12.0)


MODELS = {"continuum": continuum, "higher_order": higher_order, "quasicontinuum": quasicontinuum}


def relative_error(model: str, kh):
    """``|model - discrete| / discrete``."""
    d = discrete(kh)
    return np.abs(MODELS[model](kh) - d) / d


def dispersion(kh: float = math.pi, points: int = 1000) -> CaseResult:
    if not 0.0 < kh <= math.pi:
        raise OutOfRange("kh must lie in (0, pi]")
    r = CaseResult("dispersion")
    r.computed["kh"] = kh
    r.computed["discrete"] = float(discrete(kh))
    for name in MODELS:
        r.computed[name] = float(MODELS[name](kh))
        r.computed[f"{name}_error"] = float(relative_error(name, kh))
    if kh == math.pi:
        r.references["quasicontinuum_error"] = Reference(
            abs(math.pi / math.sqrt(1.0 + math.pi ** 2 / 12.0) - 2.0) / 2.0, Provenance.DERIVED, 1e-6)
        r.references["continuum_error"] = Reference((math.pi - 2.0) / 2.0, Provenance.DERIVED, 1e-12)
    grid = np.linspace(math.pi / points, math.pi, points)
    eq, ec = relative_error("quasicontinuum", grid), relative_error("continuum", grid)
    r.computed["quasicontinuum_better_everywhere"] = float(np.all(eq < ec))
    r.references["quasicontinuum_better_everywhere"] = Reference(1.0, Provenance.DERIVED, 0.0)
    r.data.update(kh=grid, discrete=discrete(grid), continuum=continuum(grid),
                  higher_order=higher_order(grid), quasicontinuum=quasicontinuum(grid))
    return r
