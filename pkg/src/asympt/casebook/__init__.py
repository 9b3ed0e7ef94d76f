"""Worked studies pairing series generators, method calls and reference values."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Any, Callable

from ..errors import InputError
from ._result import CaseResult, Provenance, Reference
from .blowup import blowup
from .bvp import bvp_aef
from .conductivity import Array, conductivity
from .dispersion import dispersion
from .laplace import laplace_k0, laplace_tppa
from .oscillator import oscillator_period
from .padeon import padeon
from .quintic import quintic_root
from .schrodinger import schrodinger_aef
from .vdp import vdp_period

__all__ = ["CaseResult", "Provenance", "Reference", "CaseSpec", "Param", "CASES", "run_case",
           "quintic_root", "oscillator_period", "vdp_period", "laplace_tppa", "laplace_k0",
           "schrodinger_aef", "conductivity", "dispersion", "padeon", "blowup", "bvp_aef"]


@dataclass(frozen=True)
class Param:
    name: str
    type: Callable[[str], Any]
    default: Any
    help: str
    choices: tuple | None = None


@dataclass(frozen=True)
class CaseSpec:
    func: Callable[..., CaseResult]
    summary: str
    params: tuple[Param, ...] = field(default_factory=tuple)


CASES: dict[str, CaseSpec] = {
    "quintic": CaseSpec(quintic_root, "real root of x^5 + x = 1 by four embeddings"),
    "oscillator": CaseSpec(oscillator_period, "period of x'' + x^n = 0",
                           (Param("n", int, 3, "odd exponent"),)),
    "vdp": CaseSpec(vdp_period, "Van der Pol period by two-point Padé",
                    (Param("eps", float, 10.0, "nonlinearity parameter"),)),
    "laplace-tppa": CaseSpec(laplace_tppa, "two-point inversion of (1+t^2)^(-1/2)"),
    "laplace-k0": CaseSpec(laplace_k0, "inversion of the K0 transform"),
    "schrodinger": CaseSpec(schrodinger_aef, "ground state of a power-law well",
                            (Param("N", int, 10, "potential exponent x^(2N)"),)),
    "conductivity": CaseSpec(conductivity, "cubic arrays of conducting spheres",
                             (Param("array", str, "SC", "lattice", tuple(a.value for a in Array)),
                              Param("c", float, 0.3, "volume fraction"))),
    "dispersion": CaseSpec(dispersion, "chain dispersion against continuum models",
                           (Param("kh", float, math.pi, "wavenumber times spacing"),)),
    "padeon": CaseSpec(padeon, "sech solution from its quasilinear series"),
    "blowup": CaseSpec(blowup, "blow-up time as a Padé pole",
                       (Param("alpha", float, 0.1, "linear rate"),
                        Param("eps", float, 0.01, "quadratic rate"))),
    "bvp": CaseSpec(bvp_aef, "Airy-type boundary layer by an equivalent function",
                    (Param("eps", float, 0.1, "small parameter"),)),
}


def run_case(case_id: str, **params: Any) -> CaseResult:
    """Run a registered case with optional parameter overrides."""
    try:
        spec = CASES[case_id]
    except KeyError:
        raise InputError(f"unknown case {case_id!r}; known: {', '.join(CASES)}") from None
    known = {p.name for p in spec.params}
    extra = set(params) - known
    if extra:
        raise InputError(f"case {case_id!r} takes no parameter(s) {sorted(extra)}")
    return spec.func(**params)
