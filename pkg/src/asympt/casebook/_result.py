"""Common result record for worked cases."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

import numpy as np


class Provenance(str, enum.Enum):
    PUBLISHED = "published"  # value quoted from the published study
    DERIVED = "derived"  # computed by an independent oracle
    TRIVIAL = "trivial"  # follows by inspection


@dataclass(frozen=True)
class Reference:
    value: float
    provenance: Provenance
    tolerance: float | None = None
    note: str = ""


@dataclass
class CaseResult:
    """Computed quantities of a case, the references they are judged against
    and optional plot data as named arrays."""

    case_id: str
    computed: dict[str, float] = field(default_factory=dict)
    references: dict[str, Reference] = field(default_factory=dict)
    data: dict[str, np.ndarray] = field(default_factory=dict)

    def deviation(self, key: str) -> float:
        """``|computed - ref| / |ref|`` (absolute difference when ``ref == 0``)."""
        ref = self.references[key].value
        diff = abs(self.computed[key] - ref)
        return diff / abs(ref) if ref != 0 else diff

    @property
    def deviations(self) -> dict[str, float]:
        return {k: self.deviation(k) for k in self.references if k in self.computed}

    def within(self, key: str) -> bool:
        """Whether ``key`` meets its reference's absolute tolerance."""
        ref = self.references[key]
        if ref.tolerance is None:
            raise KeyError(f"reference {key!r} has no tolerance")
        return abs(self.computed[key] - ref.value) <= ref.tolerance

    def to_json(self) -> dict:
        def num(v: float):
            return v if math.isfinite(v) else str(v)

        return {
            "schema": 1,
            "case": self.case_id,
            "computed": {k: num(float(v)) for k, v in self.computed.items()},
            "references": {
                k: {"value": r.value, "provenance": r.provenance.value, "tolerance": r.tolerance,
                    "note": r.note}
                for k, r in self.references.items()
            },
            "deviations": {k: num(v) for k, v in self.deviations.items()},
        }
