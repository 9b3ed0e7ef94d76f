"""Summation, acceleration and two-point matching of truncated asymptotic series."""

__version__ = "0.1.0"

from . import (accel, baryinterp, cfrac, domb_sykes, fourier_pade, hermite_pade,  # noqa: E402
               pade, series_core, two_point)
from .series_core import PowerSeries, SeriesKind  # noqa: E402

__all__ = ["PowerSeries", "SeriesKind", "__version__", "accel", "baryinterp", "cfrac",
           "domb_sykes", "fourier_pade", "hermite_pade", "pade", "series_core", "two_point"]
