from __future__ import annotations

import math

import numpy as np
import pytest

from asympt.series_core import PowerSeries


@pytest.fixture
def geometric() -> PowerSeries:
    return PowerSeries(np.ones(12))


@pytest.fixture
def exp_series() -> PowerSeries:
    return PowerSeries([1.0 / math.factorial(k) for k in range(14)])


@pytest.fixture
def stieltjes() -> PowerSeries:
    """``sum (-1)^k k! eps^k``, the expansion of ``int e^-t / (1 + eps t) dt``."""
    return PowerSeries([(-1) ** k * math.factorial(k) for k in range(16)])
