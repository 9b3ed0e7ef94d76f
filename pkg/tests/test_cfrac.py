from __future__ import annotations

import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st
from scipy.integrate import quad

from asympt import cfrac
from asympt.errors import (Breakdown, EvaluationAtPole, EvaluationBreakdown, InputError,
                           InsufficientCoefficients, SingularSystem)
from asympt.pade import construct
from asympt.series_core import PowerSeries


def stieltjes_value(x: float) -> float:
    return quad(lambda t: math.exp(-t) / (1.0 + x * t), 0.0, math.inf, epsabs=1e-14)[0]


class TestFromSeries:
    def test_stieltjes_coefficients(self, stieltjes):
        cf = cfrac.from_series(stieltjes, 10)
        expected = [1.0] + [float((i + 1) // 2) for i in range(1, 11)]
        assert cf.a == 0.0
        assert np.allclose(cf.c, expected, rtol=1e-10)

    def test_geometric_terminates(self, geometric):
        cf = cfrac.from_series(geometric, 5)
        assert cf.terminated and cf.breakdown_index is None
        assert np.array_equal(cf.c, [1.0, -1.0])

    def test_exp(self, exp_series):
        cf = cfrac.from_series(exp_series, 4)
        assert abs(cf(0.5) - math.exp(0.5)) < 3e-4

    def test_depth_zero(self, exp_series):
        cf = cfrac.from_series(exp_series, 0)
        assert cf.depth == 0 and cf(0.3) == 1.0

    def test_breakdown_recorded(self):
        # 1 + x**2: the first QD quotient divides by c_1 = 0
        f = PowerSeries([1.0, 0.0, 1.0, 0.0, 1.0])
        cf = cfrac.from_series(f, 4)
        assert cf.breakdown_index == 1 and not cf.terminated
        with pytest.raises(Breakdown):
            cfrac.from_series(f, 4, strict=True)

    def test_errors(self, exp_series):
        with pytest.raises(InputError):
            cfrac.from_series(PowerSeries([0.0, 1.0, 2.0]), 2)
        with pytest.raises(InsufficientCoefficients):
            cfrac.from_series(PowerSeries([1.0, 1.0]), 3)
        with pytest.raises(InputError):
            cfrac.from_series(exp_series, -1)
        with pytest.raises(InputError):
            cfrac.from_series(PowerSeries([1.0, 1.0], "at_infinity"), 1)

    def test_frozen(self, exp_series):
        cf = cfrac.from_series(exp_series, 3)
        with pytest.raises(ValueError):
            cf.c[0] = 2.0


class TestEvaluate:
    def test_depth_zero_is_head(self):
        cf = cfrac.CFraction(0.5, [2.0, 3.0])
        assert cfrac.evaluate(cf, 7.0, 0) == 2.5

    def test_stieltjes_depth_eight(self, stieltjes):
        cf = cfrac.from_series(stieltjes, 8)
        assert abs(cf(0.1) - stieltjes_value(0.1)) < 1e-4

    def test_geometric(self, geometric):
        assert cfrac.from_series(geometric, 3)(0.5) == 2.0

    def test_terminated_depth_clipped(self, geometric):
        cf = cfrac.from_series(geometric, 5)
        assert cfrac.evaluate(cf, 0.5, 5) == 2.0

    def test_too_deep(self):
        with pytest.raises(InsufficientCoefficients):
            cfrac.evaluate(cfrac.CFraction(0.0, [1.0, 1.0]), 0.5, 3)

    def test_breakdown(self):
        # 1 + (-1)(1)/1 = 0 at the bottom level
        with pytest.raises(EvaluationBreakdown):
            cfrac.evaluate(cfrac.CFraction(0.0, [1.0, -1.0]), 1.0, 1)


class TestConvergents:
    def test_stieltjes_interlace(self, stieltjes):
        cf = cfrac.from_series(stieltjes, 8)
        conv = cfrac.convergents(cf, 0.1)
        exact = stieltjes_value(0.1)
        above = conv[1:] > exact
        # successive convergents fall on alternate sides of the integral
        assert np.all(above[1:] != above[:-1])

    def test_constant(self):
        conv = cfrac.convergents(cfrac.CFraction(0.0, [4.0, 0.0, 0.0]), 0.7)
        assert np.array_equal(conv, [4.0, 4.0, 4.0])

    def test_masked_breakdown(self):
        conv = cfrac.convergents(cfrac.CFraction(0.0, [1.0, -1.0, 0.5]), 1.0)
        assert list(conv.mask) == [False, True, False]

    def test_staircase(self, stieltjes):
        cf = cfrac.from_series(stieltjes, 9)
        conv = cfrac.convergents(cf, 0.3)
        for d in range(10):
            ref = construct(stieltjes, d // 2, d - d // 2)(0.3)
            assert conv[d] == pytest.approx(ref, rel=1e-9)


# -- properties -------------------------------------------------------------------

coef = st.floats(-1.0, 1.0).filter(lambda v: abs(v) > 0.05)


def _expand(cf: cfrac.CFraction, order: int) -> np.ndarray:
    """Maclaurin coefficients of the fraction in exact rational arithmetic."""
    num, den = [Fraction(1)], [Fraction(1)]
    for k in range(cf.depth, 0, -1):
        # t_k = 1 + c_k x / t_{k+1} with t_{k+1} = num/den
        ck = Fraction(float(cf.c[k]))
        new = [Fraction(0)] * max(len(num), len(den) + 1)
        for i, v in enumerate(num):
            new[i] += v
        for i, v in enumerate(den):
            new[i + 1] += ck * v
        num, den = new, num
    num += [Fraction(0)] * (order + 1)
    den += [Fraction(0)] * (order + 1)
    out: list[Fraction] = []
    for k in range(order + 1):
        out.append((den[k] - sum(num[j] * out[k - j] for j in range(1, k + 1))) / num[0])
    return np.array([float(Fraction(float(cf.c[0])) * v) for v in out])


@settings(max_examples=60, deadline=None)
@given(st.lists(coef, min_size=7, max_size=7), st.integers(1, 6))
def test_contact(c, depth):
    f = PowerSeries(c)
    cf = cfrac.from_series(f, depth)
    assume(cf.breakdown_index is None and not cf.terminated)
    assume(np.max(np.abs(cf.c)) < 1e3)
    back = _expand(cf, depth)
    assert np.allclose(back, f.coeffs[: depth + 1], rtol=1e-9, atol=1e-12)


@settings(max_examples=40, deadline=None)
@given(st.lists(coef, min_size=7, max_size=7), st.floats(-0.5, 0.5), st.integers(1, 6))
def test_matches_pade_staircase(c, x, depth):
    f = PowerSeries(c)
    cf = cfrac.from_series(f, depth)
    assume(cf.breakdown_index is None and not cf.terminated)
    try:
        ref = construct(f, depth // 2, depth - depth // 2)(x)
        val = cf(x)
    except (SingularSystem, EvaluationBreakdown, EvaluationAtPole):
        assume(False)
    assume(abs(ref) < 1e4)
    assert val == pytest.approx(float(ref), rel=1e-8, abs=1e-8)
