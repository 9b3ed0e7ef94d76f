from __future__ import annotations

import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from asympt.errors import (InconsistentAsymptotics, InconsistentDegrees, InputError,
                           InsufficientCoefficients, SingularSystem)
from asympt.pade import RationalApproximant, construct
from asympt.series_core import PowerSeries
from asympt.two_point import TwoPointData, construct_tppa, rational_aef, sommerfeld_fit

LN2 = math.log(2.0)


def far(coeffs) -> PowerSeries:
    return PowerSeries(coeffs, "at_infinity")


def far_expansion(r: RationalApproximant, order: int) -> np.ndarray:
    """Coefficients ``d_i`` of ``eps**(n-m-i)`` as ``eps -> inf``."""
    return RationalApproximant(r.num[::-1], r.den[::-1]).maclaurin(order).coeffs


def vdp() -> TwoPointData:
    near = PowerSeries([2 * math.pi, 0.0, math.pi / 8, 0.0, -5 * math.pi / 1536])
    return TwoPointData(near, far([3 - 2 * LN2, 0.0]), k_zero=4, offset=1)


class TestConstruct:
    def test_vdp_period_at_ten(self):
        r = construct_tppa(vdp(), 3, 2)
        assert r(10.0) == pytest.approx(17.89, abs=0.01)

    def test_vdp_closed_form_b2(self):
        r = construct_tppa(vdp(), 3, 2)
        g = 3 - 2 * LN2
        assert r.num[0] == pytest.approx(2 * math.pi, rel=1e-14)
        assert r.den[2] == pytest.approx(math.pi ** 2 / (16 * (4 * g * g - math.pi ** 2)), rel=1e-12)

    def test_vdp_limits(self):
        r = construct_tppa(vdp(), 3, 2)
        assert r(1e-4) == pytest.approx(2 * math.pi * (1 + 1e-8 / 16), rel=1e-14)
        assert r(1e7) / 1e7 == pytest.approx(3 - 2 * LN2, rel=1e-6)

    def test_laplace(self):
        d = TwoPointData(PowerSeries([1.0, 0.0, -0.5]), far([1.0]), k_zero=3, offset=-1)
        r = construct_tppa(d, 1, 2)
        assert np.allclose(r.num, [1.0, 0.5], atol=1e-14)
        assert np.allclose(r.den, [1.0, 0.5, 0.5], atol=1e-14)

    def test_constant(self):
        d = TwoPointData(PowerSeries([3.0]), far([3.0]), k_zero=1, offset=0)
        r = construct_tppa(d, 0, 0)
        assert np.allclose(r(np.array([0.0, 0.7, 5.0, 1e6])), 3.0, rtol=1e-13)

    def test_inconsistent_degrees(self):
        with pytest.raises(InconsistentDegrees):
            construct_tppa(vdp(), 2, 2)

    def test_insufficient(self):
        d = TwoPointData(PowerSeries([1.0, 2.0]), far([1.0]), k_zero=3, offset=0)
        with pytest.raises(InsufficientCoefficients):
            construct_tppa(d, 1, 1)

    def test_k_too_large(self):
        d = TwoPointData(PowerSeries([1.0] * 8), far([1.0]), k_zero=5, offset=0)
        with pytest.raises(InputError):
            construct_tppa(d, 1, 1)

    def test_kinds_checked(self):
        with pytest.raises(InputError):
            TwoPointData(PowerSeries([1.0]), PowerSeries([1.0]), k_zero=1)
        with pytest.raises(InputError):
            TwoPointData(PowerSeries([1.0]), far([1.0]), k_zero=-1)

    def test_constant_degenerate_block(self):
        # [1/1] data of a constant form a consistent singular system
        d = TwoPointData(PowerSeries([3.0, 0.0]), far([3.0]), k_zero=2, offset=0)
        r = construct_tppa(d, 1, 1)
        assert np.allclose(r(np.array([0.0, 0.7, 5.0])), 3.0, rtol=1e-12)

    def test_gap_raises(self):
        # all conditions at zero: the [1/1] gap of 1 + e**2
        d = TwoPointData(PowerSeries([1.0, 0.0, 1.0]), far([1.0]), k_zero=3, offset=0)
        with pytest.raises(SingularSystem):
            construct_tppa(d, 1, 1)


class TestRationalAef:
    def test_integer_lattice_reduces_to_tppa(self):
        near = PowerSeries([1.0, -1.0, 1.0])
        g = rational_aef(near, far([1.0]), -1, [0], [0, 1])
        z = np.array([0.1, 1.0, 10.0])
        assert np.allclose(g(z), 1 / (1 + z), rtol=1e-13)

    def test_degenerate_block_is_consistent(self):
        # 1/(1+z) matches both ends with a lower degree, so [1/2] is singular
        # but consistent and returns the same function
        g = rational_aef(PowerSeries([1.0, -1.0, 1.0]), far([1.0]), -1, [0, 1], [0, 1, 2])
        z = np.array([0.1, 1.0, 10.0])
        assert np.allclose(g(z), 1 / (1 + z), rtol=1e-10)

    def test_linear_growth(self):
        g = rational_aef(PowerSeries([1.0, 1.0]), far([2.0, 0.0]), 1, [0, 1, 2], [0, 1])
        assert np.allclose(g.num_coeffs, [1.0, 2.0, 2.0]) and np.allclose(g.den_coeffs, [1.0, 1.0])
        assert g(1e-8) == pytest.approx(1 + 1e-8, rel=1e-14)
        assert g(1e8) / 1e8 == pytest.approx(2.0, rel=1e-7)

    def test_thirds(self):
        # (1 + z**(1/3))**-1 is matched exactly on a lattice in thirds
        near = PowerSeries([1.0, -1.0, 1.0])
        g = rational_aef(near, far([1.0]), Fraction(-1, 3), [0], [0, Fraction(1, 3)],
                         near_step=Fraction(1, 3), far_step=Fraction(1, 3))
        z = np.array([1e-3, 0.5, 8.0, 1e3])
        assert np.allclose(g(z), 1 / (1 + np.cbrt(z)), rtol=1e-12)
        assert g.den_powers == (Fraction(0), Fraction(1, 3))

    def test_inconsistent(self):
        with pytest.raises(InconsistentAsymptotics):
            rational_aef(PowerSeries([1.0, 1.0]), far([2.0]), 2, [0, 1, 2], [0, 1])
        with pytest.raises(InconsistentAsymptotics):
            rational_aef(PowerSeries([1.0, 1.0]), far([2.0]), 1, [0, 1, 2], [1, 2])

    def test_json(self):
        g = rational_aef(PowerSeries([1.0, 1.0]), far([2.0, 0.0]), 1, [0, 1, 2], [0, 1])
        obj = g.to_json()
        assert obj["schema"] == 1 and obj["den"][1][0] == "1"


class TestSommerfeld:
    def test_linear(self):
        assert sommerfeld_fit(PowerSeries([1.0, 1.0, 0.0])) == pytest.approx((1.0, 1.0))

    def test_square_root(self):
        assert sommerfeld_fit(PowerSeries([1.0, 1.0, -0.5])) == pytest.approx((2.0, 0.5))

    def test_exp_is_degenerate(self):
        with pytest.raises(InputError):
            sommerfeld_fit(PowerSeries([1.0, 1.0, 0.5]))

    def test_errors(self):
        with pytest.raises(InputError):
            sommerfeld_fit(PowerSeries([1.0, 0.0, 1.0]))
        with pytest.raises(InsufficientCoefficients):
            sommerfeld_fit(PowerSeries([1.0, 1.0]))

    @given(st.floats(0.1, 3.0), st.floats(-2.5, 2.5))
    def test_binomial_roundtrip(self, a, mu):
        assume(abs(mu) > 0.05 and abs(mu - 1.0) > 0.05)
        f = PowerSeries([1.0, mu * a, mu * (mu - 1) / 2 * a * a])
        assert sommerfeld_fit(f) == pytest.approx((a, mu), rel=1e-9)


# -- properties -------------------------------------------------------------------

vals = st.floats(-1.0, 1.0, allow_nan=False).filter(lambda v: abs(v) > 1e-3)
data = st.tuples(st.lists(vals, min_size=7, max_size=7), st.lists(vals, min_size=7, max_size=7),
                 st.integers(0, 2), st.integers(0, 7))


def _tppa(near, far_c, n, m, k, p):
    try:
        return construct_tppa(TwoPointData(PowerSeries(near), far(far_c), k_zero=k, offset=p), n, m)
    except SingularSystem:
        return None


@settings(max_examples=60, deadline=None)
@given(data)
def test_both_end_contact(d):
    near, far_c, m, k = d
    n = m
    k = min(k, n + m + 1)
    r = _tppa(near, far_c, n, m, k, 0)
    assume(r is not None and abs(r.den[-1]) > 1e-3)
    size = max(float(np.max(np.abs(r.num))), float(np.max(np.abs(r.den))))
    assume(size < 1e4)
    cond = size * size / abs(r.den[-1])
    if k:
        back = r.maclaurin(k - 1).coeffs
        assert np.allclose(back, near[:k], rtol=1e-9, atol=1e-9 * cond)
    j = n + m + 1 - k
    if j:
        assert np.allclose(far_expansion(r, j - 1), far_c[:j], rtol=1e-9, atol=1e-9 * cond)


@settings(max_examples=40, deadline=None)
@given(st.lists(vals, min_size=7, max_size=7), st.integers(0, 3), st.integers(0, 3))
def test_all_conditions_at_zero_is_pade(c, n, m):
    f = PowerSeries([1.0] + c[:n + m])
    try:
        ref = construct(f, n, m)
    except SingularSystem:
        ref = None
    r = _tppa(f.coeffs, [1.0], n, m, n + m + 1, n - m)
    assume(ref is not None and r is not None)
    assert np.allclose(r.num, ref.num, atol=1e-12 * max(1.0, float(np.max(np.abs(ref.num)))))
    assert np.allclose(r.den, ref.den, atol=1e-12 * max(1.0, float(np.max(np.abs(ref.den)))))


@settings(max_examples=40, deadline=None)
@given(data, st.integers(-1, 1))
def test_inversion_symmetry(d, p):
    near, far_c, m, k = d
    n = m + p
    assume(n >= 0)
    k = min(k, n + m + 1)
    r = _tppa(near, far_c, n, m, k, p)
    # h(w) = w**p f(1/w) has the far data at zero and the near data at infinity
    s = _tppa(far_c, near, n, m, n + m + 1 - k, p)
    assume(r is not None and s is not None)
    w = np.array([0.3, 0.7, 1.9])
    lhs = s(w)
    rhs = w ** p * r(1.0 / w)
    assume(np.all(np.isfinite(lhs)) and np.max(np.abs(lhs)) < 1e4)
    assert np.allclose(lhs, rhs, rtol=1e-9, atol=1e-9)
