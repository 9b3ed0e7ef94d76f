from __future__ import annotations

import math

import numpy as np
import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st
from scipy.integrate import quad

from asympt import pade
from asympt import series_core as sc
from asympt.casebook.quintic import EXACT_ROOT, delta_series, eps_nonlinear_series
from asympt.errors import EvaluationAtPole, InputError, InsufficientCoefficients, SingularSystem
from asympt.pade import RationalApproximant, construct
from asympt.series_core import PowerSeries


def stieltjes_value(x: float) -> float:
    return quad(lambda t: math.exp(-t) / (1.0 + x * t), 0.0, math.inf, epsabs=1e-14)[0]


class TestConstruct:
    def test_geometric_zero_one(self, geometric):
        r = construct(geometric, 0, 1)
        assert np.allclose(r.num, [1.0]) and np.allclose(r.den, [1.0, -1.0])
        assert r(0.5) == pytest.approx(2.0, abs=1e-15)

    def test_quintic_series(self):
        r = construct(eps_nonlinear_series(6), 3, 3)
        assert r(1.0) == pytest.approx(0.76369, abs=5e-4)

    def test_delta_series(self):
        c = delta_series(12)
        assert c[0] == pytest.approx(0.5)
        assert c[1] == pytest.approx(0.25 * math.log(2))
        assert c[2] == pytest.approx(-0.125 * math.log(2), rel=1e-12)
        assert construct(c, 6, 6)(4.0) == pytest.approx(0.75487654, abs=1e-6)
        assert abs(construct(c, 6, 6)(4.0) - EXACT_ROOT) < 2e-6

    def test_padeon(self):
        r = construct(PowerSeries([0, 1, 0, -0.25, 0, 0.0625]), 1, 2)
        assert np.allclose(r.num, [0, 1], atol=1e-15) and np.allclose(r.den, [1, 0, 0.25], atol=1e-15)
        x = np.linspace(0, 8, 50)
        assert np.allclose(r(2 * np.exp(-x)), 1 / np.cosh(x), atol=1e-14)

    def test_insufficient(self):
        with pytest.raises(InsufficientCoefficients):
            construct(PowerSeries([1, 1, 1]), 2, 1)

    def test_gap_raises(self):
        # 1 + x^2 + ...: [1/1] would need c_2 + b_1 c_1 = 0 with c_1 = 0
        with pytest.raises(SingularSystem):
            construct(PowerSeries([1, 0, 1, 0, 1]), 1, 1)

    def test_consistent_degenerate_block(self, geometric):
        r = construct(geometric, 2, 3)
        x = np.linspace(-0.9, 0.9, 7)
        assert np.allclose(r(x), 1 / (1 - x), rtol=1e-12)
        assert np.allclose(r.maclaurin(5).coeffs, np.ones(6), atol=1e-12)

    def test_zero_series(self):
        r = construct(PowerSeries(np.zeros(5)), 2, 2)
        assert np.all(r.num == 0) and np.allclose(r.den, [1, 0, 0])

    def test_normalisation(self):
        r = RationalApproximant([2.0, 4.0], [2.0, 1.0])
        assert r.den[0] == 1.0 and np.allclose(r.num, [1, 2])
        with pytest.raises(InputError):
            RationalApproximant([1.0], [0.0, 1.0])

    def test_json_round_trip(self):
        r = RationalApproximant([1.0, 0.5], [1.0, -0.5])
        d = r.to_json()
        assert d["schema"] == 1
        s = RationalApproximant.from_json(d)
        assert np.array_equal(s.num, r.num) and np.array_equal(s.den, r.den)
        with pytest.raises(InputError):
            RationalApproximant.from_json({"num": [1]})


class TestEvaluate:
    def test_at_origin(self, exp_series):
        r = construct(exp_series, 3, 4)
        assert r(0.0) == r.num[0]

    def test_pole(self, geometric):
        with pytest.raises(EvaluationAtPole):
            construct(geometric, 0, 1)(1.0)

    def test_complex_argument(self, exp_series):
        r = construct(exp_series, 4, 4)
        assert abs(r(0.3j) - np.exp(0.3j)) < 1e-9


class TestTable:
    def test_exp_cell(self, exp_series):
        t = pade.pade_table(exp_series, 2, 2)
        r = t[1][1]
        assert np.allclose(r.num, [1, 0.5]) and np.allclose(r.den, [1, -0.5])

    def test_first_row_is_partial_sums(self, exp_series):
        t = pade.pade_table(exp_series, 5, 1)
        for n in range(6):
            assert t[0][n](0.7) == pytest.approx(exp_series.partial_sums(0.7)[n], rel=1e-14)

    def test_zero_series(self):
        t = pade.pade_table(PowerSeries(np.zeros(7)), 3, 3)
        assert all(cell is not None and cell(0.3) == 0 for row in t for cell in row)

    def test_gaps_marked(self):
        t = pade.pade_table(PowerSeries([1, 0, 1, 0, 1, 0, 1]), 2, 2)
        assert t[1][1] is None
        assert t[0][2] is not None and t[2][2] is not None


class TestPoles:
    def test_geometric(self, geometric):
        rep = pade.pole_zero_report(construct(geometric, 0, 1))
        assert len(rep.poles) == 1 and rep.poles[0].location == pytest.approx(1.0)
        assert rep.poles[0].residue == pytest.approx(1.0)

    def test_quintic_pole_free_on_unit_interval(self):
        rep = pade.pole_zero_report(construct(eps_nonlinear_series(6), 3, 3), radius=1.0)
        assert all(p.location.real < 0 or abs(p.location.imag) > 1e-8 for p in rep.poles)

    def test_roots_are_denominator_zeros(self, exp_series):
        r = construct(exp_series, 3, 3)
        for p in pade.pole_zero_report(r).poles:
            assert abs(np.polynomial.polynomial.polyval(p.location, r.den)) < 1e-10

    def test_froissart_pairs_from_noise(self):
        # noisy geometric series: every pole beyond the true one at 1 is a doublet
        rng = np.random.default_rng(0)
        c = np.ones(9) + 1e-9 * rng.standard_normal(9)
        rep = pade.pole_zero_report(construct(PowerSeries(c), 3, 3))
        spurious = [p for p in rep.poles if abs(p.location - 1.0) > 1e-6]
        assert len(spurious) == 2
        assert {p.location for p in spurious} == {q[0] for q in rep.froissart_pairs}

    def test_no_pairs_when_clean(self, exp_series):
        assert pade.pole_zero_report(construct(exp_series, 3, 3)).froissart_pairs == []

    def test_polynomial_roots(self):
        z = np.sort(pade.polynomial_roots(np.array([6.0, -5.0, 1.0])).real)
        assert np.allclose(z, [2, 3])


class TestSmoothingAndBounds:
    def test_real_blend(self, exp_series):
        g = pade.smooth_diagonal(exp_series, 3)
        v = g(1.0)
        assert np.isreal(v)
        a, b = construct(exp_series, 3, 3)(1.0), construct(exp_series, 2, 2)(1.0)
        assert min(a, b) - 1e-15 <= v <= max(a, b) + 1e-15

    def test_geometric_exact(self, geometric):
        g = pade.smooth_diagonal(geometric, 2)
        assert g(0.5) == pytest.approx(2.0, rel=1e-13)

    def test_exp_closer_than_lower(self, exp_series):
        g = pade.smooth_diagonal(exp_series, 3)
        assert abs(g(1.0) - math.e) < abs(construct(exp_series, 2, 2)(1.0) - math.e)

    def test_stieltjes_ordering(self, stieltjes):
        rep = pade.bounds_check(stieltjes, 2, 0.1)
        exact = stieltjes_value(0.1)
        # the diagonal and [n/n+1] enclose the Stieltjes integral; the literal
        # chain [n/n-1] <= [n/n] <= [n/n+1] is only reported
        assert isinstance(rep.ordered, bool)
        assert min(rep.diagonal, rep.upper) <= exact <= max(rep.diagonal, rep.upper)

    def test_geometric_equal(self, geometric):
        rep = pade.bounds_check(geometric, 2, 0.3)
        assert rep.lower == pytest.approx(rep.diagonal) == pytest.approx(rep.upper)

    def test_report_only(self):
        e = PowerSeries.variable(10)
        f = e * (1 + e) * sc.power(1 + 2 * e, -0.5)
        # c_2 = 0 makes [2/1] a gap of the table; otherwise the flag is only reported
        try:
            rep = pade.bounds_check(f, 2, 0.3)
        except SingularSystem:
            return
        assert isinstance(rep.ordered, bool)


# -- properties -------------------------------------------------------------------

coeffs = st.lists(st.floats(-1.0, 1.0, allow_nan=False), min_size=9, max_size=9)
degrees = st.tuples(st.integers(0, 4), st.integers(0, 4))


def _try(f, n, m):
    try:
        return construct(f, n, m)
    except SingularSystem:
        return None


@settings(max_examples=60, deadline=None)
@given(coeffs, degrees)
def test_order_of_contact(c, nm):
    n, m = nm
    f = PowerSeries([1.0] + c[:-1])
    r = _try(f, n, m)
    assume(r is not None)
    back = r.maclaurin(n + m)
    # re-expansion divides by the denominator, so its error grows like the
    # coefficients of 1/den
    inv_den = pade.RationalApproximant([1.0], r.den).maclaurin(n + m).coeffs
    cond = max(1.0, float(np.sum(np.abs(inv_den))) * float(np.sum(np.abs(r.num))) * float(np.sum(np.abs(r.den))))
    assume(cond < 1e6)
    assert np.all(np.abs(back.coeffs - f.coeffs[: n + m + 1]) <= 1e-9 * cond * (1 + np.abs(f.coeffs[: n + m + 1])))


@settings(max_examples=40, deadline=None)
@given(coeffs, degrees)
def test_duality(c, nm):
    n, m = nm
    f = PowerSeries([1.0] + c[:-1])
    r = _try(f, m, n)
    q = _try(sc.reciprocal(f), n, m)
    assume(r is not None and q is not None)
    x = np.linspace(-0.3, 0.3, 10)
    pv = np.polynomial.polynomial.polyval(x, r.num)
    assume(np.min(np.abs(pv)) > 1e-3 and np.min(np.abs(np.polynomial.polynomial.polyval(x, q.den))) > 1e-3)
    assert np.allclose(q(x), 1.0 / r(x), rtol=1e-8, atol=1e-10)


@settings(max_examples=40, deadline=None)
@given(coeffs, st.floats(0.5, 2.0), st.floats(-1.0, 1.0), st.integers(1, 4))
def test_argument_map_invariance(c, a, b, n):
    f = PowerSeries([1.0] + c[:-1])
    w = sc.mul(a * PowerSeries.variable(2 * n), sc.reciprocal(1 + b * PowerSeries.variable(2 * n)))
    fw = sc.compose(f.truncate(2 * n), w)
    r1, r2 = _try(fw, n, n), _try(f, n, n)
    assume(r1 is not None and r2 is not None)
    x = np.linspace(-0.2, 0.2, 7)
    wx = a * x / (1 + b * x)
    d1 = np.polynomial.polynomial.polyval(x, r1.den)
    d2 = np.polynomial.polynomial.polyval(wx, r2.den)
    assume(np.min(np.abs(d1)) > 1e-2 and np.min(np.abs(d2)) > 1e-2)
    assume(np.max(np.abs(r1.den)) < 1e4 and np.max(np.abs(r2.den)) < 1e4)
    assert np.allclose(r1(x), r2(wx), rtol=1e-8, atol=1e-8)


@settings(max_examples=40, deadline=None)
@given(coeffs, st.floats(-1, 1), st.floats(0.5, 2), st.floats(0.5, 2), st.floats(-0.2, 0.2),
       st.integers(1, 4))
def test_function_map_invariance(c, a, b, cc, d, n):
    f = PowerSeries([1.0] + c[:-1]).truncate(2 * n)
    g = sc.divide(a + b * f, cc + d * f)
    r1, r2 = _try(g, n, n), _try(f, n, n)
    assume(r1 is not None and r2 is not None)
    x = np.linspace(-0.2, 0.2, 7)
    d1 = np.polynomial.polynomial.polyval(x, r1.den)
    d2 = np.polynomial.polynomial.polyval(x, r2.den)
    assume(np.min(np.abs(d1)) > 1e-2 and np.min(np.abs(d2)) > 1e-2)
    assume(np.max(np.abs(r1.den)) < 1e4 and np.max(np.abs(r2.den)) < 1e4)
    p = r2(x)
    assume(np.min(np.abs(cc + d * p)) > 1e-2)
    assert np.allclose(r1(x), (a + b * p) / (cc + d * p), rtol=1e-8, atol=1e-8)


@settings(max_examples=30, deadline=None)
@given(coeffs, degrees)
def test_uniqueness_under_reordering(c, nm):
    # solving the same system with equations permuted gives the same approximant
    n, m = nm
    f = PowerSeries([1.0] + c[:-1])
    r = _try(f, n, m)
    assume(r is not None and m >= 1)
    cf = f.coeffs
    a = np.array([[cf[n + i - j] if n + i - j >= 0 else 0.0 for j in range(1, m + 1)]
                  for i in range(1, m + 1)])
    rhs = -cf[n + 1: n + m + 1]
    perm = np.arange(m)[::-1]
    try:
        b = np.linalg.solve(a[perm], rhs[perm])
    except np.linalg.LinAlgError:
        return
    # entries below round-off of the series scale count as zero in construct
    assume(np.linalg.svd(a, compute_uv=False)[-1] > 1e-8 * np.max(np.abs(cf)))
    assert np.allclose(r.den[1:], b, rtol=1e-9, atol=1e-12 * max(1.0, np.max(np.abs(b))))
