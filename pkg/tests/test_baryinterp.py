from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy.interpolate import BarycentricInterpolator

from asympt import baryinterp as bi
from asympt.errors import InputError


def runge(x):
    return 1.0 / (1.0 + 25.0 * np.asarray(x) ** 2)


class TestBuild:
    def test_line(self):
        b = bi.build([0.0, 2.0], [1.0, 5.0])
        x = np.linspace(-3, 5, 17)
        assert np.allclose(b(x), 1.0 + 2.0 * x, rtol=1e-14)

    def test_constant(self):
        b = bi.build(np.linspace(0, 1, 7), np.full(7, 3.5))
        assert np.allclose(b(np.linspace(-1, 2, 31)), 3.5, rtol=1e-14)

    def test_weights_alternate(self):
        assert np.array_equal(bi.build([0, 1, 2, 3], [0, 0, 0, 0]).weights, [1, -1, 1, -1])

    def test_duplicate(self):
        with pytest.raises(bi.DuplicateNodes):
            bi.build([0.0, 1.0, 1.0], [1.0, 2.0, 3.0])

    def test_invalid(self):
        with pytest.raises(InputError):
            bi.build([1.0, 0.0], [1.0, 2.0])
        with pytest.raises(InputError):
            bi.build([0.0, 1.0], [1.0])
        with pytest.raises(InputError):
            bi.build([0.0, 1.0], [1.0, 2.0], "custom")
        with pytest.raises(InputError):
            bi.build([0.0, 1.0], [1.0, 2.0], "custom", weights=[1.0, 0.0])
        with pytest.raises(InputError):
            bi.build([0.0, np.nan], [1.0, 2.0])

    def test_immutable(self):
        b = bi.build([0.0, 1.0], [1.0, 2.0])
        with pytest.raises(ValueError):
            b.values[0] = 9.0


class TestRunge:
    nodes = np.linspace(-1, 1, 21)
    grid = np.linspace(-1, 1, 2001)

    def test_error_bound(self):
        b = bi.build(self.nodes, runge(self.nodes))
        assert np.max(np.abs(b(self.grid) - runge(self.grid))) < 0.12

    def test_polynomial_contrast(self):
        poly = BarycentricInterpolator(self.nodes, runge(self.nodes))
        assert np.max(np.abs(poly(self.grid) - runge(self.grid))) > 50

    def test_pole_free(self):
        b = bi.build(self.nodes, runge(self.nodes))
        # 10x refined grid strictly between each pair of nodes
        for lo, hi in zip(self.nodes[:-1], self.nodes[1:]):
            d = b.denominator(np.linspace(lo, hi, 12)[1:-1])
            assert np.all(d > 0) or np.all(d < 0)


class TestEvaluate:
    def test_nodes_exact(self):
        x = np.linspace(0, 3, 9)
        f = np.sin(x)
        b = bi.build(x, f)
        assert np.array_equal(b(x), f)
        assert b(float(x[3])) == f[3]

    def test_midpoint_linear(self):
        b = bi.build([0.0, 2.0], [1.0, 5.0])
        assert b(1.0) == pytest.approx(3.0, rel=1e-15)

    def test_alternating_weights_not_linear_exact(self):
        # beyond two nodes the alternating scheme reproduces constants only
        b = bi.build([0.0, 1.0, 2.0], [1.0, 3.0, 5.0])
        assert b(1.5) == pytest.approx(4.6, rel=1e-14)

    def test_near_node_snaps(self):
        b = bi.build([0.0, 1.0], [1.0, 2.0])
        assert b(1.0 + 1e-16) == 2.0

    def test_bounded_on_smooth_data(self):
        x = np.linspace(0, 2 * np.pi, 15)
        b = bi.build(x, np.cos(x))
        vals = b(np.linspace(0, 2 * np.pi, 3001))
        assert np.max(np.abs(vals)) < 1.1

    def test_shape(self):
        b = bi.build([0.0, 1.0], [1.0, 2.0])
        assert b(np.zeros((2, 2))).shape == (2, 2)
        assert isinstance(b(0.25), float)


def polynomial_weights(x: np.ndarray) -> np.ndarray:
    return np.array([1.0 / np.prod(x[i] - np.delete(x, i)) for i in range(x.size)])


@settings(max_examples=60, deadline=None)
@given(st.lists(st.floats(-2, 2), min_size=4, max_size=4), st.floats(0.0, 3.0), st.floats(-0.9, 0.9))
def test_reproduces_own_rationals(p, a, b):
    # weights w_i q(x_i) reproduce p/q exactly when deg p, deg q <= n
    nodes = np.cos(np.linspace(np.pi, 0, 7))
    q = lambda x: 1.0 + b * x + a * x ** 2  # noqa: E731
    assert np.all(q(np.linspace(-1, 1, 201)) > 0.05)
    r = lambda x: np.polyval(p, x) / q(x)  # noqa: E731
    interp = bi.build(nodes, r(nodes), "custom", weights=polynomial_weights(nodes) * q(nodes))
    x = np.linspace(-1, 1, 101)
    scale = 1.0 + np.max(np.abs(r(x)))
    assert np.allclose(interp(x), r(x), rtol=0, atol=1e-11 * scale)


@settings(max_examples=60, deadline=None)
@given(st.lists(st.floats(-5, 5), min_size=2, max_size=12))
def test_interpolation_and_pole_freeness(vals):
    nodes = np.linspace(0.0, 1.0, len(vals))
    b = bi.build(nodes, vals)
    assert np.array_equal(b(nodes), np.array(vals, dtype=float))
    for lo, hi in zip(nodes[:-1], nodes[1:]):
        d = b.denominator(np.linspace(lo, hi, 12)[1:-1])
        assert np.all(d > 0) or np.all(d < 0)
