import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from scipy.integrate import quad

from toralzeta.errors import DomainError
from toralzeta.special_functions import (erfc, f_term, f_term_grid, gamma,
                                         upper_incomplete_gamma,
                                         _gamma_upper, _gamma_upper_grid)


class TestGamma:
    def test_classical_values(self):
        assert gamma(1.0) == pytest.approx(1.0, rel=1e-13)
        assert gamma(0.5) == pytest.approx(math.sqrt(math.pi), rel=1e-13)
        assert gamma(4.0) == pytest.approx(6.0, rel=1e-13)

    @given(st.floats(min_value=0.1, max_value=50.0))
    @settings(max_examples=200, deadline=None)
    def test_recurrence(self, x):
        assert gamma(x + 1.0) == pytest.approx(x * gamma(x), rel=1e-12)

    @pytest.mark.parametrize("bad", [0.0, -1.0, math.inf, math.nan])
    def test_domain(self, bad):
        with pytest.raises(DomainError):
            gamma(bad)


class TestErfc:
    def test_zero(self):
        assert erfc(0.0) == 1.0

    def test_reflection_grid(self):
        xs = np.linspace(-6.0, 6.0, 1000)
        worst = max(abs(erfc(x) + erfc(-x) - 2.0) for x in xs)
        assert worst <= 1e-13

    def test_erfc_sqrt_pi(self):
        # 25-digit quadrature oracle; this value feeds the cusp constants
        assert erfc(math.sqrt(math.pi)) == pytest.approx(
            0.012188882184802886892, rel=1e-12)

    def test_domain(self):
        with pytest.raises(DomainError):
            erfc(math.nan)


class TestUpperIncompleteGamma:
    def test_a_equals_one_is_exponential(self):
        for x in (0.0, 0.3, 1.0, 4.7, 20.0):
            assert upper_incomplete_gamma(1.0, x) == pytest.approx(
                math.exp(-x), rel=1e-12)

    def test_half_parameter_matches_erfc(self):
        # Gamma(1/2, x) = sqrt(pi) erfc(sqrt x), by t = u^2 substitution
        for x in (0.01, 0.5, 1.0, 3.0, 9.0):
            assert upper_incomplete_gamma(0.5, x) == pytest.approx(
                math.sqrt(math.pi) * erfc(math.sqrt(x)), rel=1e-12)

    def test_quadrature_oracle_value(self):
        # adaptive quadrature of the defining integral, frozen at 20 digits
        assert upper_incomplete_gamma(2.5, 3.0) == pytest.approx(
            0.40706917587130299843, rel=1e-12)

    def test_quadrature_oracle_grid(self):
        for a in (0.25, 1.5, 3.2):
            for x in (0.1, 1.0, 4.0, 12.0):
                ref, err = quad(lambda t: t ** (a - 1.0) * math.exp(-t),
                                x, np.inf, epsabs=1e-14, epsrel=1e-13)
                assert upper_incomplete_gamma(a, x) == pytest.approx(ref, rel=1e-10)

    def test_recurrence_lift_consistency(self):
        # Gamma(a+1, x) = a Gamma(a, x) + x^a e^-x across the negative range
        for a in (-0.25, -0.75, -1.5):
            for x in (0.2, 0.9, 1.5, 7.0):
                lhs = _gamma_upper(a + 1.0, x)
                rhs = a * _gamma_upper(a, x) + x ** a * math.exp(-x)
                assert lhs == pytest.approx(rhs, rel=1e-11)

    def test_grid_matches_scalar(self):
        xs = np.geomspace(1e-5, 400.0, 300)
        for a in (-0.75, -0.25, 0.5, 1.7, 3.5):
            grid = _gamma_upper_grid(a, xs)
            scalar = np.array([_gamma_upper(a, float(x)) for x in xs])
            rel = np.abs(grid - scalar) / np.maximum(np.abs(scalar), 1e-300)
            assert float(np.max(rel)) <= 1e-12

    def test_domain(self):
        with pytest.raises(DomainError):
            upper_incomplete_gamma(-1.0, 2.0)
        with pytest.raises(DomainError):
            upper_incomplete_gamma(1.0, -2.0)


class TestFTerm:
    def test_gamma_one_case(self):
        # f(2, 1) = pi^-1 Gamma(1, pi) = e^-pi / pi
        assert f_term(2.0, 1.0) == pytest.approx(
            math.exp(-math.pi) / math.pi, rel=1e-13)

    def test_s_equals_one_is_erfc(self):
        for a in (0.05, 0.4, 1.0, 2.5):
            assert f_term(1.0, a) == pytest.approx(
                erfc(math.sqrt(math.pi) * a) / a, rel=1e-12)

    def test_defining_integral(self):
        # int_1^inf t^(s/2) exp(-pi t a^2) dt/t within 1e-9 relative
        for s in (0.5, 1.37, 2.8, -0.5):
            for a in (0.3, 0.83, 1.6):
                ref, _ = quad(lambda t: t ** (s / 2.0 - 1.0)
                              * math.exp(-math.pi * t * a * a),
                              1.0, np.inf, epsabs=1e-15, epsrel=1e-12)
                assert f_term(s, a) == pytest.approx(ref, rel=1e-9)

    def test_frozen_quadrature_value(self):
        assert f_term(1.37, 0.83) == pytest.approx(
            0.047839535746214898891, rel=1e-11)

    @given(st.floats(min_value=0.1, max_value=3.9),
           st.floats(min_value=0.05, max_value=4.0))
    @settings(max_examples=150, deadline=None)
    def test_monotone_decreasing_in_a(self, s, a):
        assert f_term(s, a) > f_term(s, 2.0 * a) > 0.0

    def test_strictly_decreasing_geometric_grid(self):
        for s in (0.5, 1.0, 2.5):
            grid = np.geomspace(0.05, 8.0, 40)
            vals = [f_term(s, a) for a in grid]
            assert all(x > y for x, y in zip(vals, vals[1:]))

    def test_grid_matches_scalar(self):
        a = np.geomspace(0.05, 6.0, 200)
        for s in (0.4, 1.0, 2.9, -1.0):
            grid = f_term_grid(s, a)
            scalar = np.array([f_term(s, float(x)) for x in a])
            mask = scalar > 0
            rel = np.abs(grid[mask] - scalar[mask]) / scalar[mask]
            assert float(np.max(rel)) <= 1e-12

    def test_domain(self):
        with pytest.raises(DomainError):
            f_term(1.0, 0.0)
        with pytest.raises(DomainError):
            f_term(1.0, -0.5)
