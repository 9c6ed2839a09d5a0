import math

import numpy as np
import pytest

from toralzeta.epstein import (CompletedValue, EvalConfig,
                               completed_from_direct, cusp_lower_bound,
                               epstein_completed, epstein_direct,
                               functional_equation_residual, residue_check)
from toralzeta.errors import OutOfRegionError, PoleError
from toralzeta.lattice import lambda1
from toralzeta.sampling import random_basis, random_unimodular_basis

from _oracles import dirichlet_beta, naive_epstein, riemann_zeta


class TestDirect:
    def test_two_squares_identity(self):
        # E(Z^2, s) = 2 zeta(s/2) beta(s/2); both factors by Hurwitz zeta
        config = EvalConfig(tolerance=5e-9)
        for s in (3.0, 4.0, 5.0):
            ref = 2.0 * riemann_zeta(s / 2.0) * dirichlet_beta(s / 2.0)
            got = epstein_direct(np.eye(2), s, config).value
            assert got == pytest.approx(ref, rel=1e-9)

    def test_scale_invariance(self, rng):
        g = random_basis(3, rng)
        a = epstein_direct(g, 4.2).value
        b = epstein_direct(2.3 * g, 4.2).value
        assert a == pytest.approx(b, rel=1e-10)

    def test_z3_brute_force(self):
        # naive triple sum to radius 50 with integral tail as oracle
        ref = naive_epstein(np.eye(3), 5.0, 50.0)
        got = epstein_direct(np.eye(3), 5.0).value
        assert got == pytest.approx(ref, abs=2e-5)

    def test_sharp_route_agrees_with_theta_route(self):
        # same value from the truncated-sum and theta-split strategies
        from toralzeta.epstein import _direct_sharp, _direct_ewald, _ReducedLattice
        import toralzeta.lattice as lat
        g = np.array([[1.3, 0.2], [-0.1, 0.9]])
        config = EvalConfig(tolerance=1e-9)
        prim = _ReducedLattice(g)
        dual = _ReducedLattice(lat.dual_basis(g))
        a = _direct_sharp(prim, 4.0, config).value
        b = _direct_ewald(prim, dual, 4.0, config).value
        assert a == pytest.approx(b, rel=2e-9)

    def test_out_of_region(self):
        with pytest.raises(OutOfRegionError):
            epstein_direct(np.eye(2), 1.5)


class TestCompleted:
    def test_riemann_value(self):
        # n = 1 reduces to the Riemann xi normalisation:
        # E*(1, s) = pi^(-s/2) Gamma(s/2) zeta(s); frozen 20-digit oracle
        got = epstein_completed(np.eye(1), 0.5).value
        assert got == pytest.approx(-3.9769662255065128793, rel=1e-12)

    def test_self_dual_fixed_point(self):
        # Z^2 is self-dual: E*(Z^2, 1) = E*(Z^2, 2 - 1) trivially, but the
        # evaluator must also reproduce 2 zeta(1/2) beta(1/2) via E
        got = epstein_completed(np.eye(2), 1.0).value
        ref = (math.pi ** -0.5 * math.gamma(0.5)
               * 2.0 * riemann_zeta(0.5) * dirichlet_beta(0.5))
        assert got == pytest.approx(ref, rel=1e-10)

    def test_overlap_with_direct(self):
        # completed = pi^(-s/2) Gamma(s/2) * direct at s = 3, n = 2
        a = epstein_completed(np.eye(2), 3.0).value
        b = completed_from_direct(np.eye(2), 3.0).value
        assert a == pytest.approx(b, rel=1e-9)

    def test_overlap_random(self, rng):
        config = EvalConfig(tolerance=1e-10)
        for n in (2, 3):
            for s in (n + 0.5, n + 1.0):
                g = random_basis(n, rng)
                a = epstein_completed(g, s, config).value
                b = completed_from_direct(g, s, config).value
                assert a == pytest.approx(b, rel=1e-9)

    def test_positivity_lower_bound(self, rng):
        for n in (2, 3):
            for s in (0.31 * n, 0.5 * n, 0.77 * n):
                g = random_basis(n, rng)
                val = epstein_completed(g, s).value
                assert val >= -1.0 / s - 1.0 / (n - s) - 1e-10

    def test_poles_rejected(self):
        with pytest.raises(PoleError):
            epstein_completed(np.eye(2), 0.0)
        with pytest.raises(PoleError):
            epstein_completed(np.eye(2), 2.0)

    def test_error_estimate_honest(self, rng):
        g = random_basis(2, rng)
        loose = epstein_completed(g, 1.3, EvalConfig(tolerance=1e-6))
        tight = epstein_completed(g, 1.3, EvalConfig(tolerance=1e-12))
        assert abs(loose.value - tight.value) <= max(loose.error_estimate, 1e-12) * 10


class TestFunctionalEquation:
    def test_self_dual_zero(self):
        for s in (0.5, 1.3):
            assert functional_equation_residual(np.eye(2), s) <= 1e-10

    def test_random_unimodular(self, rng):
        for n in (2, 3):
            for _ in range(10):
                g = random_unimodular_basis(n, rng)
                assert functional_equation_residual(g, 0.4 * n) <= 1e-8

    def test_diag(self):
        assert functional_equation_residual(np.diag([5.0, 0.2]), 1.2) <= 1e-8

    def test_non_unimodular(self, rng):
        # det-normalisation makes the residual scale-free
        g = 3.1 * random_basis(3, rng)
        assert functional_equation_residual(g, 1.1) <= 1e-8


class TestResidue:
    def test_residue_targets(self, rng):
        # pole residue pi^(n/2)/Gamma(n/2): pi at n=2, 2 pi at n=3
        assert math.pi ** 1 / math.gamma(1.0) == pytest.approx(math.pi)
        assert math.pi ** 1.5 / math.gamma(1.5) == pytest.approx(2 * math.pi)
        for n in (2, 3):
            g = random_basis(n, rng)
            assert residue_check(g) <= 1e-4

    def test_independent_of_basis(self, rng):
        checks = [residue_check(random_basis(2, rng)) for _ in range(2)]
        assert max(checks) <= 1e-4


class TestCuspBound:
    @pytest.mark.parametrize("s,expect_regime", [(1.5, "s>1"), (1.0, "s=1"), (0.5, "s<1")])
    def test_regimes(self, s, expect_regime):
        cb = cusp_lower_bound(np.diag([100.0, 0.01]), s)
        assert cb.regime == expect_regime
        assert cb.applicable

    def test_bound_scales_like_lambda_power(self):
        # lambda1 = 1/t, s = 1.5: bound grows like t^1.5
        t1, t2 = 50.0, 100.0
        b1 = cusp_lower_bound(np.diag([t1, 1 / t1]), 1.5).bound
        b2 = cusp_lower_bound(np.diag([t2, 1 / t2]), 1.5).bound
        assert b2 / b1 == pytest.approx((t2 / t1) ** 1.5, rel=0.05)

    def test_log_form_at_s_one(self):
        t = 100.0
        cb = cusp_lower_bound(np.diag([t, 1 / t]), 1.0)
        c = math.erfc(math.sqrt(math.pi))
        assert cb.bound == pytest.approx(c * t * math.log(t), rel=1e-9)

    def test_gate(self):
        # identity lattice sits above every threshold
        cb = cusp_lower_bound(np.eye(2), 1.5)
        assert not cb.applicable

    def test_inequality_on_cusp_family(self):
        for t in (5.0, 20.0, 100.0, 400.0):
            g = np.diag([t, 1.0 / t])
            for s in (0.5, 1.0, 1.5):
                cb = cusp_lower_bound(g, s)
                if not cb.applicable:
                    continue
                lhs = epstein_completed(g, s).value + 1.0 / s + 1.0 / (2.0 - s)
                assert lhs >= cb.bound * (1.0 - 1e-9)

    def test_inequality_n3_family(self):
        for t in (3.0, 10.0):
            g = np.diag([t, 1.0, 1.0 / t])
            for s in (0.8, 1.0, 2.2):
                cb = cusp_lower_bound(g, s)
                if not cb.applicable:
                    continue
                lhs = epstein_completed(g, s).value + 1.0 / s + 1.0 / (3.0 - s)
                assert lhs >= cb.bound * (1.0 - 1e-9)


class TestConfig:
    def test_tolerance_validated(self):
        with pytest.raises(ValueError):
            EvalConfig(tolerance=0.5)

    def test_completed_value_fields(self):
        cv = epstein_completed(np.eye(2), 1.0, EvalConfig(tolerance=1e-8))
        assert isinstance(cv, CompletedValue)
        assert cv.error_estimate <= 1e-8
