import math

import numpy as np
import pytest

from toralzeta.errors import (BudgetExceededError, DegenerateBasisError,
                              DomainError, UnsupportedRankError)
from toralzeta.lattice import (LatticeBasis, NormSpec, ball_volume,
                               determinant, dual_basis,
                               dual_lambda1_inequality_check,
                               enumerate_vectors, lambda1, lll_reduce,
                               successive_minima, unit_log_norm)
from toralzeta.sampling import random_basis, random_unimodular_basis

from _oracles import brute_force_vectors


def _as_set(vectors):
    return set(map(tuple, np.asarray(vectors).tolist()))


class TestDeterminant:
    def test_identity(self):
        assert determinant(np.eye(3)) == pytest.approx(1.0)

    def test_diag(self):
        assert determinant(np.diag([2.0, 0.5])) == pytest.approx(1.0)

    def test_gaussian_integers(self):
        # covolume of the Gaussian integer lattice: 2^-r2 sqrt|D| = sqrt(4)/2
        assert abs(determinant(np.eye(2))) == pytest.approx(
            2.0 ** -1 * math.sqrt(4.0))

    def test_singular(self):
        with pytest.raises(DegenerateBasisError):
            determinant(np.array([[1.0, 2.0], [2.0, 4.0]]))


class TestDualBasis:
    def test_identity(self):
        assert np.allclose(dual_basis(np.eye(2)).matrix, np.eye(2))

    def test_diag(self):
        d = dual_basis(np.diag([3.0, 1 / 3.0])).matrix
        assert np.allclose(d, np.diag([1 / 3.0, 3.0]))

    def test_involution_and_pairing(self, rng):
        for n in (2, 3, 4):
            g = random_basis(n, rng)
            dd = dual_basis(dual_basis(g)).matrix
            assert np.max(np.abs(dd - g)) <= 1e-12
            pairing = g @ dual_basis(g).matrix.T
            assert np.max(np.abs(pairing - np.eye(n))) <= 1e-12


class TestEnumerate:
    def test_unit_circle(self):
        assert len(enumerate_vectors(np.eye(2), 1.0)) == 4

    def test_radius_15(self):
        # brute force over |a|, |b| <= 2: 4 unit vectors + 4 diagonals
        vs = enumerate_vectors(np.eye(2), 1.5)
        assert len(vs) == 8
        assert _as_set(vs) == _as_set(brute_force_vectors(np.eye(2), 1.5, 2))

    def test_skew_diag(self):
        g = np.diag([3.0, 1 / 3.0])
        vs = enumerate_vectors(g, 1.0)
        assert len(vs) == 6
        norms = sorted(np.linalg.norm(vs @ g, axis=1))
        assert norms == pytest.approx([1 / 3, 1 / 3, 2 / 3, 2 / 3, 1.0, 1.0])

    def test_matches_brute_force(self, rng):
        for n in (2, 3):
            for _ in range(5):
                g = random_basis(n, rng, cond_cap=15.0)
                got = enumerate_vectors(g, 2.5)
                ref = brute_force_vectors(g, 2.5, 20)
                assert _as_set(got) == _as_set(ref)

    def test_plus_minus_pairs(self, rng):
        vs = enumerate_vectors(random_basis(3, rng), 2.0)
        assert _as_set(vs) == _as_set(-vs)

    def test_lexicographic_order(self):
        vs = enumerate_vectors(np.eye(2), 1.5)
        assert vs.tolist() == sorted(vs.tolist())

    def test_budget(self):
        with pytest.raises(BudgetExceededError):
            enumerate_vectors(np.eye(2), 1e5, budget=1000)

    def test_bad_radius(self):
        with pytest.raises(DomainError):
            enumerate_vectors(np.eye(2), 0.0)


class TestLambda1:
    def test_identity(self):
        assert lambda1(np.eye(2)) == pytest.approx(1.0)
        assert lambda1(np.eye(3)) == pytest.approx(1.0)

    @pytest.mark.parametrize("t", [1.0, 2.0, 10.0, 100.0])
    def test_diag_family(self, t):
        assert lambda1(np.diag([t, 1.0 / t])) == pytest.approx(1.0 / t, rel=1e-12)

    def test_unimodular_invariance(self, rng):
        for n in (2, 3):
            g = random_basis(n, rng)
            U = np.eye(n, dtype=np.int64)
            for _ in range(8):
                i, j = rng.integers(0, n, 2)
                if i != j:
                    E = np.eye(n, dtype=np.int64)
                    E[i, j] = rng.integers(-3, 4)
                    U = E @ U
            assert lambda1(U.astype(float) @ g) == pytest.approx(
                lambda1(g), rel=1e-12)

    def test_scale_invariance(self, rng):
        g = random_basis(3, rng)
        for c in (0.1, 3.7, 250.0):
            assert lambda1(c * g) == pytest.approx(lambda1(g), rel=1e-12)


class TestSuccessiveMinima:
    def test_z2(self):
        report = successive_minima(np.eye(2))
        assert np.allclose(report.lengths, [1.0, 1.0])

    def test_skew(self):
        report = successive_minima(np.array([[1.0, 0.0], [0.5, 10.0]]))
        assert report.lengths[0] == pytest.approx(1.0)
        assert report.lengths[1] == pytest.approx(math.hypot(0.5, 10.0), rel=1e-12)

    def test_unit_log_lattice_sqrt5(self):
        # fundamental-unit oracle eps = (1 + sqrt 5)/2
        eps = (1.0 + math.sqrt(5.0)) / 2.0
        gen = np.array([[math.log(eps), -math.log(eps)]])
        report = successive_minima(gen, unit_log_norm(2, 0))
        assert report.lengths[0] == pytest.approx(math.log(eps), rel=1e-12)

    def test_independence(self, rng):
        g = random_basis(3, rng)
        report = successive_minima(g)
        assert np.linalg.matrix_rank(report.vectors) == 3
        assert np.all(np.diff(report.lengths) >= -1e-12)

    def test_minkowski_second_theorem(self, rng):
        # prod lambda_j * vol(ball) <= 2^r covol for the euclidean ball
        for n in (2, 3):
            for _ in range(5):
                g = random_basis(n, rng)
                report = successive_minima(g)
                lhs = float(np.prod(report.lengths)) * ball_volume(n)
                rhs = 2.0 ** n * abs(np.linalg.det(g))
                assert lhs <= rhs * (1.0 + 1e-9)

    def test_rank_cap(self):
        with pytest.raises(UnsupportedRankError):
            successive_minima(np.eye(5))


class TestDualInequality:
    def test_identity_equality_case(self):
        # n = 2: threshold constant 2^(n-1)/V_(n-1) = 2/2 = 1, equality
        assert dual_lambda1_inequality_check(np.eye(2))

    def test_diag(self):
        assert dual_lambda1_inequality_check(np.diag([10.0, 0.1]))

    def test_random(self, rng):
        assert all(dual_lambda1_inequality_check(random_basis(3, rng))
                   for _ in range(100))


class TestLLL:
    def test_preserves_lattice(self, rng):
        for n in (2, 3, 4):
            g = random_basis(n, rng)
            red, U = lll_reduce(g)
            assert np.max(np.abs(U.astype(float) @ g - red)) <= 1e-9
            assert abs(abs(round(np.linalg.det(U.astype(float)))) - 1) == 0

    def test_shortens(self, rng):
        g = np.array([[1.0, 0.0], [0.99, 0.01]])
        red, _ = lll_reduce(g)
        assert np.min(np.linalg.norm(red, axis=1)) <= 0.05


class TestNormSpec:
    def test_weighted_sup(self):
        norm = unit_log_norm(1, 1)
        assert norm(np.array([0.3, -0.8])) == pytest.approx(0.4)

    def test_bad_kind(self):
        with pytest.raises(DomainError):
            NormSpec("taxicab")

    def test_ball_volume(self):
        assert ball_volume(1) == pytest.approx(2.0)
        assert ball_volume(2) == pytest.approx(math.pi)
        assert ball_volume(0) == pytest.approx(1.0)
