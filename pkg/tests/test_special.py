import math

import numpy as np
import pytest

from qwalk1d.coin import hadamard_coin, real_coin
from qwalk1d.errors import NonConvergentError, PoleAtCError
from qwalk1d.special import (
    gamma_value,
    hyp2f1,
    jacobi_p,
    jacobi_sum_identity,
    pfaff_residual,
    rho_value,
)

# Termination-safe Pfaff grid: either the series terminates (first parameter a
# non-positive integer, valid for any z) or both series converge (|z| < 1/2
# keeps |z/(z-1)| < 1).
PFAFF_TERMINATING = [
    (a, b, c, z)
    for a in (-5.0, -3.0, -1.0)
    for b in (0.5, 2.0, 4.5)
    for c in (1.5, 3.0, 5.25)
    for z in (-0.75, -0.2, 0.3, 0.7)
]
PFAFF_CONVERGENT = [
    (a, b, c, z)
    for a in (0.25, 0.5, 1.5)
    for b in (0.5, 1.0)
    for c in (1.75, 3.5)
    for z in (-0.4, 0.15, 0.45)
]


class TestGamma:
    def test_half_integer(self):
        assert abs(gamma_value(0.5) - math.sqrt(math.pi)) < 1e-13

    def test_factorials(self):
        for n in range(1, 12):
            assert gamma_value(float(n)) == pytest.approx(math.factorial(n - 1), rel=1e-14)

    def test_domain(self):
        with pytest.raises(ValueError):
            gamma_value(0.0)


class TestHyp2f1:
    def test_at_zero(self):
        assert hyp2f1(3.7, -2.2, 1.9, 0.0) == 1.0

    def test_geometric_like_closed_form(self):
        assert abs(hyp2f1(0.5, 1.0, 1.0, 0.5) - math.sqrt(2.0)) < 1e-14
        for z in np.arange(0.1, 1.0, 0.1):
            assert abs(hyp2f1(0.5, 1.0, 1.0, float(z)) - (1.0 - z) ** -0.5) < 1e-12

    def test_two_term_series(self):
        for z in (-0.7, 0.2, 0.9):
            assert hyp2f1(-1.0, 3.0, 2.0, z) == pytest.approx(1.0 - 1.5 * z, abs=1e-15)

    def test_terminating_beats_unit_disc(self):
        # terminating series are polynomials, fine at |z| > 1
        assert hyp2f1(-2.0, 1.0, 1.0, 3.0) == pytest.approx((1.0 - 3.0) ** 2, abs=1e-12)

    def test_divergent_argument_rejected(self):
        with pytest.raises(NonConvergentError):
            hyp2f1(0.5, 1.0, 2.0, 1.5)

    def test_pole_at_c(self):
        with pytest.raises(PoleAtCError):
            hyp2f1(0.5, 1.0, -2.0, 0.3)
        with pytest.raises(PoleAtCError):
            hyp2f1(-5.0, 1.0, -2.0, 0.3)

    def test_pole_avoided_when_terminating_first(self):
        # series stops (a = -2) before the pole of c = -5 is reached
        value = hyp2f1(-2.0, 1.0, -5.0, 0.4)
        expected = 1.0 + (-2.0) * 1.0 / (-5.0) * 0.4 + ((-2.0) * (-1.0) * 1.0 * 2.0) / ((-5.0) * (-4.0) * 2.0) * 0.16
        assert value == pytest.approx(expected, abs=1e-14)


class TestPfaff:
    @pytest.mark.parametrize("args", PFAFF_TERMINATING + PFAFF_CONVERGENT)
    def test_residual_grid(self, args):
        assert pfaff_residual(*args) < 1e-11

    def test_specific_cases(self):
        assert pfaff_residual(-3.0, 5.0, 2.0, 0.3) < 1e-13
        assert pfaff_residual(0.5, 1.0, 1.0, 0.5) < 1e-12
        assert pfaff_residual(1.3, 0.7, 2.2, 0.0) == 0.0


class TestJacobi:
    def test_degree_zero(self):
        assert jacobi_p(0, 1.5, -0.5, 0.3) == 1.0

    def test_degree_one(self):
        for nu, mu, x in [(1.5, 2.5, 0.3), (0.0, 4.0, -0.6), (2.0, 0.5, 0.9)]:
            expected = (nu + 1.0) + (nu + mu + 2.0) * (x - 1.0) / 2.0
            assert jacobi_p(1, nu, mu, x) == pytest.approx(expected, abs=1e-13)

    def test_orthogonality_by_quadrature(self):
        nodes, weights = np.polynomial.legendre.leggauss(64)
        p2 = np.array([jacobi_p(2, 1.0, 3.0, t) for t in nodes])
        p3 = np.array([jacobi_p(3, 1.0, 3.0, t) for t in nodes])
        weight_fn = (1.0 - nodes) * (1.0 + nodes) ** 3
        assert abs(np.dot(weights, p2 * p3 * weight_fn)) < 1e-10

    def test_legendre_special_case(self):
        # nu = mu = 0 reduces to Legendre values
        legendre = np.polynomial.legendre.Legendre.basis(5)
        for x in (-0.8, -0.1, 0.4, 0.95):
            assert jacobi_p(5, 0.0, 0.0, x) == pytest.approx(float(legendre(x)), abs=1e-12)

    def test_rho_domain(self):
        with pytest.raises(ValueError):
            rho_value(10, 6, 0, 0.5)
        with pytest.raises(ValueError):
            rho_value(10, 3, 2, 0.5)


class TestSumIdentity:
    def test_hadamard_example(self):
        lhs, rhs = jacobi_sum_identity(hadamard_coin(), 8, 3, 0)
        assert abs(lhs - rhs) < 1e-11

    def test_single_term_case(self):
        # n = 2k with k = 1: one term, weight 1, degree-0 polynomial
        lhs, rhs = jacobi_sum_identity(hadamard_coin(), 2, 1, 1)
        assert lhs == 1.0
        assert rhs == pytest.approx(1.0, abs=1e-14)

    @pytest.mark.parametrize("abs_a_sq", [0.3, 0.6, 0.9])
    def test_parameter_sweep(self, abs_a_sq):
        coin = real_coin(math.sqrt(abs_a_sq))
        for n in range(2, 21):
            for k in range(1, n // 2 + 1):
                for i in (0, 1):
                    lhs, rhs = jacobi_sum_identity(coin, n, k, i)
                    assert abs(lhs - rhs) <= 1e-10 * max(1.0, abs(lhs), abs(rhs))
