"""
Tests for the first-order correction: turning point constants, f = 1/6
and the vanishing residue sums.
"""

import math
import unittest
from unittest.mock import patch

import numpy as np
import pytest

from sixvertex.asymptotics.subleading import (
    POINTS,
    c_constants,
    constants_at,
    correction_term,
    f_tilde,
    f_value,
    f_value_sweep,
    h_vector,
    q_matrix,
    q_pair_closed_forms,
    residue_identities,
    residue_sums,
    residue_terms,
    turning_point_rows,
)
from sixvertex.core.params import ModelParams
from sixvertex.equilibrium.endpoints import endpoints
from sixvertex.special.theta import ThetaEvaluator


class TestSubleadingConstants(unittest.TestCase):
    """Tests for Xi, xi, eta, C, A and B."""

    def setUp(self):
        self.params = ModelParams(1.2, 0.4)
        self.n = 3
        self.values = constants_at(self.params, self.n)

    def test_all_finite_and_A_positive(self):
        for family in ("Xi", "xi", "eta", "Cc", "Aa", "Bb"):
            table = getattr(self.values, family)
            self.assertEqual(set(table), set(POINTS))
            for value in table.values():
                self.assertTrue(math.isfinite(value), family)
        for value in self.values.Aa.values():
            self.assertGreater(value, 0.0)

    def test_Xi_alpha(self):
        """Xi_alpha theta_3^2(omega/2) theta_4^2(n omega) = theta_3^2(0) theta_4^2(n omega + omega/2)."""
        th = ThetaEvaluator(self.params.nome)
        omega = self.params.omega
        lhs = self.values.Xi["alpha"] * th(3, 0.5 * omega) ** 2 * th(4, self.n * omega) ** 2
        rhs = th.a3**2 * th(4, self.n * omega + 0.5 * omega) ** 2
        self.assertAlmostEqual(lhs, rhs, places=12)

    def test_xi_period_two_at_zero_t(self):
        """With t = 0 the argument advances by pi/2 per step, so xi repeats with period 2."""
        params = ModelParams(1.0, 0.0)
        first = constants_at(params, 2).xi["alpha"]
        second = constants_at(params, 4).xi["alpha"]
        self.assertAlmostEqual(first, second, places=12)
        th = ThetaEvaluator(params.nome)
        z = math.pi / 4 + math.pi
        expected = th.log_derivative(3, math.pi / 4) - th.log_derivative(4, z)
        self.assertAlmostEqual(first, expected, places=12)

    def test_C_from_endpoints(self):
        """C evaluated from direct endpoint differences matches the theta-product gaps."""
        direct = c_constants(endpoints(self.params).gaps())
        for point in POINTS:
            self.assertAlmostEqual(direct[point], self.values.Cc[point], delta=1e-10 * max(1.0, abs(direct[point])))
        self.assertAlmostEqual(sum(direct.values()), sum(self.values.Cc.values()), delta=1e-10)

    def test_rows(self):
        rows = turning_point_rows(self.params.omega, self.params.nome)
        self.assertEqual([row.point for row in rows], list(POINTS))
        self.assertEqual([(row.a, row.b) for row in rows], [(4, 3), (1, 2), (2, 1), (3, 4)])
        self.assertTrue(all(row.D > 0 for row in rows))


class TestCorrectionTerm(unittest.TestCase):
    """Tests for f(n omega, omega) = 1/6."""

    def test_one_sixth(self):
        for gamma, t in ((1.0, 0.0), (1.2, 0.4), (0.7, -0.3), (2.5, 1.5)):
            params = ModelParams(gamma, t)
            for n in (1, 2, 5):
                self.assertAlmostEqual(f_value(params, n), 1.0 / 6.0, delta=1e-10, msg=(gamma, t, n))

    def test_n_independence(self):
        params = ModelParams(0.9, 0.2)
        values = [f_value(params, n) for n in range(1, 8)]
        for left, right in zip(values, values[1:]):
            self.assertAlmostEqual(left, right, delta=1e-10)

    def test_real_part_vanishes(self):
        for gamma, t in ((1.1, -0.5), (0.6, 0.2), (2.5, 1.0)):
            term = correction_term(ModelParams(gamma, t), 4)
            self.assertLess(term.x_real_part, 1e-12, (gamma, t))
        self.assertAlmostEqual(term.X, term.X_alpha + term.X_alpha_p + term.X_beta_p + term.X_beta)

    def test_real_part_detects_wrong_constants(self):
        """A shifted C_alpha makes the assembled sum acquire a real part."""
        original = c_constants

        def shifted(gaps):
            values = dict(original(gaps))
            values["alpha"] += 1.0
            return values

        params = ModelParams(1.1, -0.5)
        with patch("sixvertex.asymptotics.subleading.c_constants", side_effect=shifted):
            term = correction_term(params, 4)
        self.assertGreater(term.x_real_part, 1e-6)
        self.assertGreater(abs(term.f_value - 1.0 / 6.0), 1e-6)

    def test_f_tilde_constant(self):
        """f~ is constant in z and equal to 1/6."""
        params = ModelParams(1.3, 0.2)
        z = np.linspace(-math.pi, math.pi, 17)
        values = f_tilde(z, params.omega, params.nome)
        self.assertEqual(values.shape, (17,))
        np.testing.assert_allclose(values, 1.0 / 6.0, atol=1e-10)

    def test_f_tilde_matches_f(self):
        params = ModelParams(1.0, 0.3)
        n = 3
        z = (n + 0.5) * params.omega
        self.assertAlmostEqual(float(f_tilde(z, params.omega, params.nome)), f_value(params, n), delta=1e-10)

    def test_sweep(self):
        result = f_value_sweep((0.6, 1.4), (-0.5, 0.5), range(1, 4))
        self.assertEqual(result["points"], 12)
        self.assertLess(result["max_dev"], 1e-10)
        self.assertLess(result["max_step"], 1e-10)


class TestResidueSums(unittest.TestCase):
    """Tests for the Q_jk coefficients and the three vanishing sums."""

    def test_fixed_point(self):
        """gamma = 1.2, t = 0.4, z = 0.7."""
        residues = residue_identities(ModelParams(1.2, 0.4), 0.7)
        for value in residues:
            self.assertLess(value, 1e-11)

    def test_random_draws(self):
        rng = np.random.default_rng(17)
        for _ in range(50):
            gamma = rng.uniform(0.3, 3.0)
            params = ModelParams(gamma, rng.uniform(-0.9, 0.9) * gamma)
            z = rng.uniform(-math.pi, math.pi)
            self.assertLess(max(residue_identities(params, z)), 1e-11)

    def test_array_argument(self):
        params = ModelParams(1.0, 0.1)
        z = np.linspace(-1.0, 1.0, 5)
        q7, q8, q9 = residue_sums(z, params.omega, params.nome)
        self.assertEqual(q7.shape, (5,))
        np.testing.assert_allclose(np.abs([q7, q8, q9]), 0.0, atol=1e-11)
        self.assertEqual(h_vector(list(z), params.omega, params.nome).shape, (4, 4, 5))

    def test_terms_sum_to_residue_sums(self):
        params = ModelParams(0.8, -0.3)
        z = np.linspace(-2.0, 2.0, 7)
        terms = residue_terms(z, params.omega, params.nome)
        sums = residue_sums(z, params.omega, params.nome)
        for part, total in zip(terms, sums):
            self.assertEqual(part.shape, (4, 7))
            np.testing.assert_allclose(part.sum(axis=0), total, rtol=0, atol=1e-15)

    def test_pair_closed_forms(self):
        """Q_j3 + Q_j4 agree with their theta-only closed forms."""
        for gamma, t in ((1.2, 0.4), (0.5, -0.2)):
            params = ModelParams(gamma, t)
            Q = q_matrix(params.omega, params.nome)
            closed = q_pair_closed_forms(params.omega, params.nome)
            np.testing.assert_allclose(Q[:, 2] + Q[:, 3], closed, rtol=1e-12, atol=1e-14)

    def test_q_matrix_shape(self):
        params = ModelParams(1.0, 0.0)
        Q = q_matrix(params.omega, params.nome)
        self.assertEqual(Q.shape, (4, 4))
        self.assertTrue(np.all(np.isfinite(Q)))


@pytest.mark.slow
class TestSubleadingSlow(unittest.TestCase):
    """The full grid: 5 gammas x 5 t-values x n = 1..12."""

    def test_grid(self):
        gammas = (0.4, 0.8, 1.2, 2.0, 3.0)
        fractions = (-0.8, -0.4, 0.0, 0.4, 0.8)
        result = f_value_sweep(gammas, fractions, range(1, 13))
        self.assertEqual(result["points"], 300)
        self.assertLess(result["max_dev"], 1e-10)
        self.assertLess(result["max_step"], 1e-10)


if __name__ == "__main__":
    unittest.main()
