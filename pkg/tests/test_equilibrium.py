"""
Tests for the equilibrium measure, its endpoints and its elliptic parametrization.
"""

import math
import unittest

import numpy as np

from sixvertex.asymptotics.constants import constants
from sixvertex.core.errors import DomainError
from sixvertex.core.params import ModelParams
from sixvertex.equilibrium import (
    EquilibriumMeasure,
    centroid_formula,
    density,
    elliptic_consistency,
    elliptic_coordinate,
    elliptic_inverse,
    endpoint_differences,
    endpoints,
    g_function,
    g_jump,
    lagrange_multiplier,
    minimal_energy,
    resolvent,
    resolvent_elliptic,
    u_infinity,
    variational_residual,
)
from sixvertex.special.elliptic import context_from_gamma


class TestEndpoints(unittest.TestCase):
    """Tests for the support endpoints."""

    def test_ordering(self):
        for gamma, t in ((1.0, 0.0), (1.0, 0.4), (0.7, -0.3), (2.5, 2.0)):
            e = endpoints(ModelParams(gamma, t))
            self.assertTrue(e.is_ordered(), (gamma, t))
            self.assertLess(e.alpha_p, 0.0)
            self.assertGreater(e.beta_p, 0.0)

    def test_symmetric_at_zero_t(self):
        """alpha = -beta and alpha' = -beta' when t = 0."""
        e = endpoints(ModelParams(1.0, 0.0))
        self.assertAlmostEqual(e.alpha, -e.beta, places=12)
        self.assertAlmostEqual(e.alpha_p, -e.beta_p, places=12)

    def test_reflection(self):
        """t -> -t mirrors the support."""
        params = ModelParams(0.8, 0.3)
        e = endpoints(params)
        mirrored = endpoints(params.reflected())
        self.assertAlmostEqual(e.alpha, -mirrored.beta, places=12)
        self.assertAlmostEqual(e.alpha_p, -mirrored.beta_p, places=12)

    def test_gap_product_forms(self):
        """The theta-product gaps match differences of the endpoints."""
        for gamma, t in ((1.0, 0.4), (0.7, -0.3), (1.8, 0.9)):
            params = ModelParams(gamma, t)
            direct = endpoints(params).gaps()
            products = endpoint_differences(params)
            for key, value in direct.items():
                self.assertAlmostEqual(products[key], value, delta=1e-12 * max(1.0, abs(value)), msg=key)

    def test_centroid(self):
        for gamma, t in ((1.0, 0.4), (0.7, -0.3)):
            params = ModelParams(gamma, t)
            self.assertAlmostEqual(centroid_formula(params), endpoints(params).centroid, places=12)


class TestEquilibriumMeasure(unittest.TestCase):
    """Tests for density, mass, resolvent, g-function and the variational conditions."""

    @classmethod
    def setUpClass(cls):
        cls.params = ModelParams(1.0, 0.4)
        cls.eq = EquilibriumMeasure(cls.params)
        cls.e = cls.eq.endpoints

    def test_total_mass(self):
        self.assertAlmostEqual(self.eq.mass(self.e.alpha, self.e.beta), 1.0, delta=1e-8)

    def test_right_mass(self):
        """The mass of [0, beta] is (1 + zeta) / 2."""
        expected = 0.5 * (1.0 + self.params.zeta)
        self.assertAlmostEqual(self.eq.mass(0.0, self.e.beta), expected, delta=1e-8)

    def test_mass_other_point(self):
        eq = EquilibriumMeasure(ModelParams(0.7, -0.3))
        e = eq.endpoints
        self.assertAlmostEqual(eq.mass(e.alpha, e.beta), 1.0, delta=1e-8)
        self.assertAlmostEqual(eq.mass(0.0, e.beta), 0.5 * (1.0 - 0.3 / 0.7), delta=1e-8)

    def test_density_shape(self):
        e = self.e
        self.assertEqual(density(e.alpha - 0.1, self.eq), 0.0)
        self.assertEqual(density(e.beta + 0.1, self.eq), 0.0)
        self.assertEqual(density(0.0, self.eq), self.eq.saturation)
        for x in np.linspace(e.alpha, e.alpha_p, 7)[1:-1]:
            value = density(float(x), self.eq)
            self.assertGreater(value, 0.0)
            self.assertLess(value, self.eq.saturation)
        self.assertAlmostEqual(density(e.alpha_p - 1e-10, self.eq), self.eq.saturation, delta=1e-3)
        self.assertAlmostEqual(density(e.beta_p + 1e-10, self.eq), self.eq.saturation, delta=1e-3)
        with self.assertRaises(DomainError):
            density(float("nan"), self.eq)

    def test_sample_density(self):
        samples = self.eq.sample_density(11)
        self.assertEqual(len(samples), 11)
        self.assertAlmostEqual(samples[0][0], self.e.alpha)
        self.assertAlmostEqual(samples[-1][0], self.e.beta)
        with self.assertRaises(DomainError):
            self.eq.sample_density(1)

    def test_resolvent_routes_agree(self):
        """Quadrature and sn-inversion give the same resolvent."""
        ctx = context_from_gamma(self.params.gamma)
        for z in (self.e.beta + 0.01, self.e.beta + 1.0, self.e.alpha - 0.5, self.e.alpha - 3.0):
            self.assertAlmostEqual(resolvent(z, self.eq), resolvent_elliptic(z, self.eq, ctx), delta=1e-8, msg=z)

    def test_resolvent_at_infinity(self):
        """z omega(z) -> 1."""
        z = 1.0e4
        self.assertAlmostEqual(z * resolvent(z, self.eq), 1.0, delta=1e-3)

    def test_resolvent_signs(self):
        self.assertGreater(resolvent(self.e.beta + 1.0, self.eq), 0.0)
        self.assertLess(resolvent(self.e.alpha - 1.0, self.eq), 0.0)
        with self.assertRaises(DomainError):
            resolvent(0.0, self.eq)

    def test_g_function_derivative(self):
        """g'(z) equals the resolvent."""
        z = self.e.beta + 2.0
        h = 1e-4
        derivative = (g_function(z + h, self.eq) - g_function(z - h, self.eq)) / (2 * h)
        self.assertAlmostEqual(derivative, resolvent(z, self.eq), delta=1e-6)

    def test_g_function_large_z(self):
        """g(z) - ln z -> 0."""
        z = 1.0e6
        self.assertAlmostEqual(g_function(z, self.eq) - math.log(z), 0.0, delta=1e-5)
        with self.assertRaises(DomainError):
            g_function(0.0, self.eq)

    def test_g_jump(self):
        e = self.e
        self.assertEqual(g_jump(e.alpha - 1.0, self.eq), 1.0)
        self.assertEqual(g_jump(e.beta + 1.0, self.eq), 0.0)
        inside = 0.5 * (e.alpha_p + e.beta_p)
        expected = self.eq.mass(inside, e.beta)
        self.assertAlmostEqual(g_jump(inside, self.eq), expected, delta=1e-8)
        self.assertAlmostEqual(g_jump(e.alpha_p, self.eq), self.eq.mass(e.alpha_p, e.beta), delta=1e-8)

    def test_variational_conditions(self):
        """Equality on the bands, the right inequalities elsewhere."""
        e = self.e
        for x in list(np.linspace(e.alpha, e.alpha_p, 6)[1:-1]) + list(np.linspace(e.beta_p, e.beta, 6)[1:-1]):
            self.assertLess(abs(variational_residual(float(x), self.eq)), 1e-6, x)
        for x in np.linspace(e.alpha_p, e.beta_p, 5)[1:-1]:
            self.assertGreater(variational_residual(float(x), self.eq), -1e-6, x)
        for x in (e.alpha - 0.5, e.beta + 0.5):
            self.assertLess(variational_residual(x, self.eq), 1e-6, x)

    def test_lagrange_multiplier(self):
        """l = 2 ln A - 2 with A from the asymptotic constants."""
        self.assertAlmostEqual(lagrange_multiplier(self.params), constants(self.params).l, places=12)

    def test_minimal_energy_finite(self):
        self.assertTrue(math.isfinite(minimal_energy(self.eq, nodes=8)))


class TestEllipticParametrization(unittest.TestCase):
    """Tests for the elliptic coordinate and the consistency report."""

    @classmethod
    def setUpClass(cls):
        cls.params = ModelParams(0.7, -0.3)
        cls.eq = EquilibriumMeasure(cls.params)
        cls.ctx = context_from_gamma(cls.params.gamma)

    def test_consistency(self):
        for gamma, t in ((1.0, 0.0), (1.0, 0.4), (0.7, -0.3)):
            report = elliptic_consistency(ModelParams(gamma, t))
            self.assertLess(report.max_residual, 1e-8, (gamma, t, report.as_dict()))

    def test_coordinate_endpoints(self):
        """u(beta) = 0, u(alpha) = K and u(inf) = K (1 - zeta) / 2."""
        e = self.eq.endpoints
        self.assertEqual(elliptic_coordinate(e.beta, self.eq), 0.0)
        self.assertAlmostEqual(elliptic_coordinate(e.alpha, self.eq), self.ctx.K, delta=1e-8)
        self.assertAlmostEqual(u_infinity(self.eq), 0.5 * self.ctx.K * (1.0 - self.params.zeta), delta=1e-8)
        with self.assertRaises(DomainError):
            elliptic_coordinate(0.0, self.eq)

    def test_inverse(self):
        """r(u(z)) = z on both sides of the support."""
        e = self.eq.endpoints
        for z in (e.beta + 0.7, e.alpha - 0.7):
            u = elliptic_coordinate(z, self.eq)
            self.assertAlmostEqual(elliptic_inverse(u, self.eq, self.ctx), z, delta=1e-7)


if __name__ == "__main__":
    unittest.main()
