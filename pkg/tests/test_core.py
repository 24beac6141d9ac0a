"""
Basic tests for the core functionality of the sixvertex package.

This module tests the model parameters, the precision helpers and the
route comparator, using mock routes where the numerics do not matter.
"""

import math
import unittest

import mpmath
from mpmath import mpf

from sixvertex.core import DomainError, ModelParams, PartitionRoute, RouteComparator
from sixvertex.core.bigreal import check_precision, digits_for_bits, factorial_product, relative_difference
from sixvertex.routes import ROUTES


class MockRoute(PartitionRoute):
    """A route returning ln Z_n = n^2 for sizes up to max_n."""

    name = "mock"
    max_n = 5
    offset = 0

    def supports(self, n):
        return 1 <= n <= self.max_n

    def log_partition(self, params, n, **options):
        self.options = options
        return mpf(n * n + self.offset)

    def describe(self):
        return {"name": self.name, "max_n": self.max_n}


class ShiftedRoute(MockRoute):
    name = "shifted"
    max_n = 3
    offset = 1e-6


class TestModelParams(unittest.TestCase):
    """Tests for ModelParams."""

    def test_derived_quantities(self):
        params = ModelParams(1.0, 0.4)
        self.assertAlmostEqual(params.zeta, 0.4)
        self.assertAlmostEqual(params.omega, math.pi * 0.7)
        self.assertAlmostEqual(params.q, math.exp(-math.pi**2 / 2))
        self.assertAlmostEqual(params.a, math.sinh(0.6))
        self.assertAlmostEqual(params.b, math.sinh(1.4))
        self.assertAlmostEqual(params.c, math.sinh(2.0))
        self.assertLess(params.Delta, -1.0)
        self.assertEqual(params.nome.q, params.q)

    def test_invalid_parameters(self):
        for gamma, t in ((0.0, 0.0), (-1.0, 0.0), (1.0, 1.0), (1.0, -1.2), (float("nan"), 0.0)):
            with self.assertRaises(DomainError, msg=(gamma, t)):
                ModelParams(gamma, t)

    def test_domain_error_is_value_error(self):
        with self.assertRaises(ValueError):
            ModelParams(1.0, 2.0)

    def test_reflection_swaps_weights(self):
        params = ModelParams(1.3, 0.5)
        mirrored = params.reflected()
        self.assertAlmostEqual(params.a, mirrored.b)
        self.assertAlmostEqual(params.b, mirrored.a)
        self.assertAlmostEqual(params.omega + mirrored.omega, math.pi)

    def test_big_weights(self):
        params = ModelParams(0.9, -0.2)
        with mpmath.workprec(200):
            a, b, c = params.big_weights()
            self.assertEqual(a, mpmath.sinh(mpf(0.9) - mpf(-0.2)))
            self.assertAlmostEqual(float(c), params.c, places=14)


class TestBigReal(unittest.TestCase):
    """Tests for the precision helpers."""

    def test_check_precision(self):
        self.assertEqual(check_precision(64), 64)
        with self.assertRaises(DomainError):
            check_precision(63)
        with self.assertRaises(DomainError):
            check_precision(100.5)

    def test_digits(self):
        self.assertEqual(digits_for_bits(53), 15)
        self.assertGreater(digits_for_bits(256), 70)

    def test_relative_difference(self):
        self.assertEqual(relative_difference(mpf(0), mpf(0)), 0)
        self.assertEqual(relative_difference(mpf(2), mpf(1)), mpf("0.5"))

    def test_factorial_product(self):
        self.assertEqual(factorial_product(1), 1)
        self.assertEqual(factorial_product(4), 1 * 1 * 2 * 6)


class TestRouteComparator(unittest.TestCase):
    """Tests for RouteComparator."""

    def test_initialization(self):
        comparator = RouteComparator({"mock": MockRoute, "shifted": ShiftedRoute}, "mock", "shifted")
        self.assertIsInstance(comparator.reference_route, MockRoute)
        self.assertIsInstance(comparator.candidate_route, ShiftedRoute)
        self.assertEqual(comparator.reference_type, "mock")

    def test_invalid_route(self):
        registry = {"mock": MockRoute}
        with self.assertRaises(ValueError):
            RouteComparator(registry, "mock", "invalid")
        with self.assertRaises(ValueError):
            RouteComparator(registry, "invalid", "mock")

    def test_compare_skips_unsupported_sizes(self):
        comparator = RouteComparator({"mock": MockRoute, "shifted": ShiftedRoute}, "mock", "shifted")
        report = comparator.compare(ModelParams(1.0, 0.0), range(1, 6), candidate_options={"C": 2.0})
        self.assertEqual([row["n"] for row in report.rows], [1, 2, 3])
        self.assertEqual(report.skipped, [4, 5])
        self.assertEqual(comparator.candidate_route.options, {"C": 2.0})
        self.assertAlmostEqual(report.max_log_difference, 1e-6, delta=1e-12)

    def test_empty_report(self):
        comparator = RouteComparator({"mock": MockRoute}, "mock", "mock")
        report = comparator.compare(ModelParams(1.0, 0.0), [])
        self.assertEqual(report.max_log_difference, 0.0)

    def test_exact_against_brute(self):
        """The exact and enumeration routes agree where both apply."""
        comparator = RouteComparator(ROUTES, "exact", "brute")
        options = {"precision_bits": 256}
        report = comparator.compare(ModelParams(1.1, 0.3), [1, 2, 3, 4, 7], options, options)
        self.assertEqual(report.skipped, [7])
        self.assertLess(report.max_log_difference, 1e-40)


if __name__ == "__main__":
    unittest.main()
