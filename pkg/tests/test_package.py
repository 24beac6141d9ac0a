"""
Tests for the package entry points and integration between components.

This module tests the main package functionality and integration points.
"""

import unittest
from unittest.mock import MagicMock, patch

import sixvertex
from sixvertex.cli.commands import CommandResult
from sixvertex.cli.config import RunConfig


class TestPackageIntegration(unittest.TestCase):
    """Tests for package-level functionality."""

    def test_version_exists(self):
        """Test that the version attribute exists."""
        self.assertTrue(hasattr(sixvertex, "__version__"))
        self.assertIsInstance(sixvertex.__version__, str)

    def test_exported_symbols(self):
        """Test that expected symbols are exported."""
        expected_exports = [
            "ModelParams", "PartitionRoute", "RouteComparator", "ROUTES",
            "list_routes", "get_route", "run_command"
        ]
        for symbol in expected_exports:
            self.assertTrue(hasattr(sixvertex, symbol), f"Expected symbol {symbol} to be exported")

    def test_route_registry(self):
        self.assertEqual(sixvertex.list_routes(), ["exact", "brute", "asym"])
        self.assertIs(sixvertex.get_route("EXACT"), sixvertex.ROUTES["exact"])
        self.assertIsNone(sixvertex.get_route("nonexistent"))

    @patch("sixvertex.routes.ROUTES")
    def test_list_routes_integration(self, mock_routes):
        """Test that list_routes uses the ROUTES registry."""
        mock_routes.keys.return_value = ["mock1", "mock2"]

        result = sixvertex.list_routes()

        self.assertEqual(result, ["mock1", "mock2"])
        mock_routes.keys.assert_called_once()

    @patch("sixvertex.cli.commands.run_command")
    def test_run_command_convenience_function(self, mock_run_command):
        """Test the run_command convenience function builds a config from keywords."""
        mock_run_command.return_value = CommandResult({"ok": True})

        result = sixvertex.run_command("exact", gamma=0.8, t=0.1, n=3)

        self.assertEqual(result.data, {"ok": True})
        name, config = mock_run_command.call_args[0]
        self.assertEqual(name, "exact")
        self.assertEqual((config.gamma, config.t, config.n), (0.8, 0.1, 3))

    @patch("sixvertex.cli.commands.run_command")
    def test_run_command_with_config(self, mock_run_command):
        config = RunConfig(gamma=2.0, t=0.5)
        mock_run_command.return_value = MagicMock()

        sixvertex.run_command("params", config)

        mock_run_command.assert_called_once_with("params", config)

    def test_run_command_end_to_end(self):
        """n = 1 is sinh(2 gamma) on every route."""
        data = sixvertex.run_command("brute", gamma=1.0, t=0.2, n=1, precision_bits=64).data
        self.assertEqual(data["count"], 1)
        self.assertTrue(data["Z"].startswith("3.62686"))

    def test_invalid_keyword(self):
        with self.assertRaises(ValueError):
            sixvertex.run_command("params", gamma=1.0, t=3.0)


if __name__ == "__main__":
    unittest.main()
