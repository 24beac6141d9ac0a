"""
Tests for the CLI module of the sixvertex package.

This module tests configuration loading, subcommand dispatch, output
formats and exit codes.
"""

import io
import json
import os
import tempfile
import unittest
from unittest.mock import patch

import mpmath
import pytest

from sixvertex.cli.commands import COMMANDS, list_commands, run_command
from sixvertex.cli.config import PRECISION_ENV, RunConfig, build_config, load_config
from sixvertex.cli.main import EXIT_DOMAIN, EXIT_PRECISION, EXIT_TOLERANCE, EXIT_USAGE, format_result, main
from sixvertex.cli.selftest import IDENTITY_TOLERANCE, RESIDUE_TOLERANCE, identity_tolerances
from sixvertex.core.errors import PrecisionExhaustedError, ToleranceError


def _write_config(text):
    with tempfile.NamedTemporaryFile(mode="w", suffix=".conf", delete=False) as f:
        f.write(text)
        return f.name


def _run_main(argv):
    """Run main() and return (exit code, captured stdout)."""
    with patch("sys.stdout", new_callable=io.StringIO) as stdout:
        code = main(argv)
    return code, stdout.getvalue()


class TestConfig(unittest.TestCase):
    """Tests for load_config and build_config."""

    def test_load_config(self):
        path = _write_config("# comment\n\ngamma = 0.8\nt = -0.2\nprecision-bits = 512\noutput = csv\ndump = yes\n")
        try:
            values = load_config(path)
        finally:
            os.unlink(path)
        self.assertEqual(values, {"gamma": 0.8, "t": -0.2, "precision_bits": 512, "output": "csv", "dump": True})

    def test_load_config_missing_file(self):
        with self.assertRaises(ValueError):
            load_config("/nonexistent/sixvertex.conf")

    def test_load_config_unknown_key(self):
        path = _write_config("temperature = 3\n")
        try:
            with self.assertRaises(ValueError) as ctx:
                load_config(path)
        finally:
            os.unlink(path)
        self.assertIn("temperature", str(ctx.exception))

    def test_load_config_malformed_line(self):
        path = _write_config("gamma 1.0\n")
        try:
            with self.assertRaises(ValueError):
                load_config(path)
        finally:
            os.unlink(path)

    def test_precedence(self):
        """Flags override the file, the file overrides the environment."""
        path = _write_config("gamma = 2.0\nt = 0.5\nprecision_bits = 384\n")
        try:
            config = build_config({"t": 0.1, "n": None}, path, environ={PRECISION_ENV: "1024"})
        finally:
            os.unlink(path)
        self.assertEqual(config.gamma, 2.0)
        self.assertEqual(config.t, 0.1)
        self.assertEqual(config.n, 4)
        self.assertEqual(config.precision_bits, 384)

    def test_environment_precision(self):
        with patch.dict(os.environ, {PRECISION_ENV: "768"}):
            self.assertEqual(build_config({}).precision_bits, 768)
        with self.assertRaises(ValueError):
            build_config({}, environ={PRECISION_ENV: "many"})

    def test_validate(self):
        for values in (
            {"gamma": 1.0, "t": 1.0},
            {"gamma": -1.0},
            {"precision_bits": 32},
            {"n_min": 5, "n_max": 4},
            {"output": "xml"},
        ):
            with self.assertRaises(ValueError, msg=values):
                build_config(values, environ={})
        self.assertEqual(RunConfig().validate().output, "json")
        self.assertEqual(RunConfig().as_dict()["precision_bits"], 256)


class TestCommands(unittest.TestCase):
    """Tests for the subcommand registry and handlers."""

    def test_list_commands(self):
        commands = list_commands()
        for name in ("params", "endpoints", "density", "exact", "brute", "asym", "compare", "toda", "identities", "subleading", "selftest"):
            self.assertIn(name, commands)
        self.assertEqual(len(commands), len(COMMANDS))

    def test_unknown_command(self):
        with self.assertRaises(ValueError):
            run_command("nonexistent", RunConfig())

    def test_endpoints_symmetric(self):
        data = run_command("endpoints", RunConfig(gamma=1.0, t=0.0)).data
        self.assertAlmostEqual(data["alpha"], -data["beta"], places=12)

    def test_density_rows(self):
        result = run_command("density", RunConfig(gamma=0.7, t=-0.3, samples=5))
        self.assertEqual(len(result.rows), 5)
        self.assertEqual(tuple(result.columns), ("x", "rho"))
        self.assertAlmostEqual(result.data["mass"], 1.0, delta=1e-8)

    def test_exact_matches_brute(self):
        config = RunConfig(gamma=1.0, t=0.3, n=4, precision_bits=256)
        exact = run_command("exact", config).data["Z_n"]
        brute = run_command("brute", config).data["Z"]
        with mpmath.workprec(256):
            x, y = mpmath.mpf(exact), mpmath.mpf(brute)
            self.assertLess(abs(x - y) / abs(y), mpmath.mpf("1e-60"))

    def test_brute_dump(self):
        result = run_command("brute", RunConfig(n=2, dump=True))
        self.assertEqual(sorted(result.lines), ["26/61", "63/46"])
        self.assertEqual(result.data["count"], 2)

    def test_subleading(self):
        data = run_command("subleading", RunConfig(gamma=1.2, t=0.4, n=3)).data
        self.assertLess(data["dev_from_one_sixth"], 1e-10)
        self.assertTrue(all(value < 1e-11 for value in data["residues"]))

    def test_asym_with_given_C(self):
        data = run_command("asym", RunConfig(gamma=1.0, t=0.0, n=6, C=1.5)).data
        self.assertEqual(data["C"], 1.5)
        self.assertNotIn("C_increments", data)
        self.assertAlmostEqual(data["c1"], 1.0 / 6.0, delta=1e-10)


class TestMain(unittest.TestCase):
    """Tests for main() and its exit codes."""

    def test_version(self):
        code, output = _run_main(["--version"])
        self.assertEqual(code, 0)
        self.assertTrue(output.startswith("sixvertex version"))

    def test_no_command(self):
        with patch("sys.stderr", new_callable=io.StringIO):
            code, _ = _run_main([])
        self.assertEqual(code, EXIT_USAGE)

    def test_unknown_command_is_usage_error(self):
        with patch("sys.stderr", new_callable=io.StringIO):
            code, _ = _run_main(["nonexistent"])
        self.assertEqual(code, EXIT_USAGE)

    def test_domain_error(self):
        code, output = _run_main(["params", "--gamma", "1.0", "--t", "1.5"])
        self.assertEqual(code, EXIT_DOMAIN)
        self.assertEqual(output, "")

    def test_nonpositive_C(self):
        code, _ = _run_main(["asym", "--C", "0"])
        self.assertEqual(code, EXIT_DOMAIN)

    def test_precision_exhausted(self):
        failure = PrecisionExhaustedError("no agreement", bits=4096)
        with patch("sixvertex.cli.commands.partition_exact", side_effect=failure):
            code, _ = _run_main(["exact", "--n", "5"])
        self.assertEqual(code, EXIT_PRECISION)

    def test_tolerance_error(self):
        with patch("sixvertex.cli.selftest.run_selftest", side_effect=ToleranceError("theta_identities", 1e-3, 1e-12)):
            code, _ = _run_main(["selftest"])
        self.assertEqual(code, EXIT_TOLERANCE)

    def test_json_output(self):
        code, output = _run_main(["endpoints", "--gamma", "1.0", "--t", "0.0"])
        self.assertEqual(code, 0)
        data = json.loads(output)
        self.assertAlmostEqual(data["alpha"], -data["beta"], places=12)

    def test_csv_output(self):
        code, output = _run_main(["--format", "csv", "density", "--gamma", "0.7", "--t", "-0.3", "--samples", "3"])
        self.assertEqual(code, 0)
        lines = output.splitlines()
        self.assertEqual(lines[0], "x,rho")
        self.assertEqual(len(lines), 4)

    def test_config_file_with_flags(self):
        path = _write_config("gamma = 1.0\nt = 0.3\nn = 1\n")
        try:
            code, output = _run_main(["--config", path, "exact", "--n", "2"])
        finally:
            os.unlink(path)
        self.assertEqual(code, 0)
        data = json.loads(output)
        self.assertEqual(data["n"], 2)
        self.assertEqual(data["t"], 0.3)

    def test_deterministic(self):
        argv = ["identities", "--trials", "5", "--seed", "3"]
        _, first = _run_main(argv)
        _, second = _run_main(argv)
        self.assertEqual(first, second)

    def test_format_result_text(self):
        result = run_command("params", RunConfig())
        text = format_result(result, "text", 53)
        self.assertIn("gamma: 1", text)
        self.assertTrue(text.endswith("\n"))


class TestSelftestTolerances(unittest.TestCase):
    """Tests for the identity and residue tolerances of the selftest."""

    def test_defaults(self):
        self.assertEqual(identity_tolerances(RunConfig()), (IDENTITY_TOLERANCE, RESIDUE_TOLERANCE))

    def test_override_keeps_ratio(self):
        identity, residue = identity_tolerances(RunConfig(tolerance=1e-9))
        self.assertEqual(identity, 1e-9)
        self.assertAlmostEqual(residue, 1e-8, delta=1e-20)


@pytest.mark.slow
class TestIdentitiesCommandSlow(unittest.TestCase):

    def test_identities_thousand_trials(self):
        code, output = _run_main(["identities", "--trials", "1000", "--seed", "7"])
        self.assertEqual(code, 0)
        data = json.loads(output)
        self.assertEqual(data["trials"], 1000)
        self.assertLessEqual(data["max_residual"], 1e-12)


if __name__ == "__main__":
    unittest.main()
