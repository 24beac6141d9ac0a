"""
Run configuration for the command-line interface

A RunConfig collects everything one subcommand needs. Values come from
explicit flags, then an optional ``key = value`` config file, then the
SIXV_PRECISION_BITS environment variable (precision only), then the
defaults below.
"""

import logging
import os
from dataclasses import dataclass, fields, replace
from typing import Any, Dict, Mapping, Optional

from sixvertex.core.bigreal import DEFAULT_PRECISION_BITS, MIN_PRECISION_BITS

logger = logging.getLogger(__name__)

PRECISION_ENV = "SIXV_PRECISION_BITS"

OUTPUT_FORMATS = ("json", "csv", "text")


@dataclass(frozen=True)
class RunConfig:
    gamma: float = 1.0
    t: float = 0.0
    n: int = 4
    n_min: int = 1
    n_max: int = 4
    precision_bits: int = DEFAULT_PRECISION_BITS
    tolerance: Optional[float] = None
    variational_tolerance: float = 1e-6
    output: str = "json"
    seed: int = 0
    trials: int = 1000
    samples: int = 101
    start_bits: Optional[int] = None
    dump: bool = False
    C: Optional[float] = None

    def validate(self) -> "RunConfig":
        """Check the run-wide invariants.

        Raises:
            ValueError: If |t| >= gamma, precision_bits < 64 or a size is invalid.
        """
        if self.gamma <= 0:
            raise ValueError(f"gamma must be positive, got {self.gamma}")
        if abs(self.t) >= self.gamma:
            raise ValueError(f"|t| must be smaller than gamma, got gamma={self.gamma}, t={self.t}")
        if self.precision_bits < MIN_PRECISION_BITS:
            raise ValueError(f"precision_bits must be at least {MIN_PRECISION_BITS}, got {self.precision_bits}")
        if self.start_bits is not None and self.start_bits < MIN_PRECISION_BITS:
            raise ValueError(f"start_bits must be at least {MIN_PRECISION_BITS}, got {self.start_bits}")
        if self.n < 1 or self.n_min < 1 or self.n_max < self.n_min:
            raise ValueError(f"Invalid sizes: n={self.n}, n_min={self.n_min}, n_max={self.n_max}")
        if self.output not in OUTPUT_FORMATS:
            raise ValueError(f"Unsupported output format: {self.output}. Valid formats: {', '.join(OUTPUT_FORMATS)}")
        if self.trials < 1 or self.samples < 2:
            raise ValueError(f"trials must be >= 1 and samples >= 2, got trials={self.trials}, samples={self.samples}")
        return self

    def as_dict(self) -> Dict[str, Any]:
        return {f.name: getattr(self, f.name) for f in fields(self)}


_FIELD_TYPES = {f.name: f.type for f in fields(RunConfig)}


def _convert(key: str, raw: str) -> Any:
    kind = _FIELD_TYPES[key]
    text = raw.strip()
    if kind in (bool, "bool"):
        lowered = text.lower()
        if lowered in ("1", "true", "yes", "on"):
            return True
        if lowered in ("0", "false", "no", "off"):
            return False
        raise ValueError(f"Invalid boolean for '{key}': {raw}")
    if kind in (str, "str"):
        return text
    if text.lower() == "none" and "Optional" in str(kind):
        return None
    try:
        if "int" in str(kind):
            return int(text)
        return float(text)
    except ValueError:
        raise ValueError(f"Invalid value for '{key}': {raw}")


def load_config(config_file: str) -> Dict[str, Any]:
    """Load ``key = value`` pairs from a config file.

    Blank lines and lines starting with ``#`` are ignored.

    Args:
        config_file: Path to the configuration file

    Returns:
        Dict[str, Any]: The typed values found in the file

    Raises:
        ValueError: If the file is missing or unreadable, a line is malformed or a key is unknown
    """
    try:
        with open(config_file, "r") as f:
            lines = f.readlines()
    except FileNotFoundError:
        raise ValueError(f"Config file not found: {config_file}")
    except OSError as e:
        raise ValueError(f"Error reading config file: {e}")

    values: Dict[str, Any] = {}
    for number, line in enumerate(lines, start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        if "=" not in stripped:
            raise ValueError(f"Malformed line {number} in {config_file}: {stripped}")
        key, raw = (part.strip() for part in stripped.split("=", 1))
        key = key.replace("-", "_")
        if key not in _FIELD_TYPES:
            valid = ", ".join(_FIELD_TYPES)
            raise ValueError(f"Unknown key '{key}' on line {number} of {config_file}. Valid keys: {valid}")
        values[key] = _convert(key, raw)
    logger.debug(f"Loaded {len(values)} settings from {config_file}")
    return values


def build_config(
    overrides: Mapping[str, Any],
    config_file: Optional[str] = None,
    environ: Optional[Mapping[str, str]] = None,
) -> RunConfig:
    """Merge flags, config file, environment and defaults into a validated RunConfig.

    ``overrides`` holds explicit flags; entries set to None are treated as absent.
    """
    environ = os.environ if environ is None else environ
    values: Dict[str, Any] = {}
    env_bits = environ.get(PRECISION_ENV)
    if env_bits:
        try:
            values["precision_bits"] = int(env_bits)
        except ValueError:
            raise ValueError(f"{PRECISION_ENV} must be an integer, got {env_bits}")
    if config_file:
        values.update(load_config(config_file))
    values.update({key: value for key, value in overrides.items() if value is not None and key in _FIELD_TYPES})
    return replace(RunConfig(), **values).validate()
