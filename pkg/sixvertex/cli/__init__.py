"""
Command-line interface package for sixvertex

This package provides the command-line tools for the sixvertex package.
"""

from sixvertex.cli.commands import COMMANDS, CommandResult, list_commands, run_command
from sixvertex.cli.config import RunConfig, build_config, load_config
from sixvertex.cli.main import main, run

__all__ = [
    "COMMANDS",
    "CommandResult",
    "RunConfig",
    "build_config",
    "list_commands",
    "load_config",
    "main",
    "run",
    "run_command",
]
