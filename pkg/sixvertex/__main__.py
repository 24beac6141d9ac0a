"""
Entry point for the sixvertex package when run as a module.

Usage:
    python -m sixvertex [--config path] [--format json|csv|text] [--verbose] <command> [flags]
"""

import sys

from sixvertex.cli import main

if __name__ == "__main__":
    sys.exit(main())
