"""
Utility helpers for sixvertex
"""

from sixvertex.utils.serialization import format_big, format_float, jsonable, to_csv, to_json, to_text

__all__ = ["format_big", "format_float", "jsonable", "to_csv", "to_json", "to_text"]
