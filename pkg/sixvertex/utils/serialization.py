"""
Output serialization

BigReal values leave the package as decimal strings in scientific notation
with the number of significant digits their precision supports. Doubles are
written with 17 significant digits in CSV and as shortest round-trip
numbers in JSON. Output is deterministic: JSON keys are sorted and CSV uses
a fixed column order and line terminator.
"""

import csv
import io
import json
import math
from typing import Any, Dict, Iterable, List, Mapping, Optional, Sequence

import mpmath
from mpmath import mpf

from sixvertex.core.bigreal import digits_for_bits


def format_big(value: Any, bits: int) -> str:
    """Decimal string of an mpf, round-to-nearest, always scientific."""
    with mpmath.workprec(max(bits, 53)):
        return mpmath.nstr(mpf(value), digits_for_bits(bits), min_fixed=1, max_fixed=0, strip_zeros=False)


def format_float(value: float) -> str:
    return "%.17g" % value


def jsonable(value: Any, bits: int = 53) -> Any:
    """Convert mpf values (also inside containers) to decimal strings."""
    if isinstance(value, mpf):
        return format_big(value, bits)
    if isinstance(value, Mapping):
        return {str(key): jsonable(item, bits) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [jsonable(item, bits) for item in value]
    if isinstance(value, float) and not math.isfinite(value):
        return str(value)
    return value


def to_json(data: Any, bits: int = 53) -> str:
    return json.dumps(jsonable(data, bits), sort_keys=True, indent=2)


def _cell(value: Any, bits: int) -> str:
    if isinstance(value, mpf):
        return format_big(value, bits)
    if isinstance(value, float):
        return format_float(value)
    return str(value)


def to_csv(rows: Iterable[Dict[str, Any]], columns: Optional[Sequence[str]] = None, bits: int = 53) -> str:
    """Header row plus one comma-separated line per row, in column order."""
    rows = list(rows)
    if columns is None:
        columns = list(rows[0].keys()) if rows else []
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([_cell(row.get(column, ""), bits) for column in columns])
    return buffer.getvalue()


def to_text(data: Any, bits: int = 53) -> str:
    """Human-readable ``key: value`` lines."""
    if isinstance(data, list):
        return "\n".join(to_text(item, bits) for item in data) + "\n"
    lines: List[str] = []
    for key in sorted(data):
        value = data[key]
        if isinstance(value, (dict, list, tuple)):
            text = json.dumps(jsonable(value, bits), sort_keys=True)
        else:
            text = _cell(value, bits)
        lines.append(f"{key}: {text}")
    return "\n".join(lines) + "\n"
