"""JSON algebra files.

Format::

    {"dim": 3, "basis": ["e1", "e2", "e3"],
     "brackets": [{"i": 1, "j": 1, "k": 2, "c": "1"}, ...]}

Indices are 1-based; coefficients are rational strings such as ``"-3/4"``.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from pathlib import Path
from typing import Any

from .algebra import AlgebraTable
from .errors import LoadError

_RATIONAL = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")


def parse_rational(text: Any, context: str | None = None) -> Fraction:
    """Parse ``"p"`` or ``"p/q"`` (integers are accepted too)."""
    if isinstance(text, bool):
        raise LoadError(f"expected a rational string, got {text!r}", context)
    if isinstance(text, int):
        return Fraction(text)
    if not isinstance(text, str):
        raise LoadError(f"expected a rational string, got {type(text).__name__}", context)
    m = _RATIONAL.match(text)
    if not m:
        raise LoadError(f"malformed rational {text!r}", context)
    num, den = int(m.group(1)), int(m.group(2) or 1)
    if den == 0:
        raise LoadError(f"zero denominator in {text!r}", context)
    return Fraction(num, den)


def format_rational(c: Fraction) -> str:
    return str(Fraction(c))


def _int_field(entry: dict, key: str, dim: int, ctx: str) -> int:
    if key not in entry:
        raise LoadError(f"missing field {key!r}", ctx)
    v = entry[key]
    if isinstance(v, bool) or not isinstance(v, int):
        raise LoadError(f"index must be an integer, got {v!r}", f"{ctx}.{key}")
    if not 1 <= v <= dim:
        raise LoadError(f"index {v} out of range 1..{dim}", f"{ctx}.{key}")
    return v - 1


def algebra_from_dict(data: Any) -> AlgebraTable:
    """Validate a decoded algebra file.

    Raises:
        LoadError: naming the offending field.
    """
    if not isinstance(data, dict):
        raise LoadError("top level must be an object")
    dim = data.get("dim")
    if isinstance(dim, bool) or not isinstance(dim, int) or dim < 0:
        raise LoadError(f"dim must be a non-negative integer, got {dim!r}", "dim")
    labels = data.get("basis")
    if labels is None:
        labels = [f"e{i + 1}" for i in range(dim)]
    if not isinstance(labels, list) or not all(isinstance(s, str) for s in labels):
        raise LoadError("basis must be a list of strings", "basis")
    if len(labels) != dim:
        raise LoadError(f"{len(labels)} labels for dimension {dim}", "basis")
    if len(set(labels)) != len(labels):
        raise LoadError("basis labels must be distinct", "basis")
    brackets = data.get("brackets", [])
    if not isinstance(brackets, list):
        raise LoadError("brackets must be a list", "brackets")
    extra = set(data) - {"dim", "basis", "brackets"}
    if extra:
        raise LoadError(f"unknown field(s) {sorted(extra)}")
    consts: dict[tuple[int, int], dict[int, Fraction]] = {}
    for idx, entry in enumerate(brackets):
        ctx = f"brackets[{idx}]"
        if not isinstance(entry, dict):
            raise LoadError("entry must be an object", ctx)
        unknown = set(entry) - {"i", "j", "k", "c"}
        if unknown:
            raise LoadError(f"unknown field(s) {sorted(unknown)}", ctx)
        i = _int_field(entry, "i", dim, ctx)
        j = _int_field(entry, "j", dim, ctx)
        k = _int_field(entry, "k", dim, ctx)
        if "c" not in entry:
            raise LoadError("missing field 'c'", ctx)
        c = parse_rational(entry["c"], f"{ctx}.c")
        if c == 0:
            raise LoadError("coefficient must be nonzero", f"{ctx}.c")
        row = consts.setdefault((i, j), {})
        if k in row:
            raise LoadError(f"duplicate entry (i={i + 1}, j={j + 1}, k={k + 1})", ctx)
        row[k] = c
    return AlgebraTable(dim, consts, labels)


def algebra_to_dict(a: AlgebraTable) -> dict:
    brackets = [
        {"i": i + 1, "j": j + 1, "k": k + 1, "c": format_rational(c)}
        for (i, j), terms in a.constants.items()
        for k, c in terms
    ]
    return {"dim": a.dim, "basis": list(a.labels), "brackets": brackets}


def loads_algebra(text: str) -> AlgebraTable:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise LoadError(exc.msg, f"line {exc.lineno}, column {exc.colno}") from None
    return algebra_from_dict(data)


def dumps_algebra(a: AlgebraTable) -> str:
    """Deterministic JSON text (one bracket per line)."""
    d = algebra_to_dict(a)
    lines = ["{", f'  "dim": {d["dim"]},', f'  "basis": {json.dumps(d["basis"])},']
    if d["brackets"]:
        lines.append('  "brackets": [')
        body = [f"    {json.dumps(b)}" for b in d["brackets"]]
        lines.append(",\n".join(body))
        lines.append("  ]")
    else:
        lines.append('  "brackets": []')
    lines.append("}")
    return "\n".join(lines) + "\n"


def load_algebra(path: str | Path) -> AlgebraTable:
    """Read and validate an algebra file.

    Raises:
        LoadError: for unreadable files, malformed JSON or invalid content.
    """
    p = Path(path)
    try:
        text = p.read_text(encoding="utf-8")
    except OSError as exc:
        raise LoadError(str(exc.strerror or exc), str(p)) from None
    try:
        return loads_algebra(text)
    except LoadError as exc:
        raise LoadError(str(exc), str(p)) from None


def dump_algebra(a: AlgebraTable, path: str | Path) -> None:
    Path(path).write_text(dumps_algebra(a), encoding="utf-8")
