"""Deterministic JSON emission with floats at 17 significant digits.

The stdlib encoder prints shortest round-trip representations; outputs here
pin 17 significant digits so files are byte-stable across builds and still
round-trip exactly.
"""

from __future__ import annotations

import math


def _fmt_float(v: float) -> str:
    if math.isnan(v) or math.isinf(v):
        raise ValueError(f"non-finite float {v!r} cannot be serialized")
    out = format(v, ".17g")
    # keep it a JSON number that reads back as float
    if "e" not in out and "." not in out:
        out += ".0"
    return out


def _escape(s: str) -> str:
    out = ['"']
    for ch in s:
        if ch == '"':
            out.append('\\"')
        elif ch == "\\":
            out.append("\\\\")
        elif ord(ch) < 0x20:
            out.append(f"\\u{ord(ch):04x}")
        else:
            out.append(ch)
    out.append('"')
    return "".join(out)


def dumps(obj, indent: int | None = None) -> str:
    """Serialize dicts/lists/str/int/float/bool/None; dict insertion order is
    preserved (deterministic given deterministic construction)."""

    def emit(o, depth: int) -> str:
        if o is None:
            return "null"
        if o is True:
            return "true"
        if o is False:
            return "false"
        if isinstance(o, str):
            return _escape(o)
        if isinstance(o, int):
            return str(o)
        if isinstance(o, float):
            return _fmt_float(o)
        if isinstance(o, dict):
            if not o:
                return "{}"
            items = [f"{_escape(str(k))}: {emit(v, depth + 1)}" for k, v in o.items()]
            return _wrap("{", items, "}", depth)
        if isinstance(o, (list, tuple)):
            if not o:
                return "[]"
            items = [emit(v, depth + 1) for v in o]
            if all(not isinstance(v, (dict, list, tuple)) for v in o):
                return "[" + ", ".join(items) + "]"  # scalar rows stay inline
            return _wrap("[", items, "]", depth)
        raise TypeError(f"cannot serialize {type(o).__name__}")

    def _wrap(opener: str, items: list[str], closer: str, depth: int) -> str:
        if indent is None:
            return opener + ", ".join(items) + closer
        pad = " " * (indent * (depth + 1))
        end = " " * (indent * depth)
        return opener + "\n" + ",\n".join(pad + it for it in items) + "\n" + end + closer

    return emit(obj, 0)
