"""Deterministic text serialization for reports.

All numeric output is printed with 17 significant digits (enough to
round-trip IEEE doubles), keys are emitted in sorted order, and no
timestamps or environment data are included, so identical inputs produce
byte-identical files.
"""

from __future__ import annotations

import math
from io import StringIO


def fmt(x) -> str:
    """17-significant-digit rendering of one number."""
    if isinstance(x, bool):
        return "true" if x else "false"
    if isinstance(x, int):
        return str(x)
    x = float(x)
    if math.isnan(x):
        return "nan"
    if math.isinf(x):
        return "inf" if x > 0 else "-inf"
    return format(x, ".17g")


def _emit(obj, out: StringIO, indent: int) -> None:
    pad = "  " * indent
    if obj is None:
        out.write("null")
    elif isinstance(obj, bool):
        out.write("true" if obj else "false")
    elif isinstance(obj, int):
        out.write(str(obj))
    elif isinstance(obj, float):
        out.write(fmt(obj))
    elif isinstance(obj, complex):
        out.write(f"[{fmt(obj.real)}, {fmt(obj.imag)}]")
    elif isinstance(obj, str):
        out.write('"' + obj.replace("\\", "\\\\").replace('"', '\\"') + '"')
    elif isinstance(obj, dict):
        items = sorted(obj.items())
        if not items:
            out.write("{}")
            return
        out.write("{\n")
        for i, (k, v) in enumerate(items):
            out.write(f'{pad}  "{k}": ')
            _emit(v, out, indent + 1)
            out.write(",\n" if i + 1 < len(items) else "\n")
        out.write(pad + "}")
    elif isinstance(obj, (list, tuple)):
        if not obj:
            out.write("[]")
            return
        out.write("[\n")
        for i, v in enumerate(obj):
            out.write(pad + "  ")
            _emit(v, out, indent + 1)
            out.write(",\n" if i + 1 < len(obj) else "\n")
        out.write(pad + "]")
    else:
        raise TypeError(f"cannot serialize {type(obj).__name__}")


def json_text(obj) -> str:
    out = StringIO()
    _emit(obj, out, 0)
    out.write("\n")
    return out.getvalue()


def csv_text(header, rows) -> str:
    lines = [",".join(header)]
    for row in rows:
        lines.append(",".join(c if isinstance(c, str) else fmt(c) for c in row))
    return "\n".join(lines) + "\n"


def obj_mesh_text(grid_points, values, excluded_mask, na: int, nb: int) -> str:
    """Wavefront OBJ for a rectangular parameter grid (row-major in the first
    index).  Excluded vertices are dropped and every triangle touching one is
    skipped."""
    index = {}
    lines = []
    n = 0
    for i in range(na):
        for j in range(nb):
            k = i * nb + j
            if excluded_mask[k]:
                continue
            n += 1
            index[(i, j)] = n
            x, y, z = values[k]
            lines.append(f"v {fmt(x)} {fmt(y)} {fmt(z)}")
    for i in range(na - 1):
        for j in range(nb - 1):
            quad = [(i, j), (i + 1, j), (i + 1, j + 1), (i, j + 1)]
            if any(q not in index for q in quad):
                continue
            a, b, c, d = (index[q] for q in quad)
            lines.append(f"f {a} {b} {c}")
            lines.append(f"f {a} {c} {d}")
    return "\n".join(lines) + "\n"
