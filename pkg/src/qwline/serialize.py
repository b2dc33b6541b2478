"""Deterministic CSV/JSON emission with 17-significant-digit floats."""

from __future__ import annotations

import json
import math

import numpy as np

from .engine import Distribution, SpinorField


def fmt(x: float) -> str:
    """Render a finite float with 17 significant digits."""
    v = float(x)
    if not math.isfinite(v):
        raise ValueError(f"refusing to serialize non-finite value {v!r}")
    return format(v, ".17g")


def _cell(v) -> str:
    if v is None:
        return ""
    if isinstance(v, str):
        return v
    if isinstance(v, (bool, np.bool_)):
        return "true" if v else "false"
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    return fmt(v)


def csv_text(header: list[str], rows: list[list]) -> str:
    lines = [",".join(header)]
    lines.extend(",".join(_cell(v) for v in row) for row in rows)
    return "\n".join(lines) + "\n"


def _json_value(v) -> str:
    if v is None:
        return "null"
    if isinstance(v, (bool, np.bool_)):
        return "true" if v else "false"
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    if isinstance(v, (float, np.floating)):
        return fmt(v)
    if isinstance(v, str):
        return json.dumps(v)
    if isinstance(v, (list, tuple)):
        return "[" + ",".join(_json_value(x) for x in v) + "]"
    if isinstance(v, dict):
        return "{" + ",".join(
            f"{json.dumps(k)}:{_json_value(x)}" for k, x in v.items()
        ) + "}"
    raise TypeError(f"cannot serialize {type(v).__name__}")


def json_text(header: list[str], rows: list[list]) -> str:
    """Mirror of :func:`csv_text`: a {"rows": [...]} object keyed by header."""
    objs = [dict(zip(header, row)) for row in rows]
    return _json_value({"rows": objs}) + "\n"


def table_text(header: list[str], rows: list[list], fmt_kind: str) -> str:
    if fmt_kind == "csv":
        return csv_text(header, rows)
    if fmt_kind == "json":
        return json_text(header, rows)
    raise ValueError(f"unknown output format {fmt_kind!r}")


def distribution_rows(dist: Distribution) -> tuple[list[str], list[list]]:
    """Rows (y, p) over parity-allowed sites of the stored range."""
    rows = []
    for i, y in enumerate(dist.sites):
        if (dist.n + int(y)) % 2 == 0:
            rows.append([int(y), float(dist.probs[i])])
    return ["y", "p"], rows


def field_rows(field: SpinorField) -> tuple[list[str], list[list]]:
    """Rows (y, re1, im1, re2, im2) over parity-allowed sites."""
    rows = []
    for i, y in enumerate(field.sites):
        if (field.n + int(y)) % 2 == 0:
            a1, a2 = field.amps[i]
            rows.append([int(y), a1.real, a1.imag, a2.real, a2.imag])
    return ["y", "re1", "im1", "re2", "im2"], rows
