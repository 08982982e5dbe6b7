"""Deterministic CSV / JSON serialization of sweep rows.

The CSV schema is

    index,axis_name,axis_value,stable,max_real_eig_over_omega_m,
    EN_<pair>...,G_c_over_omega_m,G_w1_over_omega_m,G_w2_over_omega_m

with one EN column per requested bipartition (pair labels join the mode
names with '_').  Multi-curve runs prepend a `curve` column.  Floats are
printed with 17 significant digits, '.' decimal separator, no locale, so
a fixed configuration reproduces a bitwise identical file.  Unstable (or
errored) rows leave their EN fields empty rather than writing 0, which
breaks plotted curves exactly across the forbidden window.

The JSON format is an array of row objects carrying the same field names,
with null in place of empty fields plus an `error` field for the per-row
failure text (null when the row is clean).
"""

from __future__ import annotations

import json
from typing import Iterable

from .sweep import SweepRow


def format_float(x: float) -> str:
    return format(x, ".17g")


def en_columns(pair_labels: Iterable[str]) -> list[str]:
    return [f"EN_{label}" for label in pair_labels]


def header(pair_labels: Iterable[str], with_curve: bool = False) -> list[str]:
    cols = (
        ["index", "axis_name", "axis_value", "stable", "max_real_eig_over_omega_m"]
        + en_columns(pair_labels)
        + ["G_c_over_omega_m", "G_w1_over_omega_m", "G_w2_over_omega_m"]
    )
    return ["curve", *cols] if with_curve else cols


def _row_cells(row: SweepRow, pair_labels: list[str]) -> list[str]:
    cells = [
        str(row.index),
        row.axis_name,
        format_float(row.axis_value),
        "true" if row.stable else "false",
        format_float(row.max_real_eig),
    ]
    for label in pair_labels:
        value = None if row.e_n is None else row.e_n.get(label)
        cells.append("" if value is None else format_float(value))
    cells += [
        format_float(row.g_c),
        format_float(row.g_w[0]),
        format_float(row.g_w[1]),
    ]
    return cells


def rows_to_csv(
    curves: list[tuple[str, list[SweepRow]]], pair_labels: list[str]
) -> str:
    """Render labeled curves as one CSV body (trailing newline included)."""
    with_curve = len(curves) > 1
    lines = [",".join(header(pair_labels, with_curve))]
    for label, rows in curves:
        for row in rows:
            cells = _row_cells(row, pair_labels)
            if with_curve:
                cells = [label, *cells]
            lines.append(",".join(cells))
    return "\n".join(lines) + "\n"


def _row_object(row: SweepRow, pair_labels: list[str]) -> dict:
    obj = {
        "index": row.index,
        "axis_name": row.axis_name,
        "axis_value": row.axis_value,
        "stable": row.stable,
        "max_real_eig_over_omega_m": row.max_real_eig,
    }
    for label in pair_labels:
        obj[f"EN_{label}"] = None if row.e_n is None else row.e_n.get(label)
    obj["G_c_over_omega_m"] = row.g_c
    obj["G_w1_over_omega_m"] = row.g_w[0]
    obj["G_w2_over_omega_m"] = row.g_w[1]
    obj["error"] = row.error
    return obj


def rows_to_json(
    curves: list[tuple[str, list[SweepRow]]], pair_labels: list[str]
) -> str:
    """Render labeled curves as a JSON array of row objects."""
    with_curve = len(curves) > 1
    out = []
    for label, rows in curves:
        for row in rows:
            obj = _row_object(row, pair_labels)
            if with_curve:
                obj = {"curve": label, **obj}
            out.append(obj)
    return json.dumps(out, indent=1) + "\n"
