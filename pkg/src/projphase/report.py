"""Result serialization: delimited traces, JSON envelopes, and rendered
figures next to them.

CSV traces are UTF-8 with a header row, '.' decimal separator, and full
double precision (17 significant digits), so downstream tooling can
reproduce every number bit-for-bit. Figures are rendered with the Agg
backend; rendering is optional and never affects the data products.
"""

from __future__ import annotations

import csv
import json
from pathlib import Path

import numpy as np

from .scenarios import ScenarioResult


def _plain(value):
    """Coerce numpy scalars/arrays and Paths into JSON-serializable values."""
    if isinstance(value, (np.floating,)):
        return float(value)
    if isinstance(value, (np.integer,)):
        return int(value)
    if isinstance(value, (np.bool_,)):
        return bool(value)
    if isinstance(value, np.ndarray):
        return [_plain(v) for v in value]
    if isinstance(value, dict):
        return {k: _plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    if isinstance(value, Path):
        return str(value)
    return value


def _cell(value) -> str:
    if isinstance(value, (bool, np.bool_)):
        return str(bool(value))
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        return format(float(value), ".17g")
    return str(value)


def write_trace_csv(path: Path, columns: list[str], rows: list[list]) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(columns)
        for row in rows:
            writer.writerow([_cell(v) for v in row])


def write_trace_json(path: Path, columns: list[str], rows: list[list]) -> None:
    payload = {"columns": columns,
               "rows": [dict(zip(columns, (_plain(v) for v in row))) for row in rows]}
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(payload, fh, indent=1, sort_keys=True)
        fh.write("\n")


def write_trace(path: Path, fmt: str, result: ScenarioResult) -> None:
    if fmt == "csv":
        write_trace_csv(path, result.trace_columns, result.trace_rows)
    elif fmt == "json":
        write_trace_json(path, result.trace_columns, result.trace_rows)
    else:
        raise ValueError(f"unknown trace format {fmt!r}")


def write_envelope(path: Path, result: ScenarioResult, trace_file: Path) -> None:
    envelope = {
        "scenario": result.scenario,
        "parameters": _plain(result.parameters),
        "expected": _plain(result.expected),
        "computed": _plain(result.computed),
        "tolerance": _plain(result.tolerance),
        "pass": bool(result.passed),
        "trace_file": str(trace_file),
    }
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(envelope, fh, indent=1, sort_keys=True)
        fh.write("\n")


def render_figures(result: ScenarioResult, stem: Path) -> list[Path]:
    """Render the scenario's figures as PNGs named ``<stem>_<name>.png``."""
    import matplotlib

    matplotlib.use("Agg")
    from matplotlib.figure import Figure

    paths = []
    for name, draw in result.figures:
        fig = Figure(figsize=(7.0, 4.5), dpi=120, layout="tight")
        draw(fig)
        out = stem.with_name(f"{stem.name}_{name}.png")
        fig.savefig(out)
        paths.append(out)
    return paths
