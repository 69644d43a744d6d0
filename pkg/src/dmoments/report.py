"""
Sweeps, CSV/SVG output and published-value comparisons for the CLI.
"""
from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, TextIO

import numpy as np

from .constants import ev_from_joule, magnetic_energy_scale_eV, tesla_from_gauss
from .errors import InvalidInputError
from .landau import QuantumNumbers, energy, kinetic_energy
from .moments import classify_regime, edm_value, mdm_finite_field
from .published import TABLE1, TABLE2

CSV_COLUMNS = (
    "axis_name", "axis_value", "B_tesla", "epsilon_eV", "n", "k",
    "scale_eV", "regime", "value", "value_unit", "method",
)

QUANTITIES = ("edm", "mdm", "spectrum")
FIELD_AXES = ("B_tesla", "B_gauss")
ENERGY_AXES = ("epsilon_eV", "epsilon_J")
SPACINGS = ("linear", "log")

_TOP_KEYS = {"quantity", "n", "k", "fixed", "axis", "grid"}
_GRID_KEYS = {"min", "max", "points", "spacing"}


class SweepSpecError(InvalidInputError):
    """A sweep configuration failed validation; ``field`` names the culprit."""

    def __init__(self, field: str, message: str):
        super().__init__(f"sweep config field '{field}': {message}")
        self.field = field


def to_tesla(name: str, value: float) -> float:
    return tesla_from_gauss(value) if name == "B_gauss" else float(value)


def to_ev(name: str, value: float) -> float:
    return ev_from_joule(value) if name == "epsilon_J" else float(value)


@dataclass(frozen=True)
class Grid:
    min: float
    max: float
    points: int
    spacing: str

    def values(self) -> np.ndarray:
        if self.spacing == "log":
            return np.geomspace(self.min, self.max, self.points)
        return np.linspace(self.min, self.max, self.points)


@dataclass(frozen=True)
class SweepSpec:
    quantity: str
    n: int
    k: int
    fixed: dict
    axis: str
    grid: Grid

    @property
    def fixed_name(self) -> str | None:
        return next(iter(self.fixed), None)

    @property
    def fixed_value(self) -> float | None:
        return next(iter(self.fixed.values()), None)


def _number(field: str, value, *, positive=False, nonnegative=False) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise SweepSpecError(field, f"expected a number, got {value!r}")
    value = float(value)
    if not math.isfinite(value):
        raise SweepSpecError(field, "must be finite")
    if positive and value <= 0:
        raise SweepSpecError(field, "must be positive")
    if nonnegative and value < 0:
        raise SweepSpecError(field, "must be non-negative")
    return value


def parse_sweep_spec(doc: dict) -> SweepSpec:
    """Validate a decoded JSON sweep description."""
    if not isinstance(doc, dict):
        raise SweepSpecError("<root>", "expected a JSON object")
    for key in doc:
        if key not in _TOP_KEYS:
            raise SweepSpecError(key, "unknown key")
    for key in ("quantity", "n", "k", "axis", "grid"):
        if key not in doc:
            raise SweepSpecError(key, "missing")

    quantity = doc["quantity"]
    if quantity not in QUANTITIES:
        raise SweepSpecError("quantity", f"must be one of {QUANTITIES}")
    for key in ("n", "k"):
        v = doc[key]
        if isinstance(v, bool) or not isinstance(v, int) or v < 0:
            raise SweepSpecError(key, "must be an integer >= 0")

    axis = doc["axis"]
    if axis not in FIELD_AXES + ENERGY_AXES:
        raise SweepSpecError("axis", f"must be one of {FIELD_AXES + ENERGY_AXES}")
    if quantity == "spectrum" and axis not in FIELD_AXES:
        raise SweepSpecError("axis", "a spectrum sweep runs over the field")

    fixed = doc.get("fixed", {})
    if not isinstance(fixed, dict) or len(fixed) > 1:
        raise SweepSpecError("fixed", "expected an object with a single key")
    allowed = ENERGY_AXES if axis in FIELD_AXES else FIELD_AXES
    for key, value in fixed.items():
        if key not in allowed:
            raise SweepSpecError(f"fixed.{key}", f"must be one of {allowed} when sweeping {axis}")
        _number(f"fixed.{key}", value, positive=True)
    if not fixed and (quantity == "edm" or axis in ENERGY_AXES):
        raise SweepSpecError("fixed", f"a value from {allowed} is required")
    if fixed and quantity == "spectrum":
        raise SweepSpecError("fixed", "a spectrum sweep takes no fixed value")

    g = doc["grid"]
    if not isinstance(g, dict):
        raise SweepSpecError("grid", "expected an object")
    for key in g:
        if key not in _GRID_KEYS:
            raise SweepSpecError(f"grid.{key}", "unknown key")
    for key in _GRID_KEYS:
        if key not in g:
            raise SweepSpecError(f"grid.{key}", "missing")
    spacing = g["spacing"]
    if spacing not in SPACINGS:
        raise SweepSpecError("grid.spacing", f"must be one of {SPACINGS}")
    points = g["points"]
    if isinstance(points, bool) or not isinstance(points, int) or points < 2:
        raise SweepSpecError("grid.points", "must be an integer >= 2")
    needs_positive = spacing == "log" or quantity != "spectrum"
    lo = _number("grid.min", g["min"], positive=needs_positive, nonnegative=True)
    hi = _number("grid.max", g["max"], positive=True)
    if not lo < hi:
        raise SweepSpecError("grid.max", "must exceed grid.min")

    return SweepSpec(quantity, doc["n"], doc["k"], dict(fixed), axis, Grid(lo, hi, points, spacing))


def load_sweep_spec(path: str | Path) -> SweepSpec:
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SweepSpecError("<root>", f"not valid JSON ({exc})") from None
    return parse_sweep_spec(doc)


@dataclass(frozen=True)
class Row:
    axis_name: str
    axis_value: float
    B_tesla: float
    epsilon_eV: float
    n: int
    k: int
    scale_eV: float
    regime: str
    value: float
    value_unit: str
    method: str


def _regime_or_undefined(epsilon: float, B: float) -> str:
    if B > 0 and epsilon > 0:
        return classify_regime(epsilon, B)
    return "undefined"


def point_row(quantity: str, qn: QuantumNumbers, B: float, epsilon: float | None,
              axis_name: str = "B_tesla", axis_value: float | None = None) -> Row:
    """Evaluate one sweep point.  ``epsilon=None`` takes the state's own kinetic energy."""
    if axis_value is None:
        axis_value = B
    scale = magnetic_energy_scale_eV(B)
    if quantity == "edm":
        value, unit = edm_value(qn, B, epsilon), "e*cm"
    elif quantity == "mdm":
        result = mdm_finite_field(qn, B, epsilon)
        epsilon, value, unit = result.epsilon, result.value, "J/T"
    elif quantity == "spectrum":
        epsilon = kinetic_energy(qn, B)
        value, unit = energy(qn, B), "eV"
    else:
        raise InvalidInputError(f"unknown quantity {quantity!r}")
    return Row(axis_name, float(axis_value), B, epsilon, qn.n, qn.k, scale,
               _regime_or_undefined(epsilon, B), value, unit, "closed_form")


def run_sweep(spec: SweepSpec) -> list[Row]:
    qn = QuantumNumbers(spec.n, spec.k)
    rows = []
    for axis_value in spec.grid.values():
        axis_value = float(axis_value)
        if spec.axis in FIELD_AXES:
            B = to_tesla(spec.axis, axis_value)
            eps = to_ev(spec.fixed_name, spec.fixed_value) if spec.fixed else None
        else:
            B = to_tesla(spec.fixed_name, spec.fixed_value)
            eps = to_ev(spec.axis, axis_value)
        rows.append(point_row(spec.quantity, qn, B, eps, spec.axis, axis_value))
    return rows


def validate_row(row: Row) -> None:
    """Re-check a row against the invariants of the operation that produced it."""
    numbers = (row.axis_value, row.B_tesla, row.epsilon_eV, row.scale_eV, row.value)
    if not all(math.isfinite(v) for v in numbers):
        raise ValueError(f"non-finite entry in row {row}")
    if row.value <= 0 or row.scale_eV < 0 or row.epsilon_eV < 0:
        raise ValueError(f"sign violation in row {row}")
    if not math.isclose(row.scale_eV, magnetic_energy_scale_eV(row.B_tesla), rel_tol=1e-12):
        raise ValueError(f"scale does not match the field in row {row}")
    if row.regime != _regime_or_undefined(row.epsilon_eV, row.B_tesla):
        raise ValueError(f"regime label inconsistent in row {row}")


def _fmt(value) -> str:
    if isinstance(value, (int, np.integer)):
        return str(value)
    if isinstance(value, float):
        return f"{value:.11e}"
    return str(value)


def write_csv(rows: Iterable[Row], out: TextIO) -> None:
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for row in rows:
        validate_row(row)
        writer.writerow([_fmt(getattr(row, c)) for c in CSV_COLUMNS])


def csv_text(rows: Iterable[Row]) -> str:
    buf = io.StringIO()
    write_csv(rows, buf)
    return buf.getvalue()


def svg_polyline(xs, ys, *, x_label: str, y_label: str, title: str = "",
                 log_x: bool = False, log_y: bool | None = None) -> str:
    """A bare single-series line chart."""
    xs = np.asarray(xs, dtype=float)
    ys = np.asarray(ys, dtype=float)
    if log_y is None:
        log_y = bool(np.all(ys > 0) and ys.max() / ys.min() > 100)
    width, height, margin = 640, 400, 70
    tx = np.log10(xs) if log_x else xs
    ty = np.log10(ys) if log_y else ys

    def scale(v, lo, hi, a, b):
        return a + (b - a) * (0.5 if hi == lo else (v - lo) / (hi - lo))

    px = scale(tx, tx.min(), tx.max(), margin, width - margin / 2)
    py = scale(ty, ty.min(), ty.max(), height - margin, margin / 2)
    points = " ".join(f"{x:.2f},{y:.2f}" for x, y in zip(px, py))
    x_axis = "log " if log_x else ""
    y_axis = "log " if log_y else ""
    return "\n".join([
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">',
        f'<rect width="{width}" height="{height}" fill="white"/>',
        f'<text x="{width / 2}" y="20" text-anchor="middle" font-size="14">{title}</text>',
        f'<line x1="{margin}" y1="{height - margin}" x2="{width - margin / 2}" y2="{height - margin}" stroke="black"/>',
        f'<line x1="{margin}" y1="{height - margin}" x2="{margin}" y2="{margin / 2}" stroke="black"/>',
        f'<text x="{margin}" y="{height - margin + 18}" font-size="11">{xs.min():.3g}</text>',
        f'<text x="{width - margin / 2}" y="{height - margin + 18}" text-anchor="end" font-size="11">{xs.max():.3g}</text>',
        f'<text x="{margin - 4}" y="{height - margin}" text-anchor="end" font-size="11">{ys.min():.3g}</text>',
        f'<text x="{margin - 4}" y="{margin / 2 + 4}" text-anchor="end" font-size="11">{ys.max():.3g}</text>',
        f'<text x="{(width + margin / 2) / 2}" y="{height - 20}" text-anchor="middle" font-size="12">{x_axis}{x_label}</text>',
        f'<text x="16" y="{height / 2}" text-anchor="middle" font-size="12" '
        f'transform="rotate(-90 16 {height / 2})">{y_axis}{y_label}</text>',
        f'<polyline fill="none" stroke="steelblue" stroke-width="1.5" points="{points}"/>',
        "</svg>",
        "",
    ])


def sweep_svg(spec: SweepSpec, rows: list[Row]) -> str:
    unit = rows[0].value_unit
    return svg_polyline(
        [r.axis_value for r in rows], [r.value for r in rows],
        x_label=spec.axis, y_label=f"{spec.quantity} [{unit}]",
        title=f"{spec.quantity} sweep, n={spec.n}, k={spec.k}",
        log_x=spec.grid.spacing == "log",
    )


@dataclass(frozen=True)
class ComparisonRow:
    source: str
    epsilon_eV: float
    B_gauss: float
    B_gauss_as_printed: str
    paper_value_ecm: float
    computed_value_ecm: float
    ratio: float
    bound_for_de: str = ""
    note: str = ""


COMPARISON_COLUMNS = (
    "source", "epsilon_eV", "B_gauss", "B_gauss_as_printed", "paper_value_ecm",
    "computed_value_ecm", "ratio", "bound_for_de", "note",
)


def comparison_rows(table_id: int, qn: QuantumNumbers = QuantumNumbers(0, 0)) -> list[ComparisonRow]:
    """Published values next to the closed form at the same (epsilon, B).

    Table 1 quotes B as a range; both ends are evaluated.
    """
    rows = []
    if table_id == 1:
        for entry in TABLE1:
            for end, B_gauss in zip(("min", "max"), entry.B_gauss_range):
                computed = edm_value(qn, tesla_from_gauss(B_gauss), entry.epsilon_eV)
                rows.append(ComparisonRow(
                    f"Table 1 row {entry.label} (B {end})", entry.epsilon_eV, B_gauss,
                    entry.B_gauss_text, entry.paper_value_ecm, computed,
                    computed / entry.paper_value_ecm,
                ))
    elif table_id == 2:
        for entry in TABLE2:
            computed = edm_value(qn, tesla_from_gauss(entry.B_gauss), entry.epsilon_eV)
            rows.append(ComparisonRow(
                f"Table 2 row {entry.label}", entry.epsilon_eV, entry.B_gauss, f"{entry.B_gauss:g}",
                entry.paper_value_ecm, computed, computed / entry.paper_value_ecm,
                f"{entry.bound_text} {entry.reference}", entry.note,
            ))
    else:
        raise InvalidInputError(f"unknown table {table_id!r}; choose 1 or 2")
    return rows


def comparison_csv(rows: Iterable[ComparisonRow]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(COMPARISON_COLUMNS)
    for row in rows:
        # published numbers keep their printed precision
        writer.writerow([repr(row.paper_value_ecm) if c == "paper_value_ecm" else _fmt(getattr(row, c))
                         for c in COMPARISON_COLUMNS])
    return buf.getvalue()


def comparison_table(rows: list[ComparisonRow]) -> str:
    header = f"{'source':<24} {'eps [eV]':>10} {'B [G]':>10} {'published [e*cm]':>13} {'computed [e*cm]':>16} {'ratio':>10}"
    lines = [header, "-" * len(header)]
    for r in rows:
        lines.append(
            f"{r.source:<24} {r.epsilon_eV:>10.3g} {r.B_gauss:>10.3g} {r.paper_value_ecm!r:>13} "
            f"{r.computed_value_ecm:>16.4e} {r.ratio:>10.3e}"
        )
        if r.bound_for_de:
            lines.append(f"{'':<24} bound: {r.bound_for_de}")
        if r.note:
            lines.append(f"{'':<24} note: {r.note}")
    return "\n".join(lines)

