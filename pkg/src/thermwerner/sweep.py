"""Per-point measure records, parameter sweeps, CSV/SVG output and figure presets."""

from __future__ import annotations

import csv
import io
import math
import os
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path
from typing import Sequence

import numpy as np

from .exceptions import DomainError, ValidationError
from .mapping import critical_constants, in_bijection_domain, x_of_temperature
from .measures import (
    LN_DIM,
    _entropy,
    concurrence_thermal,
    concurrence_wootters,
    degree_of_mixture,
    entanglement_of_formation,
    spectral_jsd_to_uniform,
)
from .states import BellChoice, DensityMatrix, ModelParams, thermal_state, werner_state

CSV_COLUMNS = ("t", "b", "inv_t", "x_eff", "c", "e_f", "s_vn", "h_vn", "j_js", "c_js", "r")


@dataclass(frozen=True)
class MeasureRecord:
    t: float | None
    b: float | None
    inv_t: float | None
    x_eff: float
    c: float
    e_f: float
    s_vn: float
    h_vn: float
    j_js: float
    c_js: float
    r: float
    in_map_domain: bool = True

    def row(self) -> tuple:
        return tuple(getattr(self, name) for name in CSV_COLUMNS)


def check_record(rec: MeasureRecord, tol: float = 1e-9) -> None:
    """Raise ValidationError if ``rec`` breaks a record invariant."""
    problems = []
    if not -tol <= rec.c <= 1 + tol:
        problems.append(f"c={rec.c}")
    if not -tol <= rec.e_f <= 1 + tol:
        problems.append(f"e_f={rec.e_f}")
    # E_f underflows to 0 only once c^2 itself underflows
    if (rec.e_f == 0.0) != (rec.c == 0.0) and rec.c > 1e-150:
        problems.append(f"e_f={rec.e_f} inconsistent with c={rec.c}")
    if not 1 - tol <= rec.r <= 4 + tol:
        problems.append(f"r={rec.r}")
    if not -tol <= rec.h_vn <= 1 + tol:
        problems.append(f"h_vn={rec.h_vn}")
    if problems:
        raise ValidationError("record invariant violated: " + ", ".join(problems))


def _state_measures(rho: DensityMatrix) -> dict:
    c = concurrence_wootters(rho)
    spec = rho.spectrum()
    s_vn = _entropy(spec)
    h_vn = s_vn / LN_DIM
    j_js = spectral_jsd_to_uniform(spec)
    return dict(
        c=c,
        e_f=entanglement_of_formation(c),
        s_vn=s_vn,
        h_vn=h_vn,
        j_js=j_js,
        c_js=j_js * h_vn,
        r=degree_of_mixture(rho),
    )


def evaluate_point(p: ModelParams, t: float, *, check: bool = False) -> MeasureRecord:
    """All measures of the Gibbs state at temperature ``t``.

    With ``check=True`` the numerical concurrence is compared against the
    analytic thermal formula and a mismatch above 1e-9 raises.
    """
    rho = thermal_state(p, t)
    values = _state_measures(rho)
    if check:
        analytic = concurrence_thermal(p, t)
        if abs(analytic - values["c"]) > 1e-9:
            raise DomainError(
                f"concurrence mismatch at t={t}, b={p.b}: numeric {values['c']!r} vs analytic {analytic!r}"
            )
    return MeasureRecord(
        t=float(t),
        b=float(p.b),
        inv_t=1.0 / t,
        x_eff=x_of_temperature(p, t),
        in_map_domain=in_bijection_domain(p),
        **values,
    )


def evaluate_werner(x: float, bell: BellChoice | str = BellChoice.PHI_PLUS) -> MeasureRecord:
    rho = werner_state(x, bell)
    return MeasureRecord(t=None, b=None, inv_t=None, x_eff=float(x), **_state_measures(rho))


class Axis(str, Enum):
    TEMPERATURE = "t"
    INVERSE_TEMPERATURE = "invt"
    FIELD = "b"
    WERNER_X = "x"


class Spacing(str, Enum):
    LINEAR = "linear"
    LOG = "log"


@dataclass(frozen=True)
class SweepSpec:
    axis: Axis
    lo: float
    hi: float
    n: int
    spacing: Spacing = Spacing.LINEAR
    params: ModelParams = field(default_factory=ModelParams)
    t: float | None = None  # held temperature for a field sweep
    bell: BellChoice = BellChoice.PHI_PLUS

    def __post_init__(self):
        object.__setattr__(self, "axis", Axis(self.axis))
        object.__setattr__(self, "spacing", Spacing(self.spacing))
        object.__setattr__(self, "bell", BellChoice(self.bell))
        if not (math.isfinite(self.lo) and math.isfinite(self.hi)) or not self.lo < self.hi:
            raise ValidationError(f"sweep needs finite lo < hi, got [{self.lo}, {self.hi}]")
        if int(self.n) != self.n or self.n < 2:
            raise ValidationError(f"sweep needs n >= 2 points, got {self.n}")
        if self.spacing is Spacing.LOG and self.lo <= 0:
            raise ValidationError("log spacing needs lo > 0")
        if self.axis is Axis.FIELD and self.t is None:
            raise ValidationError("a field sweep needs a fixed temperature")

    def grid(self) -> np.ndarray:
        i = np.arange(self.n, dtype=float)
        if self.spacing is Spacing.LOG:
            a, b = math.log(self.lo), math.log(self.hi)
            g = np.exp(a + i * (b - a) / (self.n - 1))
        else:
            g = self.lo + i * (self.hi - self.lo) / (self.n - 1)
        return np.clip(g, self.lo, self.hi)


def _evaluate(spec: SweepSpec, value: float) -> MeasureRecord:
    if spec.axis is Axis.TEMPERATURE:
        return evaluate_point(spec.params, value)
    if spec.axis is Axis.INVERSE_TEMPERATURE:
        return evaluate_point(spec.params, 1.0 / value)
    if spec.axis is Axis.FIELD:
        return evaluate_point(spec.params.with_field(value), spec.t)
    return evaluate_werner(value, spec.bell)


def run_sweep(spec: SweepSpec) -> list[MeasureRecord]:
    records = []
    for value in spec.grid().tolist():
        try:
            records.append(_evaluate(spec, value))
        except (ValidationError, DomainError) as exc:
            raise type(exc)(f"sweep point {spec.axis.value}={value!r} failed: {exc}") from exc
    return records


def format_value(v) -> str:
    if v is None:
        return ""
    return repr(float(v))


def records_to_csv(records: Sequence[MeasureRecord]) -> str:
    if not records:
        raise ValidationError("no records to write")
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for rec in records:
        check_record(rec)
        writer.writerow([format_value(v) for v in rec.row()])
    return buf.getvalue()


def _write_text(destination, text: str) -> None:
    try:
        with open(destination, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    except OSError as exc:
        raise OSError(f"cannot write {os.fspath(destination)}: {exc.strerror or exc}") from exc


def emit_csv(records: Sequence[MeasureRecord], destination) -> None:
    """Write records to ``destination`` (a path or an open text stream)."""
    text = records_to_csv(records)
    if hasattr(destination, "write"):
        destination.write(text)
    else:
        _write_text(destination, text)


def read_csv(source) -> list[dict]:
    """Parse a CSV written by :func:`emit_csv`; empty fields become ``None``."""
    with open(source, encoding="utf-8", newline="") as fh:
        return [
            {k: (float(v) if v != "" else None) for k, v in row.items()}
            for row in csv.DictReader(fh)
        ]


def records_to_svg(records: Sequence[MeasureRecord], x_col: str, y_col: str, *, width=640, height=480) -> str:
    for col in (x_col, y_col):
        if col not in CSV_COLUMNS:
            raise ValidationError(f"unknown column {col!r}; choose from {', '.join(CSV_COLUMNS)}")
    if not records:
        raise ValidationError("no records to plot")
    pts = [(getattr(r, x_col), getattr(r, y_col)) for r in records]
    pts = [(x, y) for x, y in pts if x is not None and y is not None]
    if not pts:
        raise ValidationError(f"columns {x_col}/{y_col} are empty")
    xs, ys = zip(*pts)
    x0, x1 = min(xs), max(xs)
    y0, y1 = min(ys), max(ys)
    x1 = x1 if x1 > x0 else x0 + 1.0
    y1 = y1 if y1 > y0 else y0 + 1.0
    margin = 60
    pw, ph = width - 2 * margin, height - 2 * margin

    def sx(x):
        return margin + (x - x0) / (x1 - x0) * pw

    def sy(y):
        return height - margin - (y - y0) / (y1 - y0) * ph

    poly = " ".join(f"{sx(x):.3f},{sy(y):.3f}" for x, y in pts)
    return (
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}">\n'
        f'<rect x="{margin}" y="{margin}" width="{pw}" height="{ph}" fill="none" stroke="black"/>\n'
        f'<polyline points="{poly}" fill="none" stroke="blue"/>\n'
        f'<text x="{width / 2}" y="{height - 15}" text-anchor="middle">{x_col}</text>\n'
        f'<text x="15" y="{height / 2}" text-anchor="middle" transform="rotate(-90 15 {height / 2})">{y_col}</text>\n'
        f'<text x="{margin}" y="{height - margin + 18}" text-anchor="middle">{x0:.4g}</text>\n'
        f'<text x="{margin + pw}" y="{height - margin + 18}" text-anchor="middle">{x1:.4g}</text>\n'
        f'<text x="{margin - 5}" y="{height - margin}" text-anchor="end">{y0:.4g}</text>\n'
        f'<text x="{margin - 5}" y="{margin + 5}" text-anchor="end">{y1:.4g}</text>\n'
        "</svg>\n"
    )


def emit_svg(records: Sequence[MeasureRecord], x_col: str, y_col: str, destination) -> None:
    _write_text(destination, records_to_svg(records, x_col, y_col))


# Figure presets. J_H = 1, k_B = 1 throughout.
T_GRID = dict(lo=1e-3, hi=20.0, n=400, spacing=Spacing.LOG)
FIG2_FIELDS = (0.0, 1.0, 2.0, 3.0, 4.0)
FIG3_FIELDS = (3.8, 3.9, 3.99, 4.001, 4.05, 4.1)
FIG4_FIELDS = (3.99, 4.001)
FIG5_TEMPERATURE = 1e-3


@dataclass(frozen=True)
class FigurePreset:
    fig_id: int
    sweeps: tuple[tuple[str, SweepSpec], ...]  # (file stem, spec)
    plot: tuple[str, str]  # (x column, y column) for the optional SVG


def _fig2_spec(b: float) -> SweepSpec:
    # 1/T = k * inv_tc / 50 for k = 1..800; k = 50 lands on the common crossing
    inv_tc = 1.0 / critical_constants(ModelParams()).t_c
    return SweepSpec(Axis.INVERSE_TEMPERATURE, 0.02 * inv_tc, 16.0 * inv_tc, 800, params=ModelParams(b=b))


def figure_preset(fig_id: int) -> FigurePreset:
    if fig_id == 1:
        return FigurePreset(
            1,
            (
                ("fig1_thermal", SweepSpec(Axis.TEMPERATURE, params=ModelParams(b=0.0), **T_GRID)),
                ("fig1_werner", SweepSpec(Axis.WERNER_X, 0.0, 1.0, 401)),
            ),
            ("e_f", "c_js"),
        )
    if fig_id == 2:
        return FigurePreset(2, tuple((f"fig2_B{b:g}", _fig2_spec(b)) for b in FIG2_FIELDS), ("inv_t", "x_eff"))
    if fig_id in (3, 4):
        fields_ = FIG3_FIELDS if fig_id == 3 else FIG4_FIELDS
        return FigurePreset(
            fig_id,
            tuple(
                (f"fig{fig_id}_B{b:g}", SweepSpec(Axis.TEMPERATURE, params=ModelParams(b=b), **T_GRID))
                for b in fields_
            ),
            ("e_f", "c_js"),
        )
    if fig_id == 5:
        return FigurePreset(
            5,
            (("fig5", SweepSpec(Axis.FIELD, 3.9, 4.1, 401, t=FIG5_TEMPERATURE)),),
            ("e_f", "c_js"),
        )
    raise ValidationError(f"figure id must be 1..5, got {fig_id!r}")


def figure(fig_id: int, out_dir, *, svg: bool = False) -> list[Path]:
    """Write the CSV (and optionally SVG) files regenerating one figure's data."""
    preset = figure_preset(fig_id)
    out = Path(out_dir)
    try:
        out.mkdir(parents=True, exist_ok=True)
    except OSError as exc:
        raise OSError(f"cannot create {out}: {exc.strerror or exc}") from exc
    written = []
    for stem, spec in preset.sweeps:
        records = run_sweep(spec)
        path = out / f"{stem}.csv"
        emit_csv(records, path)
        written.append(path)
        if svg:
            svg_path = out / f"{stem}.svg"
            emit_svg(records, *preset.plot, svg_path)
            written.append(svg_path)
    return written
