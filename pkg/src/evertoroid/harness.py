"""
Parameter sweeps reproducing the two validation experiments: stall voltage
against pipe angle, and slip load against internal pressure.
"""

import csv
import io
import json
import math
from dataclasses import asdict, dataclass, field

import numpy as np

from . import actuation, anchoring, statics
from .params import PAPER_MEMBRANE_MASS_G, PAPER_SLIP_PRESSURES, DomainError
from .units import grams

# The published model curve spans these voltages between -90 and +90 degrees.
PUBLISHED_CURVE_SPAN = (2.41, 2.45)

ANGLE_COLUMNS = ("theta_deg", "Fd_N", "Fg_N", "Fp_N", "V_volts")
PRESSURE_COLUMNS = ("P_Pa", "W_total_N", "load_N")


@dataclass(frozen=True)
class SweepReport:
    sweep_variable: tuple  # (name, units)
    columns: tuple
    samples: tuple  # rows, first entry is the swept input
    model_constants: str  # JSON snapshot, sorted keys
    notes: tuple = field(default=())

    def column(self, name):
        i = self.columns.index(name)
        return np.array([row[i] for row in self.samples], dtype=float)

    def to_csv(self):
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(self.columns)
        for row in self.samples:
            w.writerow([f"{x:.5e}" for x in row])
        return buf.getvalue()

    def summary(self):
        name, units = self.sweep_variable
        lines = [f"sweep over {name} [{units}], {len(self.samples)} samples",
                 "model constants:"]
        for k, v in json.loads(self.model_constants).items():
            lines.append(f"  {k} = {v:.6g}" if isinstance(v, float) else f"  {k} = {v}")
        lines.append("  ".join(f"{c:>12}" for c in self.columns))
        for row in self.samples:
            lines.append("  ".join(f"{x:12.5e}" for x in row))
        for note in self.notes:
            lines.append(f"NOTE: {note}")
        return "\n".join(lines) + "\n"


def _snapshot(extra=None, **objs):
    flat = dict(extra or {})
    for prefix, obj in objs.items():
        for k, v in _flatten(asdict(obj)).items():
            flat[f"{prefix}.{k}"] = v
    return json.dumps(flat, sort_keys=True)


def _flatten(d, prefix=""):
    out = {}
    for k, v in d.items():
        if isinstance(v, dict):
            out.update(_flatten(v, f"{prefix}{k}."))
        else:
            out[f"{prefix}{k}"] = v
    return out


def _grid(start, stop, step):
    if not step > 0:
        raise DomainError("step must be positive")
    n = int(math.floor((stop - start) / step + 1e-9)) + 1
    return [start + i * step for i in range(max(n, 1))]


def voltage_unit_note(params):
    """Describe the gap between the SI voltage curve and the published one."""
    lo = actuation.voltage_for_angle(params, -math.pi / 2)
    hi = actuation.voltage_for_angle(params, math.pi / 2)
    intercept, slope = actuation.voltage_terms(params)
    kg_slope = slope / 9.80665
    return (
        f"unit discrepancy: in SI units the modeled stall voltage runs from {lo:.4f} V at -90 deg "
        f"to {hi:.4f} V at +90 deg (span {hi - lo:.4f} V); the published model curve runs from "
        f"{PUBLISHED_CURVE_SPAN[0]:.2f} V to {PUBLISHED_CURVE_SPAN[1]:.2f} V, which matches the "
        f"weight term taken in kg instead of N ({intercept - kg_slope:.4f} V to "
        f"{intercept + kg_slope:.4f} V). The SI values are reported here."
    )


def angle_sweep(params, theta_range=(-90.0, 90.0), step=10.0):
    """Forces and stall voltage over pipe angles given in degrees."""
    lo, hi = theta_range
    if lo > hi or abs(lo) > 90 or abs(hi) > 90:
        raise DomainError(f"angle range {theta_range} must lie within [-90, 90] degrees")
    rows = []
    for deg in _grid(lo, hi, step):
        th = math.radians(deg)
        sol = statics.solve_climb_forces(params, th)
        v = actuation.voltage_for_angle(params, th)
        rows.append((deg, sol.device_force_Fd, sol.grounding_force_Fg, sol.pipe_friction_Fp, v))
    return SweepReport(
        sweep_variable=("theta", "deg"),
        columns=ANGLE_COLUMNS,
        samples=tuple(rows),
        model_constants=_snapshot(robot=params),
        notes=(voltage_unit_note(params),),
    )


def pressure_sweep(env, pressures=PAPER_SLIP_PRESSURES, membrane_weight=grams(PAPER_MEMBRANE_MASS_G)):
    """Vertical-pipe slip weight over internal pressures (Pa).

    ``load_N`` is the external load at slip, i.e. the total weight minus the
    membrane's own weight.
    """
    ps = [float(p) for p in pressures]
    if any(p < 0 for p in ps):
        raise DomainError("pressures must be nonnegative")
    if any(b <= a for a, b in zip(ps, ps[1:])):
        raise DomainError("pressures must be strictly increasing")
    rows = []
    for p in ps:
        w = anchoring.max_vertical_weight(env.at_pressure(p))
        rows.append((p, w, w - membrane_weight))
    return SweepReport(
        sweep_variable=("P", "Pa"),
        columns=PRESSURE_COLUMNS,
        samples=tuple(rows),
        model_constants=_snapshot({"membrane_weight": membrane_weight}, environment=env),
    )


def read_measured(path_or_text, columns):
    """Rows of a measured-points CSV with the same header as a report.

    Only the swept column and the columns present in the file are used.
    """
    text = path_or_text
    if "\n" not in path_or_text:
        with open(path_or_text, newline="") as fh:
            text = fh.read()
    reader = csv.DictReader(io.StringIO(text))
    if reader.fieldnames is None or reader.fieldnames[0] != columns[0]:
        raise ValueError(f"measured data must start with column {columns[0]!r}")
    unknown = set(reader.fieldnames) - set(columns)
    if unknown:
        raise ValueError(f"unknown measured columns: {sorted(unknown)}")
    return [{k: float(v) for k, v in row.items() if v not in ("", None)} for row in reader]


def residuals(report, measured, target):
    """Per-point (x, measured, model, measured - model) for column ``target``.

    Model values are linearly interpolated between report samples.
    """
    xs = report.column(report.columns[0])
    ys = report.column(target)
    out = []
    for row in measured:
        if target not in row:
            continue
        x = row[report.columns[0]]
        if not xs[0] <= x <= xs[-1]:
            raise DomainError(f"measured point {x} outside the sweep range")
        model = float(np.interp(x, xs, ys))
        out.append((x, row[target], model, row[target] - model))
    return out
