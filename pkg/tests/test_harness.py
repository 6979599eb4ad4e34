import json
import math

import numpy as np
import pytest

from evertoroid.harness import (
    ANGLE_COLUMNS,
    angle_sweep,
    pressure_sweep,
    read_measured,
    residuals,
    voltage_unit_note,
)
from evertoroid.params import DomainError, paper_pipe, paper_robot

VOLTS_PER_N = 0.017 * 7.5 / (2 * 1.53)


def test_angle_sweep_shape_and_intercept():
    rep = angle_sweep(paper_robot())
    theta = rep.column("theta_deg")
    assert len(rep.samples) == 19
    assert np.all(np.diff(theta) > 0)
    assert theta[0] == -90 and theta[-1] == 90
    assert rep.column("V_volts")[9] == pytest.approx(2.43, abs=1e-9)


def test_angle_sweep_span():
    rep = angle_sweep(paper_robot(total_weight=4.4))
    v = rep.column("V_volts")
    assert v[-1] - v[0] == pytest.approx(2 * VOLTS_PER_N * 4.4, abs=1e-12)
    assert v[-1] - v[0] == pytest.approx(0.367, abs=1e-3)


def test_angle_sweep_columns_follow_statics():
    rep = angle_sweep(paper_robot(total_weight=4.4), (0, 90), 10)
    fd, fp = rep.column("Fd_N"), rep.column("Fp_N")
    s = np.sin(np.radians(rep.column("theta_deg")))
    assert np.allclose(fd, 20 + 4.4 * s, atol=1e-12)
    assert np.allclose(fp, 4.4 * s, atol=1e-12)


def test_degenerate_sweep():
    rep = angle_sweep(paper_robot(), (0, 10), 20)
    assert [row[0] for row in rep.samples] == [0]


def test_sweep_domain():
    with pytest.raises(DomainError):
        angle_sweep(paper_robot(), (-100, 90), 10)
    with pytest.raises(DomainError):
        angle_sweep(paper_robot(), (0, 90), 0)


def test_notes_record_unit_discrepancy():
    rep = angle_sweep(paper_robot())
    (note,) = rep.notes
    assert note.startswith("unit discrepancy")
    assert "2.41" in note and "2.45" in note
    assert note == voltage_unit_note(paper_robot())


def test_snapshot_is_serialized_constants():
    rep = angle_sweep(paper_robot())
    snap = json.loads(rep.model_constants)
    assert snap["robot.device.motor_resistance_R"] == 7.5
    assert snap["robot.membrane.eversion_force_Fe"] == 10.0


def test_csv_format():
    text = angle_sweep(paper_robot(), (0, 20), 10).to_csv()
    lines = text.split("\n")
    assert lines[0] == ",".join(ANGLE_COLUMNS)
    assert lines[1].startswith("0.00000e+00,")
    assert "\r" not in text and text.endswith("\n")
    assert len(lines) == 5


def test_sweep_is_deterministic():
    assert angle_sweep(paper_robot()).to_csv() == angle_sweep(paper_robot()).to_csv()


def test_pressure_sweep():
    rep = pressure_sweep(paper_pipe())
    p, w, load = rep.column("P_Pa"), rep.column("W_total_N"), rep.column("load_N")
    assert list(p) == [700, 1387.5, 2075, 2762.5, 3450]
    assert w[-1] == pytest.approx(78.7, abs=0.05)
    slope = 0.192 * 2 * math.pi * 0.062 * 0.305
    assert np.allclose(np.diff(w) / np.diff(p), slope, rtol=1e-9)
    assert np.allclose(w - load, 0.085 * 9.80665, atol=1e-12)


def test_pressure_sweep_zero_and_order():
    rep = pressure_sweep(paper_pipe(), [0.0, 1000.0])
    assert rep.samples[0][1] == 0.0
    with pytest.raises(DomainError):
        pressure_sweep(paper_pipe(), [1000.0, 700.0])
    with pytest.raises(DomainError):
        pressure_sweep(paper_pipe(), [-1.0, 700.0])


def test_residuals_against_measured(tmp_path):
    path = tmp_path / "measured.csv"
    path.write_text("theta_deg,V_volts\n0,2.40\n45,2.50\n", encoding="utf-8")
    rep = angle_sweep(paper_robot(), (0, 90), 10)
    rows = residuals(rep, read_measured(str(path), ANGLE_COLUMNS), "V_volts")
    assert rows[0] == pytest.approx((0.0, 2.40, 2.43, -0.03))
    # 45 deg sits between samples and is interpolated linearly
    v40, v50 = rep.column("V_volts")[4:6]
    assert rows[1][2] == pytest.approx(0.5 * (v40 + v50), rel=1e-12)


def test_measured_column_checks():
    with pytest.raises(ValueError):
        read_measured("angle,V_volts\n0,2.4\n", ANGLE_COLUMNS)
    with pytest.raises(ValueError):
        read_measured("theta_deg,volts\n0,2.4\n", ANGLE_COLUMNS)
    rep = angle_sweep(paper_robot(), (0, 90), 10)
    with pytest.raises(DomainError):
        residuals(rep, read_measured("theta_deg,V_volts\n-10,2.4\n", ANGLE_COLUMNS), "V_volts")
