import math
import warnings
from dataclasses import replace

import numpy as np
import pytest
from hypothesis import given, strategies as st

from evertoroid.anchoring import (
    BurstPressureWarning,
    assess_slip,
    available_friction,
    contact_length,
    max_vertical_weight,
    min_pressure_for_no_slip,
)
from evertoroid.params import DomainError, paper_pipe, paper_robot

# mu_s * 2 pi R L for the test pipe, by hand: 0.192 * 2 * pi * 0.062 * 0.305
SLOPE = 0.192 * 2 * math.pi * 0.062 * 0.305


def test_hand_slope():
    assert SLOPE == pytest.approx(0.0228125, rel=1e-4)


def test_vertical_unpressurized_has_no_friction():
    assert available_friction(paper_pipe(pressure=0.0), paper_robot()) == pytest.approx(0.0, abs=1e-15)


def test_available_friction_at_top_pressure():
    f = available_friction(paper_pipe(pressure=3450.0), paper_robot())
    assert f == pytest.approx(SLOPE * 3450, rel=1e-12)
    assert f == pytest.approx(78.7, abs=0.05)


def test_doubling_pressure_doubles_vertical_friction():
    p = paper_robot()
    f1 = available_friction(paper_pipe(pressure=1000.0), p)
    f2 = available_friction(paper_pipe(pressure=2000.0), p)
    assert f2 == pytest.approx(2 * f1, rel=1e-12)


def test_membrane_must_press_on_pipe():
    wide = replace(paper_pipe(), inner_radius_R=0.08)
    with pytest.raises(DomainError, match="membrane does not press against pipe"):
        available_friction(wide, paper_robot())
    with pytest.raises(DomainError):
        max_vertical_weight(wide, membrane_diameter=0.137)


def test_max_vertical_weight():
    assert max_vertical_weight(paper_pipe(pressure=3450.0)) == pytest.approx(78.7, abs=0.05)
    assert max_vertical_weight(paper_pipe(pressure=0.0)) == 0.0
    assert max_vertical_weight(paper_pipe(pressure=700.0)) == pytest.approx(SLOPE * 700, rel=1e-12)
    assert max_vertical_weight(paper_pipe(pressure=700.0)) == pytest.approx(16.0, abs=0.05)


def test_min_pressure_with_battery():
    w = paper_robot().weight(with_battery=True)
    assert w == pytest.approx(6.46, abs=0.005)
    p = min_pressure_for_no_slip(6.46, paper_pipe())
    assert p == pytest.approx(6.46 / SLOPE, rel=1e-12)
    assert p == pytest.approx(283.0, abs=1.0)
    assert min_pressure_for_no_slip(0.0, paper_pipe()) == 0.0


def test_min_pressure_needs_contact():
    with pytest.raises(DomainError):
        min_pressure_for_no_slip(1.0, replace(paper_pipe(), mu_static=0.0))


@given(w=st.floats(1e-3, 200))
def test_min_pressure_inverts_max_weight(w):
    env = paper_pipe()
    p = min_pressure_for_no_slip(w, env)
    assert max_vertical_weight(env.at_pressure(p)) == pytest.approx(w, abs=1e-9)


@given(p=st.floats(0, 1e4), t1=st.floats(0, math.pi / 2), t2=st.floats(0, math.pi / 2))
def test_friction_nonincreasing_in_tilt(p, t1, t2):
    lo, hi = sorted((t1, t2))
    robot = paper_robot()
    assert available_friction(paper_pipe(p, hi), robot) <= available_friction(paper_pipe(p, lo), robot) + 1e-12


@given(p=st.floats(0, 1e4), theta=st.floats(-math.pi / 2, math.pi / 2))
def test_friction_affine_in_pressure(p, theta):
    robot = paper_robot()
    f0 = available_friction(paper_pipe(0.0, theta), robot)
    assert available_friction(paper_pipe(p, theta), robot) == pytest.approx(f0 + SLOPE * p, rel=1e-9, abs=1e-9)


def test_slip_at_min_pressure_is_boundary():
    robot = paper_robot()
    p = min_pressure_for_no_slip(robot.weight(with_battery=True), paper_pipe())
    a = assess_slip(robot, paper_pipe(pressure=p), with_battery=True)
    assert a.margin == pytest.approx(0.0, abs=1e-9)
    assert not a.slips
    # just below the boundary it slips
    assert assess_slip(robot, paper_pipe(pressure=p * 0.999), with_battery=True).slips


def test_horizontal_never_slips():
    for p in (0.0, 100.0, 3450.0):
        a = assess_slip(paper_robot(), paper_pipe(pressure=p, theta=0.0))
        assert a.required_friction_Fp == 0.0
        assert not a.slips


def test_vertical_margin_at_top_pressure():
    a = assess_slip(paper_robot(total_weight=4.4), paper_pipe(pressure=3450.0))
    assert a.margin == pytest.approx(SLOPE * 3450 - 4.4, abs=1e-9)
    assert a.margin == pytest.approx(74.3, abs=0.05)
    assert not a.slips


@given(p=st.floats(0, 5000), theta=st.floats(-math.pi / 2, math.pi / 2))
def test_slip_assessment_invariants(p, theta):
    a = assess_slip(paper_robot(), paper_pipe(p, theta))
    assert a.margin == a.available_friction - abs(a.required_friction_Fp)
    if a.margin >= 0:
        assert not a.slips
    elif a.margin < -1e-9:
        assert a.slips


def test_burst_pressure_warns():
    with pytest.warns(BurstPressureWarning):
        max_vertical_weight(paper_pipe(pressure=12e3))
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        max_vertical_weight(paper_pipe(pressure=3450.0))


def test_contact_length_is_shorter_of_two():
    assert contact_length(0.6, 0.305) == 0.305
    assert contact_length(0.2, 0.305) == 0.2


def test_five_pressure_line_passes_through_origin():
    ps = np.array([700.0, 1387.5, 2075.0, 2762.5, 3450.0])
    w = [max_vertical_weight(paper_pipe(pressure=p)) for p in ps]
    slope, intercept = np.polyfit(ps, w, 1)
    assert slope == pytest.approx(SLOPE, rel=1e-9)
    assert intercept == pytest.approx(0.0, abs=1e-9)
