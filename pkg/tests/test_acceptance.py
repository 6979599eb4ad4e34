"""
Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run on its own with ``pytest tests/test_acceptance.py -v`` or
``python3 tests/test_acceptance.py``.
"""

import math
import time
from dataclasses import replace

import numpy as np
import pytest

from evertoroid import actuation, anchoring, harness, statics
from evertoroid.config import parse_config, serialize_config, shipped_config
from evertoroid.params import PipeEnvironment, paper_pipe, paper_robot, validate
from evertoroid.sim import initial_state, maze_scenario, pipe_climb_time, run, step
from evertoroid.units import kgcm


@pytest.fixture
def verdict(capsys):
    """Print one PASS/FAIL line past pytest's capture, then assert."""
    def report(number, title, ok, detail):
        with capsys.disabled():
            print(f"\n[{'PASS' if ok else 'FAIL'}] criterion {number:2d}: {title} ({detail})")
        assert ok, f"criterion {number}: {title}: {detail}"
    return report


def random_parameter_sets(n, seed=20240611):
    rng = np.random.default_rng(seed)
    for _ in range(n):
        wm, wd = rng.uniform(0, 100, 2)
        fe, fi = rng.uniform(0, 50, 2)
        theta = rng.uniform(-math.pi / 2, math.pi / 2)
        p = paper_robot()
        params = replace(p, membrane=replace(p.membrane, weight_Wm=wm, eversion_force_Fe=fe,
                                             inversion_force_Fi=fi),
                         device=replace(p.device, weight_Wd=wd))
        yield params, theta


def test_01_calibration(verdict):
    total = actuation.calibrate_lumped_losses(2.43, 0.017, 7.5, 1.53)
    verdict(1, "calibration Fe+Fi+Fl at 2.43 V", abs(total - 58.3) <= 0.1, f"{total:.4f} N, want 58.3 +/- 0.1")


def test_02_motor_constants(verdict):
    r, k = actuation.motor_constants_from_ratings(12.0, 1.6, kgcm(25))
    ok = abs(r - 7.5) <= 1e-9 and abs(k - 1.53) <= 0.01
    verdict(2, "motor constants from ratings", ok, f"R = {r:.10g} ohm, Ktau = {k:.5f} N*m/A")


def test_03_slip_load(verdict):
    env = paper_pipe(pressure=3450.0)
    w = anchoring.max_vertical_weight(env)
    rep = harness.pressure_sweep(env)
    slope, _ = np.polyfit(rep.column("P_Pa"), rep.column("W_total_N"), 1)
    hand = 0.192 * 2 * math.pi * 0.062 * 0.305
    rel = abs(slope / hand - 1)
    ok = abs(w - 78.7) <= 1.0 and rel <= 1e-9 and len(rep.samples) == 5
    verdict(3, "slip load at 3.45 kPa and five-pressure line", ok,
            f"{w:.3f} N; slope {slope:.7f} N/Pa, relative error {rel:.1e}")


def test_04_min_pressure(verdict):
    p = anchoring.min_pressure_for_no_slip(6.46, paper_pipe())
    verdict(4, "minimum anchoring pressure for 6.46 N", abs(p - 283) <= 5, f"{p:.2f} Pa, want 283 +/- 5")


def test_05_06_oracle_and_residuals(verdict):
    t0 = time.perf_counter()
    worst_gap = worst_res = 0.0
    n = 0
    for params, theta in random_parameter_sets(1000):
        a = statics.solve_climb_forces(params, theta)
        b = statics.oracle_solve(params, theta)
        worst_gap = max(worst_gap, np.max(np.abs(np.subtract(a.as_tuple(), b.as_tuple()))))
        worst_res = max(worst_res, max(map(abs, statics.balance_residuals(params, theta, a))))
        n += 1
    elapsed = time.perf_counter() - t0
    verdict(5, "closed form vs linear-system oracle", n >= 1000 and worst_gap <= 1e-9 and elapsed < 1.0,
            f"{n} draws, max gap {worst_gap:.1e} N, {elapsed:.2f} s")
    verdict(6, "balance residuals of solved forces", worst_res <= 1e-9, f"max residual {worst_res:.1e} N")


def test_07_bracing_independence(verdict):
    params, theta = paper_robot(), math.radians(37.0)
    rng = np.random.default_rng(7)
    fds, margins = set(), set()
    for _ in range(100):
        env = PipeEnvironment(inner_radius_R=rng.uniform(0.02, 0.0685), angle_theta=theta,
                              contact_length_L=rng.uniform(0.05, 1.0), mu_static=rng.uniform(0, 1),
                              pressure_P=rng.uniform(0, 1e4))
        validate(params, env)
        fds.add(statics.solve_climb_forces(params, env.angle_theta).device_force_Fd)
        margins.add(anchoring.assess_slip(params, env).margin)
    verdict(7, "device force independent of bracing", len(fds) == 1,
            f"{len(fds)} distinct Fd over 100 pipes ({len(margins)} distinct slip margins)")


def test_08_voltage_curve(verdict):
    # Wm + Wd = 4.4 N as stated alongside the constants
    rep = harness.angle_sweep(paper_robot(total_weight=4.4))
    th, v = np.radians(rep.column("theta_deg")), rep.column("V_volts")
    slope, intercept = np.polyfit(np.sin(th), v, 1)
    span = v[-1] - v[0]
    noted = any("unit discrepancy" in n for n in rep.notes)
    measured = harness.angle_sweep(paper_robot())
    ok = abs(intercept - 2.43) <= 1e-9 and abs(span - 0.367) <= 1e-3 and noted
    verdict(8, "voltage curve intercept, SI span and unit note", ok,
            f"intercept {intercept:.10f} V, span {span:.5f} V; span from the itemised masses "
            f"{measured.column('V_volts')[-1] - measured.column('V_volts')[0]:.5f} V")


def test_09_maze(verdict):
    t0 = time.perf_counter()
    state, outcome = run(maze_scenario(aperture_width=0.11))
    narrow, narrow_outcome = run(maze_scenario(aperture_width=0.09))
    elapsed = time.perf_counter() - t0
    n_defl = len(state.events("deflection"))
    n_in, n_out = len(state.events("squeeze-begin")), len(state.events("squeeze-end"))
    ok = (outcome == "goal-reached" and n_defl >= 2 and n_in == n_out == 1
          and narrow_outcome == "stuck" and elapsed < 5.0)
    verdict(9, "maze traversal and narrowed aperture", ok,
            f"0.11 m: {outcome}, {n_defl} deflections, {n_in} squeeze interval(s); "
            f"0.09 m: {narrow_outcome}; {elapsed:.2f} s")


def test_10_pipe_time(verdict):
    t = pipe_climb_time(0.305, 0.061)
    verdict(10, "pipe climb time", abs(t - 5.0) <= 0.01, f"{t:.4f} s")


def _final_tip(dt):
    state, outcome = run(maze_scenario(), dt=dt)
    assert outcome == "goal-reached"
    return state.tip


def test_11_simulator_invariants(verdict):
    t0 = time.perf_counter()
    sc = maze_scenario()
    state = initial_state(sc)
    ref = np.full((200_000, 2), np.nan)
    skin_ok, worst_len, w_lo, w_hi = True, -np.inf, np.inf, -np.inf
    while state.outcome is None:
        step(sc, state)
        pts, ids = state.centerline, state.point_ids
        live = ids >= 0
        ids, pts_live = ids[live], pts[live]
        seen = ~np.isnan(ref[ids, 0])
        skin_ok &= bool(np.array_equal(ref[ids[seen]], pts_live[seen]))
        ref[ids[~seen]] = pts_live[~seen]
        worst_len = max(worst_len, np.sum(np.hypot(*np.diff(pts, axis=0).T)) - sc.robot_body_length)
        w_lo, w_hi = min(w_lo, state.local_width.min()), max(w_hi, state.local_width.max())
    widths_ok = sc.device_diameter < w_lo and w_hi <= sc.membrane_diameter

    tips = [_final_tip(dt) for dt in (0.01, 0.005, 0.0025)]
    d1 = float(np.hypot(*(tips[1] - tips[0])))
    d2 = float(np.hypot(*(tips[2] - tips[1])))
    elapsed = time.perf_counter() - t0
    ok = skin_ok and worst_len <= 1e-9 and widths_ok and d2 < 2 * d1 and elapsed < 30
    verdict(11, "stationary skin, arc length, width bounds, dt refinement", ok,
            f"skin {'exact' if skin_ok else 'moved'}, length excess {worst_len:.1e} m, "
            f"width [{w_lo:.4f}, {w_hi:.4f}] m, tip change {d1:.2e} then {d2:.2e} m, {elapsed:.1f} s")


def test_12_config_round_trip(verdict):
    results = []
    for name in ("paper_robot.cfg", "maze.cfg"):
        doc = parse_config(shipped_config(name).encode("utf-8"))
        results.append(parse_config(serialize_config(doc).encode("utf-8")) == doc)
    verdict(12, "config parse/serialize/parse identity", all(results),
            f"paper_robot.cfg {results[0]}, maze.cfg {results[1]}")


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q"]))
