"""
Command-line front end.

Exit status is 0 on success, 1 when an input is outside a model's domain and
2 for I/O or parse problems. Numbers are printed with six significant digits.
"""

import argparse
import math
import sys
import warnings
from pathlib import Path

from . import actuation, anchoring, harness, statics
from .config import ConfigError, load_config
from .params import DomainError, validate
from .sim import run, write_trajectory


def _fmt(x):
    return f"{x:.5e}"


def _robot_env(args):
    doc = load_config(args.config)
    if doc.robot is None or doc.environment is None:
        raise ConfigError(f"{args.config}: needs both robot and environment sections")
    env = doc.environment
    if getattr(args, "angle", None) is not None:
        env = env.at_angle(math.radians(args.angle))
    if getattr(args, "pressure", None) is not None:
        env = env.at_pressure(args.pressure * 1e3)
    validate(doc.robot, env)
    return doc.robot, env


def _write(path, text):
    Path(path).write_text(text, encoding="utf-8", newline="\n")


def cmd_solve(args):
    params, env = _robot_env(args)
    th = env.angle_theta
    sol = statics.solve_climb_forces(params, th)
    print(f"theta_deg  {_fmt(math.degrees(th))}")
    print(f"Fd_N       {_fmt(sol.device_force_Fd)}")
    print(f"Fg_N       {_fmt(sol.grounding_force_Fg)}")
    print(f"Fp_N       {_fmt(sol.pipe_friction_Fp)}")
    print(f"V_volts    {_fmt(actuation.voltage_for_angle(params, th))}")
    print(f"device_at_everting_end  {str(sol.device_at_everting_end).lower()}")


def cmd_sweep_angle(args):
    params, _ = _robot_env(args)
    report = harness.angle_sweep(params, (args.start, args.stop), args.step)
    if args.out:
        _write(args.out, report.to_csv())
    print(report.summary(), end="")
    if args.measured:
        measured = harness.read_measured(args.measured, harness.ANGLE_COLUMNS)
        print("residuals (theta_deg, measured_V, model_V, residual_V):")
        for row in harness.residuals(report, measured, "V_volts"):
            print("  ".join(_fmt(x) for x in row))


def cmd_slip(args):
    params, env = _robot_env(args)
    a = anchoring.assess_slip(params, env, with_battery=args.with_battery)
    print(f"required_N   {_fmt(a.required_friction_Fp)}")
    print(f"available_N  {_fmt(a.available_friction)}")
    print(f"margin_N     {_fmt(a.margin)}")
    print(f"slips        {str(a.slips).lower()}")
    if args.out:
        report = harness.pressure_sweep(env, membrane_weight=params.membrane.weight_Wm)
        _write(args.out, report.to_csv())


def cmd_min_pressure(args):
    params, env = _robot_env(args)
    p = anchoring.min_pressure_for_no_slip(params.weight(args.with_battery), env)
    print(f"P_min_Pa  {_fmt(p)}")


def cmd_calibrate(args):
    params, _ = _robot_env(args)
    d = params.device
    total = actuation.calibrate_lumped_losses(args.voltage, d.roller_radius_r, d.motor_resistance_R,
                                              d.torque_constant_Ktau)
    print(f"Fe_Fi_Fl_N  {_fmt(total)}")


def cmd_simulate(args):
    doc = load_config(args.scenario)
    if doc.sim is None:
        raise ConfigError(f"{args.scenario}: no sim section")
    state, outcome = run(doc.sim, dt=args.dt)
    if args.out:
        write_trajectory(state, args.out)
    print(f"outcome     {outcome}")
    print(f"elapsed_s   {_fmt(state.elapsed)}")
    print(f"tip_x_m     {_fmt(state.tip[0])}")
    print(f"tip_y_m     {_fmt(state.tip[1])}")
    for e in state.event_log:
        print(f"event  {_fmt(e.t)}  {e}")


def build_parser():
    parser = argparse.ArgumentParser(prog="evertoroid", description=__doc__.strip().splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def with_config(p):
        p.add_argument("--config", required=True, help="robot/environment config file")
        return p

    p = with_config(sub.add_parser("solve", help="climb forces and stall voltage at one angle"))
    p.add_argument("--angle", type=float, help="pipe angle in degrees (default: from config)")
    p.set_defaults(func=cmd_solve)

    p = with_config(sub.add_parser("sweep-angle", help="forces and voltage over pipe angles"))
    p.add_argument("--start", type=float, default=-90.0)
    p.add_argument("--stop", type=float, default=90.0)
    p.add_argument("--step", type=float, default=10.0)
    p.add_argument("--out", help="CSV output path")
    p.add_argument("--measured", help="measured points CSV to compare against")
    p.set_defaults(func=cmd_sweep_angle)

    p = with_config(sub.add_parser("slip", help="slip margin in the configured pipe"))
    p.add_argument("--angle", type=float, help="pipe angle in degrees")
    p.add_argument("--pressure", type=float, help="internal pressure in kPa")
    p.add_argument("--with-battery", action="store_true")
    p.add_argument("--out", help="write the slip-load pressure sweep CSV here")
    p.set_defaults(func=cmd_slip)

    p = with_config(sub.add_parser("min-pressure", help="lowest pressure holding the robot vertically"))
    p.add_argument("--with-battery", action="store_true")
    p.set_defaults(func=cmd_min_pressure)

    p = with_config(sub.add_parser("calibrate", help="Fe + Fi + Fl from the horizontal stall voltage"))
    p.add_argument("--voltage", type=float, required=True, help="stall voltage at 0 deg, V")
    p.set_defaults(func=cmd_calibrate)

    p = sub.add_parser("simulate", help="run a planar scenario")
    p.add_argument("--scenario", required=True)
    p.add_argument("--out", help="trajectory CSV output path")
    p.add_argument("--dt", type=float, default=0.01)
    p.set_defaults(func=cmd_simulate)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        with warnings.catch_warnings():
            warnings.simplefilter("always")
            args.func(args)
    except (ConfigError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
