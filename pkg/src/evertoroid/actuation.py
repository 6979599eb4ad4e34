"""
Stall-regime motor model linking device force to roller torque, current and
voltage.

Each of the two active rollers carries half of the device force and half of
the drivetrain loss, so per roller tau = r (Fd + Fl) / 2. At stall there is no
back-EMF: tau = Ktau I and I = V / R.
"""

import math
from dataclasses import dataclass

from .params import check_angle
from .statics import solve_climb_forces
from .units import kgcm


@dataclass(frozen=True)
class MotorOperatingPoint:
    voltage_V: float
    current_I: float
    torque_tau_per_roller: float


def roller_torque(Fd, Fl, r):
    return 0.5 * r * (Fd + Fl)


def _volts_per_newton(params):
    d = params.device
    return d.roller_radius_r * d.motor_resistance_R / (2.0 * d.torque_constant_Ktau)


def voltage_for_device_force(params, Fd):
    """Stall voltage needed for the rollers to exert device force ``Fd``."""
    return _volts_per_newton(params) * (Fd + params.device.loss_force_Fl)


def operating_point(params, Fd):
    d = params.device
    tau = roller_torque(Fd, d.loss_force_Fl, d.roller_radius_r)
    current = tau / d.torque_constant_Ktau
    return MotorOperatingPoint(current * d.motor_resistance_R, current, tau)


def voltage_for_angle(params, theta):
    """Stall voltage to begin climbing at ``theta``.

    Written as the angle-independent term plus the weight term; agrees with
    :func:`voltage_via_forces` up to rounding.
    """
    check_angle(theta)
    intercept, slope = voltage_terms(params)
    return intercept + slope * math.sin(theta)


def voltage_via_forces(params, theta):
    return voltage_for_device_force(params, solve_climb_forces(params, theta).device_force_Fd)


def voltage_terms(params):
    """(intercept, weight coefficient) of V = intercept + coefficient * sin(theta)."""
    k = _volts_per_newton(params)
    return k * (params.tip_forces + params.device.loss_force_Fl), k * params.total_weight


def calibrate_lumped_losses(V_at_horizontal, r, R, Ktau):
    """Fe + Fi + Fl backed out from the stall voltage measured at theta = 0."""
    return 2.0 * Ktau * V_at_horizontal / (r * R)


def motor_constants_from_ratings(rated_voltage, stall_current, stall_torque):
    """Motor resistance and torque constant from datasheet stall ratings.

    ``stall_torque`` is in N*m; use :func:`motor_constants_from_kgcm` for
    kg-cm ratings.
    """
    for name, v in (("rated_voltage", rated_voltage), ("stall_current", stall_current),
                    ("stall_torque", stall_torque)):
        if not v > 0 or not math.isfinite(v):
            raise ValueError(f"{name} must be positive")
    return rated_voltage / stall_current, stall_torque / stall_current


def motor_constants_from_kgcm(rated_voltage, stall_current, stall_torque_kgcm):
    return motor_constants_from_ratings(rated_voltage, stall_current, kgcm(stall_torque_kgcm))
