"""
Friction anchoring of the pressurized membrane against a pipe wall.

The normal force between membrane and pipe is the internal pressure acting
over the contact area 2 pi R L, plus the component of the robot weight
perpendicular to the pipe axis. Static friction caps the supporting force at
mu_s times that normal force.
"""

import math
import warnings
from dataclasses import dataclass

from .params import DomainError

# Ties count as holding; this band only absorbs rounding in the comparison.
TIE_RTOL = 1e-12


class BurstPressureWarning(UserWarning):
    pass


@dataclass(frozen=True)
class SlipAssessment:
    required_friction_Fp: float
    available_friction: float
    margin: float
    slips: bool


def contact_length(membrane_length, pipe_length):
    """Membrane-pipe contact length: the shorter of the two."""
    return min(membrane_length, pipe_length)


def contact_area(env):
    return 2.0 * math.pi * env.inner_radius_R * env.contact_length_L


def _check_pressed(env, membrane_diameter):
    if membrane_diameter is not None and not membrane_diameter > 2.0 * env.inner_radius_R:
        raise DomainError(
            f"membrane does not press against pipe: outer diameter {membrane_diameter} m "
            f"is not larger than pipe inner diameter {2.0 * env.inner_radius_R} m")
    if env.pressure_P > env.burst_pressure:
        warnings.warn(
            f"pressure {env.pressure_P:.0f} Pa exceeds the membrane burst limit "
            f"{env.burst_pressure:.0f} Pa", BurstPressureWarning, stacklevel=3)


def available_friction(env, params, with_battery=False):
    """Largest friction force the pipe can supply at the environment's angle."""
    _check_pressed(env, params.membrane.inflated_outer_diameter)
    normal = env.pressure_P * contact_area(env) + params.weight(with_battery) * math.cos(env.angle_theta)
    return env.mu_static * normal


def max_vertical_weight(env, membrane_diameter=None):
    """Heaviest robot a vertical pipe can hold at the environment's pressure."""
    _check_pressed(env, membrane_diameter)
    return env.mu_static * env.pressure_P * contact_area(env)


def min_pressure_for_no_slip(total_weight, env):
    """Pressure at which a vertical pipe holds exactly ``total_weight``."""
    denom = env.mu_static * contact_area(env)
    if denom == 0:
        raise DomainError("mu_static, inner_radius_R and contact_length_L must all be nonzero")
    return total_weight / denom


def assess_slip(params, env, with_battery=False):
    w = params.weight(with_battery)
    required = w * math.sin(env.angle_theta)
    available = available_friction(env, params, with_battery)
    margin = available - abs(required)
    slips = margin < -TIE_RTOL * max(available, abs(required))
    return SlipAssessment(required, available, margin, slips)
