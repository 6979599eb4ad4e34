"""
Ready-made worlds: the zigzag maze with a narrow aperture, the vertical pipe
climb (side view), and simple corridors for checks.
"""

import math

from ..params import PAPER_DEVICE_DIAMETER, PAPER_MEMBRANE_DIAMETER, PAPER_PIPE_LENGTH, PAPER_PIPE_RADIUS
from .model import DEFAULT_TIP_SPEED, PlanarScenario

MAZE_UPPER_WALL_Y = 0.6


def maze_scenario(aperture_width=0.11, membrane_diameter=PAPER_MEMBRANE_DIAMETER,
                  device_diameter=PAPER_DEVICE_DIAMETER, tip_speed=DEFAULT_TIP_SPEED,
                  body_length=0.5, max_sim_time=120.0):
    """Zigzag maze traversed from the left.

    The robot drops onto the lower wall, follows it into a 45 degree ramp,
    climbs to the upper wall and follows that to an aperture formed by two
    panels. The aperture is centred on the line the tip follows along the
    upper wall, so it is met head on.
    """
    y_c = MAZE_UPPER_WALL_Y - membrane_diameter / 2
    y_hi = round(y_c + aperture_width / 2, 9)
    y_lo = round(y_c - aperture_width / 2, 9)
    walls = (
        (-0.5, 0.0, 1.0, 0.0),   # 0 lower wall
        (1.0, 0.0, 1.3, 0.3),    # 1 ramp
        (1.3, 0.3, 2.0, 0.3),    # 2 lower wall, second level
        (2.0, 0.3, 2.0, y_lo),   # 3 lower aperture panel
        (0.9, 0.6, 2.0, 0.6),    # 4 upper wall
        (2.0, 0.6, 2.0, y_hi),   # 5 upper aperture panel
        (0.9, 0.9, 0.9, 0.6),    # 6
        (-0.5, 0.9, 0.9, 0.9),   # 7 top
        (-0.5, 0.0, -0.5, 0.9),  # 8 left end
        (2.0, 0.3, 2.6, 0.3),    # 9 exit lower
        (2.0, 0.6, 2.6, 0.6),    # 10 exit upper
    )
    return PlanarScenario(
        walls=walls,
        start_pose=(0.05, 0.40, math.radians(-45.0)),
        robot_body_length=body_length,
        membrane_diameter=membrane_diameter,
        device_diameter=device_diameter,
        tip_speed=tip_speed,
        goal_region=((2.15, 0.3), (2.6, 0.3), (2.6, 0.6), (2.15, 0.6)),
        max_sim_time=max_sim_time,
    )


def pipe_scenario(pipe_length=PAPER_PIPE_LENGTH, pipe_radius=PAPER_PIPE_RADIUS,
                  membrane_diameter=PAPER_MEMBRANE_DIAMETER, device_diameter=PAPER_DEVICE_DIAMETER,
                  tip_speed=DEFAULT_TIP_SPEED, body_length=0.5):
    """Side view of a vertical pipe; the tip starts at the pipe mouth."""
    r = pipe_radius
    return PlanarScenario(
        walls=((-r, 0.0, -r, pipe_length), (r, 0.0, r, pipe_length)),
        start_pose=(0.0, 0.0, math.pi / 2),
        robot_body_length=body_length,
        membrane_diameter=membrane_diameter,
        device_diameter=device_diameter,
        tip_speed=tip_speed,
        goal_region=((-r, pipe_length), (r, pipe_length), (r, pipe_length + 0.5), (-r, pipe_length + 0.5)),
        max_sim_time=4 * pipe_length / tip_speed,
    )


def corridor_scenario(width, length=1.0, membrane_diameter=PAPER_MEMBRANE_DIAMETER,
                      device_diameter=PAPER_DEVICE_DIAMETER, tip_speed=DEFAULT_TIP_SPEED,
                      body_length=0.3, narrow=None):
    """Straight corridor along +x centred on y = 0.

    ``narrow`` = (x0, x1, w) inserts a section of width w between x0 and x1,
    joined by 45 degree funnels.
    """
    h = width / 2
    if narrow is None:
        walls = ((0.0, -h, length, -h), (0.0, h, length, h))
    else:
        x0, x1, w = narrow
        n = w / 2
        d = h - n
        walls = (
            (0.0, -h, x0, -h), (x0, -h, x0 + d, -n), (x0 + d, -n, x1, -n), (x1, -n, x1 + d, -h),
            (x1 + d, -h, length, -h),
            (0.0, h, x0, h), (x0, h, x0 + d, n), (x0 + d, n, x1, n), (x1, n, x1 + d, h),
            (x1 + d, h, length, h),
        )
    return PlanarScenario(
        walls=walls,
        start_pose=(0.05, 0.0, 0.0),
        robot_body_length=body_length,
        membrane_diameter=membrane_diameter,
        device_diameter=device_diameter,
        tip_speed=tip_speed,
        goal_region=((length - 0.05, -h), (length + 0.5, -h), (length + 0.5, h), (length - 0.05, h)),
        max_sim_time=2 * length / tip_speed,
    )
