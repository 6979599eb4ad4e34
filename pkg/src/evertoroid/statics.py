"""
Quasistatic force balance of the robot climbing a pipe at angle theta.

Three balances close the system for the unknowns (Fd, Fg, Fp):

    membrane, along the pipe:   Fp + Fd - Wm sin(theta) - Fg = 0
    tension along the membrane: Fe + Fi + Fp - Fd = 0
    device, along the pipe:     Fg - Fd - Wd sin(theta) = 0

Forces are signed along the direction of travel (up the pipe for theta > 0).
"""

import math
from dataclasses import dataclass

import numpy as np

from .params import check_angle

RESIDUAL_TOL = 1e-9  # N


@dataclass(frozen=True)
class ForceSolution:
    device_force_Fd: float
    grounding_force_Fg: float
    pipe_friction_Fp: float
    device_at_everting_end: bool

    def as_tuple(self):
        return (self.device_force_Fd, self.grounding_force_Fg, self.pipe_friction_Fp)


def solve_climb_forces(params, theta):
    """Closed-form solution of the force balance.

    A negative grounding force means the device cannot push on the inverting
    end; it drives itself to the everting (lower) end and grounds there
    instead, which is flagged by ``device_at_everting_end``. The returned Fg
    keeps its sign.
    """
    check_angle(theta)
    s = math.sin(theta)
    wm, wd = params.membrane.weight_Wm, params.device.weight_Wd
    tip = params.tip_forces
    fd = tip + (wm + wd) * s
    fg = tip + (wm + 2.0 * wd) * s
    fp = (wm + wd) * s
    return ForceSolution(fd, fg, fp, fg < 0)


def balance_residuals(params, theta, forces):
    """Left-hand sides of the three balances at the given forces."""
    s = math.sin(theta)
    wm, wd = params.membrane.weight_Wm, params.device.weight_Wd
    fd, fg, fp = forces.as_tuple()
    r1 = fp + fd - wm * s - fg
    r2 = params.tip_forces + fp - fd
    r3 = fg - fd - wd * s
    return r1, r2, r3


_BALANCE_MATRIX = np.array([
    # Fd    Fg    Fp
    [1.0, -1.0, 1.0],
    [-1.0, 0.0, 1.0],
    [-1.0, 1.0, 0.0],
])


class SingularSystemError(ArithmeticError):
    pass


def oracle_solve(params, theta):
    """Solve the balance as a generic 3x3 linear system.

    Independent of the closed form; used to cross-check it.
    """
    check_angle(theta)
    s = math.sin(theta)
    rhs = np.array([
        params.membrane.weight_Wm * s,
        -params.tip_forces,
        params.device.weight_Wd * s,
    ])
    try:
        fd, fg, fp = np.linalg.solve(_BALANCE_MATRIX, rhs)
    except np.linalg.LinAlgError as exc:
        raise SingularSystemError("force balance matrix reported singular") from exc
    return ForceSolution(float(fd), float(fg), float(fp), bool(fg < 0))
