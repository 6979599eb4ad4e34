"""Scenario and state types for the planar locomotion simulator."""

import math
from collections import deque
from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from ..params import DomainError
from .geometry import segments_cross

PENETRATION_TOL = 1e-4  # m
DEFAULT_DT = 0.01  # s
DEFAULT_TIP_SPEED = 0.305 / 5.0  # m/s, pipe length over observed climb time

EVENT_KINDS = ("contact-begin", "deflection", "squeeze-begin", "squeeze-end", "goal-reached", "stuck")


class Aperture(str, Enum):
    PASS_FREE = "pass-free"
    PASS_SQUEEZE = "pass-squeeze"
    BLOCKED = "blocked"


def aperture_check(aperture_width, membrane_diameter, device_diameter):
    """Classify an opening against the soft membrane and the rigid device."""
    if aperture_width >= membrane_diameter:
        return Aperture.PASS_FREE
    if aperture_width >= device_diameter:
        return Aperture.PASS_SQUEEZE
    return Aperture.BLOCKED


def pipe_climb_time(pipe_length, tip_speed):
    if not tip_speed > 0 or pipe_length < 0:
        raise DomainError("pipe_length must be nonnegative and tip_speed positive")
    return pipe_length / tip_speed


@dataclass(frozen=True)
class PlanarScenario:
    """Polygonal world and robot description.

    ``walls`` holds segments as (x0, y0, x1, y1); the segment orientation
    (start to end) breaks ties when the tip meets a wall head on.
    ``start_pose`` is (x, y, heading in rad) of the centerline tip.
    """
    walls: tuple
    start_pose: tuple
    robot_body_length: float
    membrane_diameter: float
    device_diameter: float
    tip_speed: float
    goal_region: tuple
    max_sim_time: float

    @property
    def start_heading(self):
        th = self.start_pose[2]
        return np.array([math.cos(th), math.sin(th)])


def validate_scenario(sc):
    if not 0 < sc.device_diameter < sc.membrane_diameter:
        raise DomainError("device_diameter must be positive and smaller than membrane_diameter")
    if not sc.tip_speed > 0:
        raise DomainError("tip_speed must be positive")
    if not sc.max_sim_time > 0:
        raise DomainError("max_sim_time must be positive")
    if not sc.robot_body_length > 0:
        raise DomainError("robot_body_length must be positive")
    if len(sc.goal_region) < 3:
        raise DomainError("goal_region needs at least three vertices")
    for i, w in enumerate(sc.walls):
        if len(w) != 4:
            raise DomainError(f"wall {i} must have four coordinates")
        if w[0] == w[2] and w[1] == w[3]:
            raise DomainError(f"wall {i} has zero length")
    for i in range(len(sc.walls)):
        for j in range(i + 1, len(sc.walls)):
            if segments_cross(sc.walls[i], sc.walls[j]):
                raise DomainError(f"walls {i} and {j} intersect")
    return sc


@dataclass(frozen=True)
class Event:
    t: float
    kind: str
    wall: int = None

    def __str__(self):
        return self.kind if self.wall is None else f"{self.kind}:{self.wall}"


@dataclass
class SimState:
    """Mutable simulation state, owned by one simulation loop.

    Body points are stored tail first. Each laid-down point keeps an id;
    the tail point, which slides while being retracted, has id -1.
    """
    tip_heading: np.ndarray
    elapsed: float = 0.0
    event_log: list = field(default_factory=list)
    outcome: str = None
    trajectory: list = field(default_factory=list, repr=False)

    _points: deque = field(default_factory=deque, repr=False)
    _ids: deque = field(default_factory=deque, repr=False)
    _widths: deque = field(default_factory=deque, repr=False)
    _walls: deque = field(default_factory=deque, repr=False)
    _seglens: deque = field(default_factory=deque, repr=False)
    _length: float = 0.0
    _next_id: int = 0
    _stall_steps: int = 0
    _tip_contacts: frozenset = frozenset()
    _squeezing: bool = False
    _n_contacts: int = 0

    @property
    def centerline(self):
        return np.array(self._points, dtype=float)

    @property
    def point_ids(self):
        return np.array(self._ids, dtype=int)

    @property
    def local_width(self):
        return np.array(self._widths, dtype=float)

    @property
    def contacts(self):
        return {(i, w) for i, ws in enumerate(self._walls) for w in ws}

    @property
    def tip(self):
        return np.array(self._points[-1])

    @property
    def arc_length(self):
        return self._length

    def events(self, kind):
        return [e for e in self.event_log if e.kind == kind]
