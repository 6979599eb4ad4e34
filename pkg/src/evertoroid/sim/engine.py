"""
Quasistatic kinematics of an everting toroid in a planar world.

The outer skin never slides: the tip lays new body points down and they stay
put until the tail inverts them away. Each step the tip advances by
``tip_speed * dt`` along its heading. When a wall enters the tip cap (the
front of the membrane ahead of the rigid device) the tip stops exactly at the
touch, its heading is projected onto the wall tangent, and the rest of the
step continues along the new heading. Walls passing beside the core squeeze
the body; the local width is the clearance between side walls, capped at the
inflated diameter.
"""

import csv
import functools
import math

import numpy as np

from .geometry import cap_onset, closest_points, left_normal, point_in_convex_polygon, unit
from .model import DEFAULT_DT, PENETRATION_TOL, Event, SimState, validate_scenario

STRIP_EPS = 1e-9  # shrink of the core half-width so walls exactly at the core edge run alongside
BLOCK_TOL = 1e-9  # m; a heading is blocked if a wall touches the cap within this travel
PERP_TOL = 1e-12
MAX_CONTACTS_PER_STEP = 8
STALL_FRACTION = 0.1
STALL_STEPS = 50


class _World:
    def __init__(self, sc):
        self.walls = np.array(sc.walls, dtype=float).reshape(-1, 4)
        self.a = 0.5 * sc.membrane_diameter
        self.b = 0.5 * sc.device_diameter - STRIP_EPS
        self.width = sc.membrane_diameter
        self.goal = np.array(sc.goal_region, dtype=float)
        self.tangents = np.array([unit(w[2:] - w[:2]) for w in self.walls]).reshape(-1, 2)

    def onset(self, p, h):
        if len(self.walls) == 0:
            return np.empty(0), np.empty((0, 2))
        return cap_onset(self.walls, p, h, self.a, self.b)

    def blocked(self, p, h):
        on, _ = self.onset(p, h)
        return bool(on.size) and float(on.min()) < BLOCK_TOL

    def survey(self, p, h):
        """Width and wall contacts of a body point laid down at ``p`` heading ``h``."""
        if len(self.walls) == 0:
            return self.width, ()
        q, dist, _ = closest_points(p, self.walls)
        lat = (q - p) @ left_normal(h)
        side = (dist <= self.a) & (np.abs(lat) >= self.b)
        left, right = side & (lat > 0), side & (lat < 0)
        width = self.width
        if left.any() and right.any():
            width = min(width, float(dist[left].min() + dist[right].min()))
        touching = tuple(int(i) for i in np.flatnonzero(dist <= self.a + PENETRATION_TOL))
        return width, touching

    def walls_at(self, point, first):
        """``first`` plus every wall with an endpoint at ``point``."""
        ends = np.concatenate([self.walls[:, :2], self.walls[:, 2:]])
        hit = np.flatnonzero(np.hypot(*(ends - point).T) <= 1e-12) % len(self.walls)
        return sorted(set(hit.tolist()) | {first})


@functools.lru_cache(maxsize=32)
def _world(sc):
    return _World(sc)


def _lay(state, world, p, h, new_id=True):
    p = (float(p[0]), float(p[1]))
    if state._points:
        last = state._points[-1]
        seg = math.hypot(p[0] - last[0], p[1] - last[1])
        if seg == 0.0:
            return
        state._seglens.append(seg)
        state._length += seg
    width, touching = world.survey(np.array(p), h)
    state._points.append(p)
    state._ids.append(state._next_id if new_id else -1)
    state._next_id += new_id
    state._widths.append(width)
    state._walls.append(touching)
    state._n_contacts += len(touching)


def _pop_tail(state):
    state._points.popleft()
    state._ids.popleft()
    state._widths.popleft()
    state._n_contacts -= len(state._walls.popleft())
    state._length -= state._seglens.popleft()


def _retract(state, world, body_length):
    while len(state._seglens) > 1 and state._length - state._seglens[0] >= body_length:
        _pop_tail(state)
    excess = state._length - body_length
    if excess <= 0:
        return
    (x0, y0), (x1, y1) = state._points[0], state._points[1]
    seg = state._seglens[0]
    frac = excess / seg
    tail = (x0 + (x1 - x0) * frac, y0 + (y1 - y0) * frac)
    h = np.array([x1 - x0, y1 - y0]) / seg
    width, touching = world.survey(np.array(tail), h)
    state._points[0] = tail
    state._ids[0] = -1
    state._widths[0] = width
    state._n_contacts += len(touching) - len(state._walls[0])
    state._walls[0] = touching
    state._seglens[0] = seg - excess
    state._length = body_length


def initial_state(scenario):
    """Straight body of full length ending at the start pose."""
    validate_scenario(scenario)
    world = _world(scenario)
    h = scenario.start_heading
    tip = np.array(scenario.start_pose[:2], dtype=float)
    state = SimState(tip_heading=h)
    _lay(state, world, tip - scenario.robot_body_length * h, h)
    _lay(state, world, tip, h)
    state._length = scenario.robot_body_length
    state._seglens[0] = scenario.robot_body_length
    state._tip_contacts = frozenset(state._walls[-1])
    state._squeezing = state._widths[-1] < world.width
    return state


def _deflect(world, p, h, wall, touch):
    """New heading after the cap touches ``wall`` at ``touch``, or None if wedged.

    The heading is projected onto the wall tangent. At a shared endpoint the
    wall needing the smaller turn wins (lower index on ties). Head-on contact
    prefers the wall's stored orientation, falling back to the reverse
    direction when the preferred one is blocked.
    """
    options = []
    for w in world.walls_at(touch, wall):
        t = world.tangents[w]
        c = float(h @ t)
        if abs(c) > PERP_TOL:
            options.append((math.acos(min(1.0, abs(c))), w, 0, math.copysign(1.0, c) * t))
        else:
            options.append((0.5 * math.pi, w, 0, t))
            options.append((0.5 * math.pi, w, 1, -t))
    options.sort(key=lambda o: o[:3])
    for _, w, _, cand in options:
        if not world.blocked(p, cand):
            return cand / math.hypot(cand[0], cand[1])
    return None


def step(scenario, state, dt=DEFAULT_DT):
    """Advance the simulation by ``dt``; mutates and returns ``state``."""
    if state.outcome is not None:
        return state
    if not dt > 0:
        raise ValueError("dt must be positive")
    world = _world(scenario)
    t0 = state.elapsed
    v = scenario.tip_speed
    commanded = v * dt
    remaining = commanded
    p = state.tip
    h = state.tip_heading
    events = []
    touching = set(state._tip_contacts)

    for _ in range(MAX_CONTACTS_PER_STEP):
        onset, touch = world.onset(p, h)
        j = int(np.argmin(onset)) if onset.size else -1
        if j < 0 or onset[j] > remaining:
            p = p + remaining * h
            remaining = 0.0
            break
        s = max(float(onset[j]), 0.0)
        if s > 0:
            p = p + s * h
            remaining -= s
            _lay(state, world, p, h)
        t_hit = t0 + (commanded - remaining) / v
        if j not in touching:
            events.append(Event(t_hit, "contact-begin", j))
            touching.add(j)
        new_h = _deflect(world, p, h, j, touch[j])
        if new_h is None:
            break
        h = new_h
        events.append(Event(t_hit, "deflection", j))

    _lay(state, world, p, h)
    state.tip_heading = h
    _retract(state, world, scenario.robot_body_length)
    state.elapsed = t0 + dt
    t1 = state.elapsed

    tip_walls = frozenset(state._walls[-1])
    for w in sorted(tip_walls - touching):
        events.append(Event(t1, "contact-begin", w))
    state._tip_contacts = tip_walls

    squeezing = state._widths[-1] < world.width
    if squeezing != state._squeezing:
        events.append(Event(t1, "squeeze-begin" if squeezing else "squeeze-end"))
        state._squeezing = squeezing

    advanced = commanded - remaining
    state._stall_steps = state._stall_steps + 1 if advanced < STALL_FRACTION * commanded else 0

    if point_in_convex_polygon(state.tip, world.goal):
        events.append(Event(t1, "goal-reached"))
        state.outcome = "goal-reached"
    elif state._stall_steps >= STALL_STEPS:
        events.append(Event(t1, "stuck"))
        state.outcome = "stuck"

    state.event_log.extend(events)
    tip = state._points[-1]
    state.trajectory.append((t1, tip[0], tip[1], float(h[0]), float(h[1]), state._n_contacts,
                             ";".join(str(e) for e in events)))
    return state


def run(scenario, dt=DEFAULT_DT):
    """Step until the goal is reached, the tip is stuck, or time runs out.

    Returns (final state, outcome) with outcome one of "goal-reached",
    "stuck" or "timeout".
    """
    state = initial_state(scenario)
    n_max = math.ceil(scenario.max_sim_time / dt - 1e-9)
    for _ in range(n_max):
        step(scenario, state, dt)
        if state.outcome is not None:
            return state, state.outcome
    state.outcome = "timeout"
    return state, state.outcome


TRAJECTORY_COLUMNS = ("t", "tip_x", "tip_y", "heading_x", "heading_y", "n_contacts", "event")


def write_trajectory(state, path):
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(TRAJECTORY_COLUMNS)
        for t, x, y, hx, hy, n, ev in state.trajectory:
            w.writerow([f"{t:.5e}", f"{x:.5e}", f"{y:.5e}", f"{hx:.5e}", f"{hy:.5e}", n, ev])
