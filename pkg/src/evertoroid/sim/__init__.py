from .engine import initial_state, run, step, write_trajectory, TRAJECTORY_COLUMNS
from .model import (
    Aperture,
    Event,
    PlanarScenario,
    SimState,
    aperture_check,
    pipe_climb_time,
    validate_scenario,
)
from .scenarios import corridor_scenario, maze_scenario, pipe_scenario

__all__ = [
    "Aperture",
    "Event",
    "PlanarScenario",
    "SimState",
    "TRAJECTORY_COLUMNS",
    "aperture_check",
    "corridor_scenario",
    "initial_state",
    "maze_scenario",
    "pipe_climb_time",
    "pipe_scenario",
    "run",
    "step",
    "validate_scenario",
    "write_trajectory",
]
