"""
Strict unit-tagged configuration files.

A config is a JSON object with optional sections ``robot``, ``environment``,
``sim`` and ``output``. Every physical quantity is written as
``{"value": <number or nested list>, "unit": "<tag>"}``; bare numbers,
unknown keys, duplicate keys and unknown units are all errors. Values are
converted to SI on parsing, and :func:`serialize_config` writes SI back out so
that parse -> serialize -> parse is the identity.
"""

import json
import math
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .actuation import calibrate_lumped_losses
from .params import DeviceSpec, MembraneSpec, PipeEnvironment, RobotParams
from .sim.model import PlanarScenario
from .units import SI_UNIT, to_si


class ConfigError(ValueError):
    pass


@dataclass(frozen=True)
class OutputSpec:
    directory: str = "."
    format: str = "csv"


@dataclass(frozen=True)
class ConfigDocument:
    robot: RobotParams = None
    environment: PipeEnvironment = None
    sim: PlanarScenario = None
    output: OutputSpec = None


OUTPUT_FORMATS = ("csv", "text")


def _reject_duplicates(pairs):
    out = {}
    for k, v in pairs:
        if k in out:
            raise ConfigError(f"duplicate key {k!r}")
        out[k] = v
    return out


def _keys(section, obj, required, optional=()):
    if not isinstance(obj, dict):
        raise ConfigError(f"{section} must be an object")
    unknown = set(obj) - set(required) - set(optional)
    if unknown:
        raise ConfigError(f"unknown key {sorted(unknown)[0]!r} in {section}")
    missing = [k for k in required if k not in obj]
    if missing:
        raise ConfigError(f"missing key {missing[0]!r} in {section}")


def _number(x, where):
    if isinstance(x, bool) or not isinstance(x, (int, float)) or not math.isfinite(x):
        raise ConfigError(f"{where}: expected a finite number, got {x!r}")
    return float(x)


def _scale(v, factor, where):
    if isinstance(v, list):
        return tuple(_scale(x, factor, where) for x in v)
    return _number(v, where) * factor


def _qty(obj, key, dimension, section):
    where = f"{section}.{key}"
    q = obj[key]
    if not isinstance(q, dict) or "value" not in q:
        raise ConfigError(f"{where}: expected {{\"value\": ..., \"unit\": ...}}")
    if "unit" not in q:
        raise ConfigError(f"{where}: missing unit")
    extra = set(q) - {"value", "unit"}
    if extra:
        raise ConfigError(f"unknown key {sorted(extra)[0]!r} in {where}")
    try:
        factor = to_si(1.0, q["unit"], dimension)
    except (KeyError, TypeError) as exc:
        raise ConfigError(f"{where}: unit {q['unit']!r} is not a {dimension} unit") from exc
    return _scale(q["value"], factor, where)


def _robot(obj):
    _keys("robot", obj, ("membrane", "device"), ("horizontal_stall_voltage",))
    m = obj["membrane"]
    _keys("robot.membrane", m, ("weight", "outer_diameter", "eversion_force", "inversion_force"))
    membrane = MembraneSpec(
        weight_Wm=_qty(m, "weight", "force", "robot.membrane"),
        inflated_outer_diameter=_qty(m, "outer_diameter", "length", "robot.membrane"),
        eversion_force_Fe=_qty(m, "eversion_force", "force", "robot.membrane"),
        inversion_force_Fi=_qty(m, "inversion_force", "force", "robot.membrane"),
    )
    d = obj["device"]
    _keys("robot.device", d, ("weight", "roller_radius", "motor", "outer_diameter"),
          ("loss_force", "battery_weight"))
    r = _qty(d, "roller_radius", "length", "robot.device")
    res, ktau = _motor(d["motor"])
    calibrated = "horizontal_stall_voltage" in obj
    if calibrated == ("loss_force" in d):
        raise ConfigError("robot: give exactly one of device.loss_force or horizontal_stall_voltage")
    if calibrated:
        v0 = _qty(obj, "horizontal_stall_voltage", "voltage", "robot")
        fl = calibrate_lumped_losses(v0, r, res, ktau) - membrane.eversion_force_Fe - membrane.inversion_force_Fi
    else:
        fl = _qty(d, "loss_force", "force", "robot.device")
    device = DeviceSpec(
        weight_Wd=_qty(d, "weight", "force", "robot.device"),
        roller_radius_r=r,
        motor_resistance_R=res,
        torque_constant_Ktau=ktau,
        loss_force_Fl=fl,
        device_outer_diameter=_qty(d, "outer_diameter", "length", "robot.device"),
        battery_weight=_qty(d, "battery_weight", "force", "robot.device") if "battery_weight" in d else 0.0,
    )
    return RobotParams(membrane, device)


def _motor(m):
    sec = "robot.device.motor"
    if isinstance(m, dict) and "resistance" in m:
        _keys(sec, m, ("resistance", "torque_constant"))
        return _qty(m, "resistance", "resistance", sec), _qty(m, "torque_constant", "torque_constant", sec)
    _keys(sec, m, ("rated_voltage", "stall_current", "stall_torque"))
    current = _qty(m, "stall_current", "current", sec)
    if not current > 0:
        raise ConfigError(f"{sec}.stall_current must be positive")
    return (_qty(m, "rated_voltage", "voltage", sec) / current,
            _qty(m, "stall_torque", "torque", sec) / current)


_ENV_FIELDS = (
    ("inner_radius", "inner_radius_R", "length"),
    ("angle", "angle_theta", "angle"),
    ("contact_length", "contact_length_L", "length"),
    ("mu_static", "mu_static", "dimensionless"),
    ("pressure", "pressure_P", "pressure"),
)


def _environment(obj):
    _keys("environment", obj, [k for k, _, _ in _ENV_FIELDS], ("burst_pressure",))
    kw = {attr: _qty(obj, key, dim, "environment") for key, attr, dim in _ENV_FIELDS}
    if "burst_pressure" in obj:
        kw["burst_pressure"] = _qty(obj, "burst_pressure", "pressure", "environment")
    return PipeEnvironment(**kw)


_SIM_FIELDS = (
    ("body_length", "robot_body_length", "length"),
    ("membrane_diameter", "membrane_diameter", "length"),
    ("device_diameter", "device_diameter", "length"),
    ("tip_speed", "tip_speed", "speed"),
    ("max_sim_time", "max_sim_time", "time"),
)


def _sim(obj):
    _keys("sim", obj, ("walls", "start", "goal") + tuple(k for k, _, _ in _SIM_FIELDS))
    walls = _qty(obj, "walls", "length", "sim")
    if not all(isinstance(w, tuple) and len(w) == 4 for w in walls):
        raise ConfigError("sim.walls: each wall is [x0, y0, x1, y1]")
    start = obj["start"]
    _keys("sim.start", start, ("position", "heading"))
    pos = _qty(start, "position", "length", "sim.start")
    if not isinstance(pos, tuple) or len(pos) != 2:
        raise ConfigError("sim.start.position must be [x, y]")
    heading = _qty(start, "heading", "angle", "sim.start")
    goal = _qty(obj, "goal", "length", "sim")
    if not all(isinstance(v, tuple) and len(v) == 2 for v in goal):
        raise ConfigError("sim.goal: vertices are [x, y]")
    kw = {attr: _qty(obj, key, dim, "sim") for key, attr, dim in _SIM_FIELDS}
    return PlanarScenario(walls=walls, start_pose=pos + (heading,), goal_region=goal, **kw)


def _output(obj):
    _keys("output", obj, (), ("directory", "format"))
    fmt = obj.get("format", "csv")
    if fmt not in OUTPUT_FORMATS:
        raise ConfigError(f"output.format must be one of {OUTPUT_FORMATS}")
    directory = obj.get("directory", ".")
    if not isinstance(directory, str):
        raise ConfigError("output.directory must be a string")
    return OutputSpec(directory, fmt)


def parse_config(text):
    """Parse and validate a config document from bytes or str."""
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ConfigError(f"config is not UTF-8: {exc}") from exc
    try:
        raw = json.loads(text, object_pairs_hook=_reject_duplicates)
    except json.JSONDecodeError as exc:
        raise ConfigError(f"parse error at line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc
    _keys("config", raw, (), ("robot", "environment", "sim", "output"))
    return ConfigDocument(
        robot=_robot(raw["robot"]) if "robot" in raw else None,
        environment=_environment(raw["environment"]) if "environment" in raw else None,
        sim=_sim(raw["sim"]) if "sim" in raw else None,
        output=_output(raw["output"]) if "output" in raw else None,
    )


def _q(value, dimension):
    if isinstance(value, tuple):
        value = json.loads(json.dumps(value))
    return {"value": value, "unit": SI_UNIT[dimension]}


def to_dict(doc):
    out = {}
    if doc.robot is not None:
        m, d = doc.robot.membrane, doc.robot.device
        out["robot"] = {
            "membrane": {
                "weight": _q(m.weight_Wm, "force"),
                "outer_diameter": _q(m.inflated_outer_diameter, "length"),
                "eversion_force": _q(m.eversion_force_Fe, "force"),
                "inversion_force": _q(m.inversion_force_Fi, "force"),
            },
            "device": {
                "weight": _q(d.weight_Wd, "force"),
                "battery_weight": _q(d.battery_weight, "force"),
                "roller_radius": _q(d.roller_radius_r, "length"),
                "motor": {
                    "resistance": _q(d.motor_resistance_R, "resistance"),
                    "torque_constant": _q(d.torque_constant_Ktau, "torque_constant"),
                },
                "loss_force": _q(d.loss_force_Fl, "force"),
                "outer_diameter": _q(d.device_outer_diameter, "length"),
            },
        }
    if doc.environment is not None:
        e = doc.environment
        out["environment"] = {key: _q(getattr(e, attr), dim) for key, attr, dim in _ENV_FIELDS}
        out["environment"]["burst_pressure"] = _q(e.burst_pressure, "pressure")
    if doc.sim is not None:
        s = doc.sim
        out["sim"] = {
            "walls": _q(s.walls, "length"),
            "start": {"position": _q(s.start_pose[:2], "length"), "heading": _q(s.start_pose[2], "angle")},
            "goal": _q(s.goal_region, "length"),
        }
        out["sim"].update({key: _q(getattr(s, attr), dim) for key, attr, dim in _SIM_FIELDS})
    if doc.output is not None:
        out["output"] = {"directory": doc.output.directory, "format": doc.output.format}
    return out


def serialize_config(doc):
    return json.dumps(to_dict(doc), indent=2) + "\n"


def shipped_config(name):
    """Text of a config shipped with the package (e.g. ``paper_robot.cfg``)."""
    return resources.files("evertoroid").joinpath("data", name).read_text(encoding="utf-8")


def load_config(path):
    """Parse the file at ``path``, falling back to a shipped config of that name."""
    p = Path(path)
    if p.exists():
        return parse_config(p.read_bytes())
    try:
        return parse_config(shipped_config(p.name))
    except FileNotFoundError:
        raise FileNotFoundError(f"config file not found: {path}") from None
