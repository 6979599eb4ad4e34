"""
Unit conversion to SI.

Every quantity handled by the package is stored in SI internally. Weights are
forces (N); masses given in g or kg are multiplied by standard gravity.
"""

import math

STANDARD_GRAVITY = 9.80665  # m/s^2
KGCM = 0.0980665  # N*m per kg-cm

# dimension -> {unit tag: factor to SI}
UNITS = {
    "force": {"N": 1.0, "kN": 1e3, "g": STANDARD_GRAVITY * 1e-3, "kg": STANDARD_GRAVITY},
    "length": {"m": 1.0, "cm": 1e-2, "mm": 1e-3},
    "angle": {"rad": 1.0, "deg": math.pi / 180.0},
    "pressure": {"Pa": 1.0, "kPa": 1e3},
    "resistance": {"ohm": 1.0, "kohm": 1e3},
    "voltage": {"V": 1.0, "mV": 1e-3},
    "current": {"A": 1.0, "mA": 1e-3},
    "torque": {"N*m": 1.0, "kg-cm": KGCM},
    "torque_constant": {"N*m/A": 1.0, "kg-cm/A": KGCM},
    "speed": {"m/s": 1.0, "cm/s": 1e-2},
    "time": {"s": 1.0, "ms": 1e-3},
    "dimensionless": {"1": 1.0},
}

SI_UNIT = {
    "force": "N",
    "length": "m",
    "angle": "rad",
    "pressure": "Pa",
    "resistance": "ohm",
    "voltage": "V",
    "current": "A",
    "torque": "N*m",
    "torque_constant": "N*m/A",
    "speed": "m/s",
    "time": "s",
    "dimensionless": "1",
}


def to_si(value, unit, dimension):
    """Convert ``value`` tagged with ``unit`` to SI for the given dimension.

    Raises
    ------
    KeyError
        If ``unit`` is not a known tag for ``dimension``.
    """
    table = UNITS[dimension]
    if unit not in table:
        raise KeyError(f"unit {unit!r} is not a {dimension} unit (expected one of {sorted(table)})")
    return value * table[unit]


def from_si(value, unit, dimension):
    return value / UNITS[dimension][unit]


def grams(mass_g):
    """Weight in newtons of a mass given in grams."""
    return mass_g * 1e-3 * STANDARD_GRAVITY


def kilograms(mass_kg):
    return mass_kg * STANDARD_GRAVITY


def kgcm(torque):
    """Torque in N*m from kg-cm."""
    return torque * KGCM


def degrees(angle_deg):
    return math.radians(angle_deg)
