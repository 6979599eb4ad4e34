"""
Anchoring by internal pressure
==============================

Inside a pipe the inflated membrane presses on the wall, and the friction
from that contact is what keeps the outer skin stationary. In a vertical
pipe the weight of the robot adds nothing to the normal force, so pressure
alone must carry the load.
"""

import numpy as np

from evertoroid import anchoring, harness
from evertoroid.params import paper_pipe, paper_robot

env = paper_pipe()
params = paper_robot()

# %%
# Five pressures between 0.70 and 3.45 kPa. The holding weight grows as
# mu * P * 2 pi R L, a straight line through the origin.
report = harness.pressure_sweep(env)
print(report.summary())
slope, intercept = np.polyfit(report.column("P_Pa"), report.column("W_total_N"), 1)
print(f"slope {slope:.6f} N/Pa, intercept {intercept:.2e} N")

# %%
# With the battery on board the robot weighs about 6.5 N, which needs under
# 0.3 kPa to hold.
w = params.weight(with_battery=True)
p_min = anchoring.min_pressure_for_no_slip(w, env)
print(f"weight with battery {w:.2f} N, minimum pressure {p_min:.1f} Pa")

# %%
# Slip margins at a few pressures; a zero margin counts as holding.
for p in (100.0, p_min, 700.0, 3450.0):
    a = anchoring.assess_slip(params, env.at_pressure(p), with_battery=True)
    print(f"P = {p:7.1f} Pa  available {a.available_friction:6.2f} N  margin {a.margin:+7.2f} N"
          f"  {'slips' if a.slips else 'holds'}")

# %%
# Tilting the pipe lets part of the weight press on the wall, so less
# pressure is needed at shallow angles.
for deg in (90, 60, 30, 0):
    e = env.at_angle(np.radians(deg)).at_pressure(200.0)
    a = anchoring.assess_slip(params, e, with_battery=True)
    print(f"{deg:2d} deg at 200 Pa: margin {a.margin:+.2f} N")
