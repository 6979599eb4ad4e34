"""
Force balance of a climbing toroid
==================================

The propulsion device sits inside the toroidal membrane and pulls the inner
tail through its rollers. Along the pipe axis three unknowns balance the tip
forces and the weights: the roller drive force Fd, the grounding force Fg the
device pushes against the inverting end, and the pipe friction Fp that holds
the outer skin still.
"""

import math
from dataclasses import replace

import numpy as np

from evertoroid.params import paper_robot
from evertoroid.statics import balance_residuals, oracle_solve, solve_climb_forces

params = paper_robot()
print(f"membrane weight {params.membrane.weight_Wm:.3f} N, device weight {params.device.weight_Wd:.3f} N")

# %%
# Lying flat the weights drop out and the rollers only work against the
# eversion and inversion forces at the two tips.
flat = solve_climb_forces(params, 0.0)
print("horizontal:", flat)

# %%
# Straight up, every newton of robot weight adds a newton of drive force and
# has to be carried by friction against the pipe wall.
for deg in (0, 30, 60, 90):
    sol = solve_climb_forces(params, math.radians(deg))
    print(f"{deg:3d} deg  Fd = {sol.device_force_Fd:7.3f} N  Fg = {sol.grounding_force_Fg:7.3f} N"
          f"  Fp = {sol.pipe_friction_Fp:6.3f} N")

# %%
# The closed form agrees with a plain linear solve of the three balance
# equations, and leaves residuals at rounding level.
theta = np.radians(-40.0)
a, b = solve_climb_forces(params, theta), oracle_solve(params, theta)
print("closed form:", np.round(a.as_tuple(), 12))
print("linear solve:", np.round(b.as_tuple(), 12))
print("residuals:", balance_residuals(params, theta, a))

# %%
# Heading downhill lowers Fg. A light enough membrane tip would let it
# change sign, which means the device slides to the everting end.
light = paper_robot()
light = replace(light, membrane=replace(light.membrane, eversion_force_Fe=0.5, inversion_force_Fi=0.5))
down = solve_climb_forces(light, -math.pi / 2)
print(f"light tips, straight down: Fg = {down.grounding_force_Fg:.3f} N,"
      f" device at everting end: {down.device_at_everting_end}")
