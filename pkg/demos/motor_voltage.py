"""
Stall voltage against pipe angle
================================

At the moment the robot starts to move the motors are stalled, so the
current is set by the winding resistance alone. Each of the two rollers
supplies half of the drive force plus the lumped drivetrain loss, which turns
the force balance into a voltage that is affine in the sine of the pipe angle.
"""

import math

import numpy as np

from evertoroid import actuation, harness
from evertoroid.params import paper_robot
from evertoroid.units import kgcm

# %%
# Motor constants follow from the data-sheet ratings: 12 V, 1.6 A stall
# current and 25 kg-cm stall torque.
R, Ktau = actuation.motor_constants_from_ratings(12.0, 1.6, kgcm(25))
print(f"R = {R:.3f} ohm, Ktau = {Ktau:.4f} N*m/A")

# %%
# Measured at 0 degrees the robot stalls at 2.43 V. Inverting the stall
# relation gives the combined tip and loss force.
total = actuation.calibrate_lumped_losses(2.43, 0.017, R, 1.53)
print(f"Fe + Fi + Fl = {total:.2f} N")

# %%
# Sweep from straight down to straight up. The slope is the full robot
# weight times r R / (2 Ktau), about 0.0417 V per newton.
params = paper_robot(total_weight=4.4)
report = harness.angle_sweep(params, (-90, 90), 10)
print(report.summary())

th = np.radians(report.column("theta_deg"))
slope, intercept = np.polyfit(np.sin(th), report.column("V_volts"), 1)
print(f"fit: V = {intercept:.4f} + {slope:.4f} sin(theta)")

# %%
# The report carries a note on the published curve, whose narrower span only
# fits if the weights are entered in kilograms.
for note in report.notes:
    print(note)

# %%
# The same voltage is reached by composing the force balance with the motor
# model one step at a time.
op = actuation.operating_point(params, 24.4)
print(f"Fd = 24.4 N -> torque {op.torque_tau_per_roller:.4f} N*m, current {op.current_I:.4f} A,"
      f" voltage {op.voltage_V:.4f} V")
print(f"direct: {actuation.voltage_for_angle(params, math.pi / 2):.4f} V")
