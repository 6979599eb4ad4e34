"""
Squeezing through a maze
========================

A planar cut through the zigzag maze. The tip deflects along each wall it
meets without any steering, and at the end it squeezes through an opening
narrower than the inflated membrane but wider than the rigid device.

Pass ``--plot`` to save ``maze.png`` (needs matplotlib).
"""

import sys

import numpy as np

from evertoroid.sim import aperture_check, maze_scenario, run

# %%
# The 0.11 m opening sits between the device and membrane diameters.
print(aperture_check(0.11, 0.137, 0.104))

scenario = maze_scenario(aperture_width=0.11)
state, outcome = run(scenario)
print(f"outcome: {outcome} after {state.elapsed:.2f} s")
for e in state.event_log:
    print(f"  {e.t:7.2f} s  {e}")

# %%
# The width field shows where the body was squeezed.
w = state.local_width
print(f"narrowest body width {w.min():.4f} m over {np.sum(w < scenario.membrane_diameter)} points")

# %%
# Narrow the opening below the device diameter and the tip gets stuck.
narrow, narrow_outcome = run(maze_scenario(aperture_width=0.09))
print(f"0.09 m opening: {narrow_outcome}, tip at {np.round(narrow.tip, 3)}")

# %%
if "--plot" in sys.argv:
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    fig, ax = plt.subplots(figsize=(8, 3.5))
    for x0, y0, x1, y1 in scenario.walls:
        ax.plot([x0, x1], [y0, y1], "k-", lw=2)
    traj = np.array([(x, y) for _, x, y, *_ in state.trajectory])
    ax.plot(traj[:, 0], traj[:, 1], "C0-", lw=1, label="tip path")
    body = state.centerline
    ax.plot(body[:, 0], body[:, 1], "C3-", lw=4, alpha=0.6, label="final body")
    ax.set_aspect("equal")
    ax.legend(loc="lower right")
    fig.savefig("maze.png", dpi=120, bbox_inches="tight")
    print("wrote maze.png")
