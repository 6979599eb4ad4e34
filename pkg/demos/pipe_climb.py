"""
Climbing a vertical pipe
========================

Side view of the 30.5 cm test pipe. The tip speed is taken from the observed
climb of about five seconds, and the anchoring model says whether the skin
will hold at the chosen pressure.
"""

from evertoroid import anchoring
from evertoroid.params import paper_pipe, paper_robot
from evertoroid.sim import pipe_climb_time, pipe_scenario, run

scenario = pipe_scenario()
print(f"expected climb time {pipe_climb_time(0.305, scenario.tip_speed):.2f} s")

state, outcome = run(scenario)
print(f"simulated: {outcome} at {state.elapsed:.2f} s, contacts along the body: {len(state.contacts)}")

# %%
# The planar run only tracks where the tip goes. Whether it can stay put is
# a question for the anchoring model.
params = paper_robot()
for kpa in (0.2, 0.3, 3.45):
    a = anchoring.assess_slip(params, paper_pipe(pressure=kpa * 1e3), with_battery=True)
    print(f"{kpa:4.2f} kPa: {'holds' if not a.slips else 'slips'} (margin {a.margin:+.2f} N)")
