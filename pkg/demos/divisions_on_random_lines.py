"""
How much do divisions help?
===========================

Draw random SALBP-1 lines, derive TDALBP instances with both generators and
compare optimal station counts.  Division never costs a station; sometimes
it saves one.
"""

import random
import warnings

from tdalbp import GenConfig, generate, random_salbp, solve

warnings.simplefilter("ignore")  # tasks too short to split are reported, not needed here
rng = random.Random(1)

print("line    n   c  SALBP  M(1.5)  R")
for k in range(12):
    base = random_salbp(rng, rng.randint(10, 16), t_max=12, density=0.25)
    # a tight cycle time leaves less room for whole tasks
    c = max(max(base.times.values()), round(base.total_time / rng.uniform(2.5, 6)))
    base = base.with_cycle_time(c)
    plain = solve(base).m
    m15 = solve(generate(base, GenConfig("M", 1.5)))
    r = solve(generate(base, GenConfig("R", seed=k)))
    print(f"{k:4d} {base.n:4d} {base.cycle_time:3d} {plain:6d} {m15.m:7d} {r.m:3d}")

# most lines gain nothing: a split only pays when a whole task leaves idle
# time that its parts could fill, net of the one unit each part costs
