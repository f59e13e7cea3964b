"""
The 23-task worked example
==========================

Balance the bundled example line at cycle time 10, first as a plain SALBP-1
instance and then with its six divisible tasks.  Splitting saves a station.
"""

from tdalbp import SolverConfig, bound_report, example2, solve

inst = example2()
plain = inst.without_divisions()

# lower bounds before any search
print("bounds (no divisions):", bound_report(plain).line())
print("bounds (divisions):   ", bound_report(inst).line())

salbp = solve(plain)
print(f"\nSALBP-1: m={salbp.m} optimal={salbp.optimal} nodes={salbp.nodes_explored}")
print(salbp.best.format(plain))

# among all 11-station layouts, ask for the one with least added time
td = solve(inst, SolverConfig(min_penalty_postpass=True))
print(f"\nTDALBP:  m={td.m} optimal={td.optimal} F={td.best.penalty_total} "
      f"LE={td.best.le:.2f} LT={td.best.lt}")
print(td.best.format(inst))
