"""
Checking an optimum with an LP solver
=====================================

Export the binary program for the worked example, solve it with HiGHS (the
``highs`` extra) and read the solution back through the validator.
"""

from tdalbp import build_model, example2, expand, parse_lp_solution, solve, write_lp

inst = example2()
res = solve(inst)
model = build_model(expand(inst, res.m + 1))
text = write_lp(model)
print(f"{len(model.variables)} variables, {len(model.rows)} rows, {len(text)} bytes of LP text")

try:
    from tdalbp.milp import solve_with_highs
    obj, values = solve_with_highs(model, time_limit=120)
except ImportError:
    print("highspy is not installed; pip install 'tdalbp[highs]'")
else:
    sol = parse_lp_solution(model, values)
    print(f"HiGHS objective {obj:g}, search optimum {res.m}")
    print(sol.format(inst))
