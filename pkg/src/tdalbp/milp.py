"""Binary program over station-indexed option variables and its LP-file form.

Variable ``x_j_q_k`` is 1 when option ``q`` of task ``j`` sits at station
``k``; it exists only for ``k`` in the node's station interval.  Row families:

    C2  each indivisible task at exactly one station
    C3  activated option times of a divisible task sum to the task time
    C3x each option of a divisible task used at most once
    C4  at most one option of a divisible task per station
    C5  cycle time per station, penalties included
    C6  precedence, both ends indivisible
    C7  precedence, divisible tail
    C8  precedence, divisible head
    C9  precedence, both ends divisible

Precedence rows with a divisible head use big-M = m' to switch off when the
head option is not activated.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .expansion import ExpandedGraph
from .instance import Instance, InstanceError, Solution, validate_solution


class MilpError(InstanceError):
    pass


Var = tuple[int, int, int]


def var_name(v: Var) -> str:
    return f"x_{v[0]}_{v[1]}_{v[2]}"


_NAME = re.compile(r"^x_(\d+)_(\d+)_(\d+)$")


@dataclass(frozen=True)
class Row:
    name: str
    family: str
    coeffs: tuple[tuple[Var, int], ...]
    sense: str  # "<=" | "="
    rhs: int

    def value(self, x: Mapping[Var, int]) -> int:
        return sum(a * x.get(v, 0) for v, a in self.coeffs)

    def satisfied(self, x: Mapping[Var, int]) -> bool:
        lhs = self.value(x)
        return lhs == self.rhs if self.sense == "=" else lhs <= self.rhs


@dataclass
class MilpModel:
    instance: Instance
    m_prime: int
    variables: list[Var]
    objective: list[tuple[Var, int]]
    rows: list[Row] = field(default_factory=list)

    def families(self) -> dict[str, int]:
        out: dict[str, int] = {}
        for r in self.rows:
            out[r.family] = out.get(r.family, 0) + 1
        return out

    def objective_value(self, x: Mapping[Var, int]) -> int:
        return sum(a * x.get(v, 0) for v, a in self.objective)


def _row(name: str, family: str, terms: Iterable[tuple[Var, int]], sense: str, rhs: int) -> Row:
    acc: dict[Var, int] = {}
    for v, a in terms:
        acc[v] = acc.get(v, 0) + a
    return Row(name, family, tuple((v, a) for v, a in sorted(acc.items()) if a), sense, rhs)


def build_model(g: ExpandedGraph) -> MilpModel:
    inst = g.instance
    mp = g.m_prime
    si: dict[tuple[int, int], list[int]] = {}
    for nd in g.nodes:
        lo, hi = g.si(nd.key)
        si[nd.key] = list(range(max(lo, 1), min(hi, mp) + 1))
    for j in range(1, inst.n + 1):
        if not inst.division(j) and not si[(j, 1)]:
            raise MilpError(f"task {inst.label(j)} has an empty station interval (m'={mp})")
    variables = [(j, q, k) for (j, q), ks in si.items() for k in ks]
    term = inst.terminal
    objective = [((term, 1, k), k) for k in si[(term, 1)]]
    rows: list[Row] = []

    def xs(j, q):
        return [(j, q, k) for k in si[(j, q)]]

    for j in range(1, inst.n + 1):
        if not inst.division(j):
            rows.append(_row(f"assign_{j}", "C2", ((v, 1) for v in xs(j, 1)), "=", 1))
    for j in inst.divisible_ids:
        opts = range(1, inst.r(j) + 1)
        rows.append(_row(f"div_{j}", "C3",
                         ((v, inst.option_time(j, q)) for q in opts for v in xs(j, q)),
                         "=", inst.time(j)))
        for q in opts:
            if si[(j, q)]:
                rows.append(_row(f"once_{j}_{q}", "C3x", ((v, 1) for v in xs(j, q)), "<=", 1))
        for k in range(1, mp + 1):
            terms = [((j, q, k), 1) for q in opts if k in si[(j, q)]]
            if len(terms) > 1:
                rows.append(_row(f"sep_{j}_{k}", "C4", terms, "<=", 1))
    for k in range(1, mp + 1):
        terms = [((nd.parent, nd.q, k), nd.final_time) for nd in g.nodes if k in si[nd.key]]
        if terms:
            rows.append(_row(f"cycle_{k}", "C5", terms, "<=", inst.cycle_time))
    for i, j in inst.arcs:
        di, dj = bool(inst.division(i)), bool(inst.division(j))
        family = {(False, False): "C6", (True, False): "C7",
                  (False, True): "C8", (True, True): "C9"}[(di, dj)]
        for p in range(1, inst.r(i) + 1):
            for q in range(1, inst.r(j) + 1):
                terms = [(v, v[2]) for v in xs(i, p)] + [(v, -v[2]) for v in xs(j, q)]
                rhs = 0
                if dj:
                    terms += [(v, mp) for v in xs(j, q)]
                    rhs = mp
                rows.append(_row(f"prec_{i}_{p}_{j}_{q}", family, terms, "<=", rhs))
    return MilpModel(inst, mp, variables, objective, rows)


# -- LP file ---------------------------------------------------------------


def _terms(terms: Iterable[tuple[Var, int]], width: int = 78) -> list[str]:
    lines, cur = [], ""
    for n, (v, a) in enumerate(terms):
        sign = "-" if a < 0 else ("+" if n else "")
        tok = f"{sign} {abs(a)} {var_name(v)}".strip()
        if cur and len(cur) + 1 + len(tok) > width:
            lines.append(cur)
            cur = "   " + tok
        else:
            cur = f"{cur} {tok}" if cur else tok
    lines.append(cur)
    return lines


def write_lp(model: MilpModel) -> str:
    """Serialize in LP file format; output depends only on the model."""
    out = [f"\\ TDALBP model {model.instance.name or 'instance'} m'={model.m_prime}", "Minimize"]
    obj = _terms(model.objective) if model.objective else ["0 " + var_name(model.variables[0])]
    obj[0] = " obj: " + obj[0]
    out.extend(obj)
    out.append("Subject To")
    for r in model.rows:
        body = _terms(r.coeffs)
        body[0] = f" {r.name}: " + body[0]
        body[-1] += f" {r.sense} {r.rhs}"
        out.extend(body)
    out.append("Bounds")
    out.extend(f" 0 <= {var_name(v)} <= 1" for v in model.variables)
    out.append("Binaries")
    names = [var_name(v) for v in model.variables]
    for k in range(0, len(names), 6):
        out.append(" " + " ".join(names[k:k + 6]))
    out.append("End")
    return "\n".join(out) + "\n"


# -- solutions -------------------------------------------------------------


def encode(model: MilpModel, sol: Solution) -> dict[Var, int]:
    """0/1 values for a solution; nodes outside their interval map to missing vars."""
    return {(j, q, k): 1 for k, load in enumerate(sol.stations, start=1) for j, q in load}


def violated_rows(model: MilpModel, x: Mapping[Var, int]) -> list[str]:
    declared = set(model.variables)
    bad = [f"undeclared:{var_name(v)}" for v, val in sorted(x.items()) if val and v not in declared]
    bad.extend(r.name for r in model.rows if not r.satisfied(x))
    return bad


def read_values(text: str) -> tuple[dict[str, float], float | None]:
    """``name value`` pairs plus an objective value if the text states one."""
    values: dict[str, float] = {}
    objective = None
    for line in text.splitlines():
        parts = line.replace("=", " ").split()
        if len(parts) < 2:
            continue
        if parts[0].lower() in ("objective", "obj", "objective_value") or line.lower().startswith("objective value"):
            try:
                objective = float(parts[-1])
            except ValueError:
                pass
            continue
        if _NAME.match(parts[0]):
            try:
                values[parts[0]] = float(parts[1])
            except ValueError as exc:
                raise MilpError(f"bad value in line: {line!r}") from exc
    return values, objective


def parse_lp_solution(model: MilpModel, text: str, tol: float = 1e-6) -> Solution:
    """Round, rebuild compacted station loads, validate and check the objective."""
    values, objective = read_values(text)
    declared = set(model.variables)
    x: dict[Var, int] = {}
    for name, val in values.items():
        v = tuple(int(s) for s in _NAME.match(name).groups())
        if v not in declared:
            raise MilpError(f"unknown variable {name}")
        if abs(val) <= tol:
            continue
        if abs(val - 1) <= tol:
            x[v] = 1
            continue
        raise MilpError(f"non-binary value {val} for {name}")
    by_station: dict[int, list[tuple[int, int]]] = {}
    for j, q, k in sorted(x):
        by_station.setdefault(k, []).append((j, q))
    stations = [by_station[k] for k in sorted(by_station)]
    sol = Solution.from_stations(model.instance, stations)
    report = validate_solution(model.instance, sol)
    if not report.ok:
        raise MilpError(f"solution fails validation:\n{report}")
    if objective is not None and abs(objective - model.objective_value(x)) > 1e-6:
        raise MilpError(f"stated objective {objective} != computed {model.objective_value(x)}")
    return sol


def solve_with_highs(model: MilpModel, time_limit: float | None = None) -> tuple[float, str]:
    """Run HiGHS on the written LP file; returns (objective, ``name value`` text).

    Needs the optional ``highspy`` package.
    """
    import os
    import tempfile

    import highspy

    h = highspy.Highs()
    h.setOptionValue("output_flag", False)
    if time_limit is not None:
        h.setOptionValue("time_limit", float(time_limit))
    with tempfile.TemporaryDirectory() as tmp:
        path = os.path.join(tmp, "model.lp")
        with open(path, "w") as fh:
            fh.write(write_lp(model))
        h.readModel(path)
    h.run()
    if h.getModelStatus() != highspy.HighsModelStatus.kOptimal:
        raise MilpError(f"external solver status: {h.modelStatusToString(h.getModelStatus())}")
    names = h.getLp().col_names_
    vals = h.getSolution().col_value
    obj = h.getInfo().objective_function_value
    text = "\n".join(f"{n} {v:.9g}" for n, v in zip(names, vals))
    return obj, text
