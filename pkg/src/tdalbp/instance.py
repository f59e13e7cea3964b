"""Instances, solutions and their text formats.

An :class:`Instance` is an acyclic precedence graph over tasks ``1..n`` with
integer processing times, a cycle time ``c`` and, for the potentially
divisible tasks, the list of subtask options ``(sub_time, penalty)``.
Option ``q = 1`` is always the undivided task itself with zero penalty;
options ``q = 2..r_j`` come from the :class:`DivisionSpec`.

Instances are normalized on construction: ids are renumbered topologically
(ties broken by original id) and a zero-time terminal is appended when the
graph does not already end in a single indivisible sink.
"""

from __future__ import annotations

import heapq
import re
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping, Sequence


class InstanceError(ValueError):
    """Raised for structurally invalid instances."""


class ParseError(InstanceError):
    def __init__(self, message: str, lineno: int | None = None):
        self.lineno = lineno
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)


@dataclass(frozen=True)
class Task:
    id: int
    time: int
    divisible: bool = False


@dataclass(frozen=True)
class DivisionSpec:
    """Subtask options ``q = 2..r_j`` of one task, nonincreasing in time."""

    task_id: int
    options: tuple[tuple[int, int], ...]

    @property
    def r(self) -> int:
        return len(self.options) + 1


# node identity used everywhere: (task id, option index q)
Node = tuple[int, int]


@dataclass(frozen=True, eq=False)
class Instance:
    tasks: tuple[Task, ...]
    arcs: tuple[tuple[int, int], ...]
    cycle_time: int
    divisions: tuple[DivisionSpec, ...] = ()
    name: str = ""
    # original id of every task (0 marks an appended dummy terminal)
    labels: tuple[int, ...] = field(default=(), compare=False)

    @classmethod
    def build(
        cls,
        times: Mapping[int, int] | Sequence[int],
        arcs: Iterable[tuple[int, int]],
        cycle_time: int,
        divisions: Mapping[int, Sequence[tuple[int, int]]] | None = None,
        name: str = "",
    ) -> "Instance":
        """Normalize and validate raw data.

        ``times`` maps original ids to processing times (a sequence is read as
        ids ``1..len``).  ``divisions`` maps original ids to their subtask
        options ``[(sub_time, penalty), ...]``.
        """
        if not isinstance(times, Mapping):
            times = {i + 1: t for i, t in enumerate(times)}
        times = dict(times)
        divisions = dict(divisions or {})
        if cycle_time is None or int(cycle_time) < 1:
            raise InstanceError(f"cycle time must be a positive integer, got {cycle_time!r}")
        cycle_time = int(cycle_time)
        if not times:
            raise InstanceError("instance has no tasks")
        for j, t in times.items():
            if int(j) != j or j < 1:
                raise InstanceError(f"task ids must be positive integers, got {j!r}")
            if int(t) != t or t < 1:
                raise InstanceError(f"task {j}: processing time must be an integer >= 1, got {t}")

        arc_list: list[tuple[int, int]] = []
        seen: set[tuple[int, int]] = set()
        for i, j in arcs:
            if i not in times or j not in times:
                raise InstanceError(f"arc ({i},{j}) references an unknown task")
            if i == j:
                raise InstanceError(f"self-loop on task {i}")
            if (i, j) in seen:
                raise InstanceError(f"duplicate arc ({i},{j})")
            seen.add((i, j))
            arc_list.append((i, j))

        for j in divisions:
            if j not in times:
                raise InstanceError(f"division given for unknown task {j}")

        order = _topological_order(sorted(times), arc_list)
        new_id = {old: k + 1 for k, old in enumerate(order)}
        labels = list(order)
        new_times = [times[old] for old in order]
        new_arcs = sorted((new_id[i], new_id[j]) for i, j in arc_list)
        new_div = {new_id[old]: opts for old, opts in divisions.items() if opts}

        has_succ = {i for i, _ in new_arcs}
        sinks = [j for j in range(1, len(order) + 1) if j not in has_succ]
        if len(sinks) != 1 or sinks[0] in new_div:
            dummy = len(order) + 1
            new_times.append(0)
            labels.append(0)
            new_arcs.extend((s, dummy) for s in sinks)

        tasks = tuple(
            Task(j, t, j in new_div) for j, t in enumerate(new_times, start=1)
        )
        specs = tuple(
            DivisionSpec(j, tuple(sorted(((int(a), int(b)) for a, b in new_div[j]),
                                         key=lambda o: -o[0])))
            for j in sorted(new_div)
        )
        inst = cls(tasks, tuple(new_arcs), cycle_time, specs, name, tuple(labels))
        inst._validate()
        return inst

    def _validate(self) -> None:
        c = self.cycle_time
        for spec in self.divisions:
            t = self.time(spec.task_id)
            for sub, pen in spec.options:
                if not 1 <= sub <= t - 2:
                    raise InstanceError(
                        f"task {self.label(spec.task_id)}: subtask time {sub} outside [1, {t - 2}]"
                    )
                if pen < 1:
                    raise InstanceError(
                        f"task {self.label(spec.task_id)}: subtask penalty must be >= 1, got {pen}"
                    )
        for task in self.tasks:
            if task.time <= c:
                continue
            if not task.divisible:
                raise InstanceError(
                    f"indivisible task {self.label(task.id)} has time {task.time} > cycle time {c}"
                )
            subs = [q for q in range(2, self.r(task.id) + 1) if self.final_time(task.id, q) <= c]
            acts = activation_subsets([self.option_time(task.id, q) for q in subs], task.time)
            if not acts:
                raise InstanceError(
                    f"task {self.label(task.id)} has time {task.time} > cycle time {c} "
                    "and no division with every part fitting the cycle time"
                )

    # -- basic accessors -------------------------------------------------

    @property
    def n(self) -> int:
        return len(self.tasks)

    @property
    def terminal(self) -> int:
        return self.n

    def time(self, j: int) -> int:
        return self.tasks[j - 1].time

    @cached_property
    def times(self) -> dict[int, int]:
        return {t.id: t.time for t in self.tasks}

    @cached_property
    def total_time(self) -> int:
        return sum(t.time for t in self.tasks)

    @cached_property
    def _division_map(self) -> dict[int, DivisionSpec]:
        return {d.task_id: d for d in self.divisions}

    def division(self, j: int) -> DivisionSpec | None:
        return self._division_map.get(j)

    @property
    def divisible_ids(self) -> list[int]:
        return [d.task_id for d in self.divisions]

    def r(self, j: int) -> int:
        d = self._division_map.get(j)
        return 1 if d is None else d.r

    def option_time(self, j: int, q: int) -> int:
        if q == 1:
            return self.time(j)
        return self._division_map[j].options[q - 2][0]

    def option_penalty(self, j: int, q: int) -> int:
        if q == 1:
            return 0
        return self._division_map[j].options[q - 2][1]

    def final_time(self, j: int, q: int) -> int:
        return self.option_time(j, q) + self.option_penalty(j, q)

    def label(self, j: int) -> str:
        if self.labels and self.labels[j - 1] == 0:
            return "dummy"
        return str(self.labels[j - 1]) if self.labels else str(j)

    @cached_property
    def has_dummy_terminal(self) -> bool:
        return bool(self.labels) and self.labels[-1] == 0

    @cached_property
    def predecessors(self) -> dict[int, tuple[int, ...]]:
        preds: dict[int, list[int]] = {j: [] for j in range(1, self.n + 1)}
        for i, j in self.arcs:
            preds[j].append(i)
        return {j: tuple(sorted(p)) for j, p in preds.items()}

    @cached_property
    def successors(self) -> dict[int, tuple[int, ...]]:
        succs: dict[int, list[int]] = {j: [] for j in range(1, self.n + 1)}
        for i, j in self.arcs:
            succs[i].append(j)
        return {j: tuple(sorted(s)) for j, s in succs.items()}

    def without_divisions(self) -> "Instance":
        """The SALBP-1 view of this instance (same graph, no divisions)."""
        if not self.divisions:
            return self
        return Instance(
            tuple(Task(t.id, t.time, False) for t in self.tasks),
            self.arcs, self.cycle_time, (), self.name, self.labels,
        )

    def with_cycle_time(self, c: int) -> "Instance":
        inst = Instance(self.tasks, self.arcs, int(c), self.divisions, self.name, self.labels)
        inst._validate()
        return inst

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Instance):
            return NotImplemented
        return (self.tasks, self.arcs, self.cycle_time, self.divisions) == (
            other.tasks, other.arcs, other.cycle_time, other.divisions)

    def __hash__(self) -> int:
        return hash((self.tasks, self.arcs, self.cycle_time, self.divisions))


def _topological_order(ids: list[int], arcs: list[tuple[int, int]]) -> list[int]:
    indeg = {j: 0 for j in ids}
    succ: dict[int, list[int]] = {j: [] for j in ids}
    for i, j in arcs:
        succ[i].append(j)
        indeg[j] += 1
    ready = [j for j in ids if indeg[j] == 0]
    heapq.heapify(ready)
    order = []
    while ready:
        j = heapq.heappop(ready)
        order.append(j)
        for k in succ[j]:
            indeg[k] -= 1
            if indeg[k] == 0:
                heapq.heappush(ready, k)
    if len(order) != len(ids):
        stuck = sorted(j for j in ids if indeg[j] > 0)
        raise InstanceError(f"precedence graph has a cycle through tasks {stuck}")
    return order


def activation_subsets(sub_times: Sequence[int], total: int) -> list[tuple[int, ...]]:
    """Index subsets of ``sub_times`` (positions 0..) summing exactly to ``total``.

    Backtracking over positions in order; subsets are returned in
    lexicographic order of their index tuples.
    """
    out: list[tuple[int, ...]] = []
    suffix = [0] * (len(sub_times) + 1)
    for k in range(len(sub_times) - 1, -1, -1):
        suffix[k] = suffix[k + 1] + sub_times[k]

    def rec(k: int, rest: int, chosen: list[int]) -> None:
        if rest == 0:
            if chosen:
                out.append(tuple(chosen))
            return
        if k == len(sub_times) or suffix[k] < rest:
            return
        if sub_times[k] <= rest:
            chosen.append(k)
            rec(k + 1, rest - sub_times[k], chosen)
            chosen.pop()
        rec(k + 1, rest, chosen)

    rec(0, total, [])
    return out


def transitive_sets(inst: Instance) -> dict[int, tuple[frozenset[int], frozenset[int]]]:
    """Map every task to ``(all predecessors, all successors)``."""
    preds: dict[int, frozenset[int]] = {}
    for j in range(1, inst.n + 1):
        acc: set[int] = set()
        for i in inst.predecessors[j]:
            acc.add(i)
            acc |= preds[i]
        preds[j] = frozenset(acc)
    succs: dict[int, frozenset[int]] = {}
    for j in range(inst.n, 0, -1):
        acc = set()
        for k in inst.successors[j]:
            acc.add(k)
            acc |= succs[k]
        succs[j] = frozenset(acc)
    return {j: (preds[j], succs[j]) for j in range(1, inst.n + 1)}


# -- solutions -------------------------------------------------------------


@dataclass(frozen=True)
class Solution:
    """Station loads as ``(task_id, q)`` pairs plus derived figures."""

    stations: tuple[tuple[Node, ...], ...]
    penalty_total: int
    le: float
    lt: int

    @property
    def m(self) -> int:
        return len(self.stations)

    @classmethod
    def from_stations(cls, inst: Instance, stations: Iterable[Iterable[Node]]) -> "Solution":
        loads = tuple(tuple(sorted((int(j), int(q)) for j, q in s)) for s in stations)
        penalty = sum(inst.option_penalty(j, q) for s in loads for j, q in s
                      if 1 <= j <= inst.n and 1 <= q <= inst.r(j))
        sol = cls(loads, penalty, 0.0, 0)
        if loads and all(1 <= j <= inst.n and 1 <= q <= inst.r(j) for s in loads for j, q in s):
            le, lt = _metrics(inst, sol)
            sol = cls(loads, penalty, le, lt)
        return sol

    def format(self, inst: Instance | None = None) -> str:
        """Station loads in ``j^q`` notation, one station per line."""
        lines = []
        for k, load in enumerate(self.stations, start=1):
            items = " ".join(node_label(j, q, inst) for j, q in load)
            lines.append(f"S{k}: {items}")
        return "\n".join(lines)


def node_label(j: int, q: int, inst: Instance | None = None) -> str:
    name = inst.label(j) if inst is not None else str(j)
    return name if q == 1 else f"{name}^{q}"


def station_time(inst: Instance, load: Iterable[Node]) -> int:
    return sum(inst.final_time(j, q) for j, q in load)


@dataclass(frozen=True)
class Violation:
    clause: str  # cycle | empty | unknown | assignment | division | precedence
    message: str
    task: int | None = None
    station: int | None = None


@dataclass
class ValidationReport:
    violations: list[Violation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def clauses(self) -> set[str]:
        return {v.clause for v in self.violations}

    def __str__(self) -> str:
        if self.ok:
            return "OK"
        return "\n".join(f"[{v.clause}] {v.message}" for v in self.violations)


def validate_solution(inst: Instance, sol: Solution) -> ValidationReport:
    """Check every feasibility condition and collect all violations."""
    report = ValidationReport()
    bad = report.violations
    c = inst.cycle_time
    if not sol.stations:
        bad.append(Violation("empty", "solution has no stations"))
        return report

    where: dict[int, dict[int, list[int]]] = {}
    for k, load in enumerate(sol.stations, start=1):
        if not load:
            bad.append(Violation("empty", f"station {k} is empty", station=k))
            continue
        total = 0
        for j, q in load:
            if not 1 <= j <= inst.n or not 1 <= q <= inst.r(j):
                bad.append(Violation("unknown", f"station {k}: unknown node ({j},{q})", j, k))
                continue
            total += inst.final_time(j, q)
            where.setdefault(j, {}).setdefault(q, []).append(k)
        if total > c:
            bad.append(Violation("cycle", f"station {k} time {total} exceeds cycle time {c}",
                                 station=k))

    for j in range(1, inst.n + 1):
        opts = where.get(j, {})
        lab = inst.label(j)
        if not opts:
            bad.append(Violation("assignment", f"task {lab} is not assigned", j))
            continue
        for q, ks in opts.items():
            if len(ks) > 1:
                bad.append(Violation("assignment",
                                     f"node {node_label(j, q, inst)} assigned {len(ks)} times", j, ks[1]))
        if 1 in opts:
            if len(opts) > 1:
                bad.append(Violation("division",
                                     f"task {lab} is assigned undivided and divided at once", j))
            continue
        given = sum(inst.option_time(j, q) for q in opts)
        if given != inst.time(j):
            bad.append(Violation(
                "division",
                f"task {lab}: activated subtask times sum to {given}, expected {inst.time(j)}", j))
        stations = [ks[0] for ks in opts.values()]
        if len(set(stations)) != len(stations):
            bad.append(Violation("division",
                                 f"task {lab}: two subtasks share a station", j))

    for i, j in inst.arcs:
        if i not in where or j not in where:
            continue
        last_i = max(k for ks in where[i].values() for k in ks)
        first_j = min(k for ks in where[j].values() for k in ks)
        if last_i > first_j:
            bad.append(Violation(
                "precedence",
                f"arc ({inst.label(i)},{inst.label(j)}): {inst.label(i)} at station {last_i} "
                f"after {inst.label(j)} at station {first_j}", j, first_j))
    return report


def _metrics(inst: Instance, sol: Solution) -> tuple[float, int]:
    c = inst.cycle_time
    m = len(sol.stations)
    loads = [station_time(inst, s) for s in sol.stations]
    return 100.0 * sum(loads) / (m * c), c * (m - 1) + loads[-1]


def metrics(inst: Instance, sol: Solution) -> tuple[float, int]:
    """Line efficiency (percent, penalties included) and line time."""
    report = validate_solution(inst, sol)
    if not report.ok:
        raise InstanceError(f"invalid solution:\n{report}")
    return _metrics(inst, sol)


# -- text formats ----------------------------------------------------------

_ARC = re.compile(r"^\s*(-?\d+)\s*,\s*(-?\d+)\s*$")
_DIV = re.compile(r"^\s*(\d+)\s*:\s*(.*)$")
_OPT = re.compile(r"^\s*(\d+)\s*/\s*(\d+)\s*$")


def parse_instance(
    text: str,
    format: str = "alb",
    cycle_time: int | None = None,
    name: str = "",
) -> Instance:
    """Parse ``alb`` / ``tdalb`` text (see ``docs/formats.md``).

    The ``<section>`` layout of the public benchmark data is
    also accepted.  An explicit ``cycle_time`` overrides any ``CYCLE`` line.
    """
    if format not in ("alb", "tdalb"):
        raise ValueError(f"unknown instance format {format!r}")
    if "<number of tasks>" in text:
        return _parse_sectioned(text, cycle_time, name)

    lines = [(k, _strip_comment(line)) for k, line in enumerate(text.splitlines(), start=1)]
    lines = [(k, s) for k, s in lines if s]
    pos = 0
    header_c = None
    if pos < len(lines) and lines[pos][1].upper().startswith("CYCLE"):
        k, s = lines[pos]
        parts = s.split()
        if len(parts) != 2 or not parts[1].isdigit():
            raise ParseError("expected 'CYCLE <c>'", k)
        header_c = int(parts[1])
        pos += 1
    if pos >= len(lines):
        raise ParseError("missing task count")
    k, s = lines[pos]
    if not s.isdigit():
        raise ParseError(f"expected task count, got {s!r}", k)
    n = int(s)
    pos += 1
    times: dict[int, int] = {}
    for idx in range(1, n + 1):
        if pos >= len(lines):
            raise ParseError(f"expected {n} task lines, got {idx - 1}")
        k, s = lines[pos]
        parts = s.split()
        try:
            nums = [int(p) for p in parts]
        except ValueError:
            raise ParseError(f"malformed task line {s!r}", k) from None
        if len(nums) == 1:
            j, t = idx, nums[0]
        elif len(nums) == 2:
            j, t = nums
        else:
            raise ParseError(f"malformed task line {s!r}", k)
        if j in times:
            raise ParseError(f"task {j} listed twice", k)
        if t < 1:
            raise ParseError(f"task {j}: time must be >= 1, got {t}", k)
        times[j] = t
        pos += 1

    arcs: list[tuple[int, int]] = []
    seen = set()
    terminated = False
    while pos < len(lines):
        k, s = lines[pos]
        if s.upper() == "DIVISIONS":
            break
        m = _ARC.match(s)
        if not m:
            raise ParseError(f"expected arc 'i,j', got {s!r}", k)
        i, j = int(m.group(1)), int(m.group(2))
        pos += 1
        if (i, j) == (-1, -1):
            terminated = True
            break
        if i not in times or j not in times:
            raise ParseError(f"arc ({i},{j}) references an unknown task", k)
        if (i, j) in seen:
            raise ParseError(f"duplicate arc ({i},{j})", k)
        seen.add((i, j))
        arcs.append((i, j))
    if not terminated and format == "alb" and pos < len(lines):
        raise ParseError("arc list not terminated by -1,-1", lines[pos][0])

    divisions: dict[int, list[tuple[int, int]]] = {}
    if pos < len(lines):
        k, s = lines[pos]
        if s.upper() != "DIVISIONS":
            raise ParseError(f"unexpected content {s!r}", k)
        if format == "alb":
            raise ParseError("DIVISIONS section in an alb file (use the tdalb format)", k)
        pos += 1
        while pos < len(lines):
            k, s = lines[pos]
            m = _DIV.match(s)
            if not m:
                raise ParseError(f"expected 'j : t2/f2 ; t3/f3 ...', got {s!r}", k)
            j = int(m.group(1))
            if j not in times:
                raise ParseError(f"division for unknown task {j}", k)
            if j in divisions:
                raise ParseError(f"task {j} has two division lines", k)
            opts = []
            for chunk in m.group(2).split(";"):
                om = _OPT.match(chunk)
                if not om:
                    raise ParseError(f"malformed option {chunk.strip()!r}", k)
                sub, pen = int(om.group(1)), int(om.group(2))
                if not 1 <= sub <= times[j] - 2:
                    raise ParseError(f"task {j}: subtask time {sub} outside [1, {times[j] - 2}]", k)
                if pen < 1:
                    raise ParseError(f"task {j}: penalty must be >= 1", k)
                opts.append((sub, pen))
            subs = [o[0] for o in opts]
            if subs != sorted(subs, reverse=True):
                raise ParseError(f"task {j}: options must be nonincreasing in time", k)
            divisions[j] = opts
            pos += 1

    c = cycle_time if cycle_time is not None else header_c
    if c is None:
        raise InstanceError("no cycle time given (pass one or add a 'CYCLE c' line)")
    return Instance.build(times, arcs, c, divisions, name)


def _strip_comment(line: str) -> str:
    return line.split("#", 1)[0].strip()


def _parse_sectioned(text: str, cycle_time: int | None, name: str) -> Instance:
    section = None
    n = None
    c = None
    times: dict[int, int] = {}
    arcs: list[tuple[int, int]] = []
    for k, raw in enumerate(text.splitlines(), start=1):
        s = raw.strip()
        if not s:
            continue
        if s.startswith("<"):
            section = s.strip("<>").strip().lower()
            continue
        if section == "number of tasks":
            n = int(s)
        elif section == "cycle time":
            c = int(s)
        elif section == "task times":
            parts = s.split()
            if len(parts) != 2:
                raise ParseError(f"malformed task line {s!r}", k)
            times[int(parts[0])] = int(parts[1])
        elif section == "precedence relations":
            m = _ARC.match(s)
            if not m:
                raise ParseError(f"expected arc 'i,j', got {s!r}", k)
            arcs.append((int(m.group(1)), int(m.group(2))))
    if n is not None and len(times) != n:
        raise ParseError(f"expected {n} task times, got {len(times)}")
    if cycle_time is not None:
        c = cycle_time
    if c is None:
        raise InstanceError("no cycle time given")
    return Instance.build(times, arcs, c, None, name)


def format_instance(inst: Instance, format: str = "tdalb", cycle_header: bool = True) -> str:
    """Serialize a normalized instance; ``parse_instance`` reads it back unchanged.

    An appended dummy terminal is not written; it is re-created on parsing.
    """
    if format == "alb" and inst.divisions:
        raise ValueError("instance has divisions; use the tdalb format")
    n = inst.n - 1 if inst.has_dummy_terminal else inst.n
    out = []
    if cycle_header:
        out.append(f"CYCLE {inst.cycle_time}")
    out.append(str(n))
    out.extend(f"{j} {inst.time(j)}" for j in range(1, n + 1))
    out.extend(f"{i},{j}" for i, j in inst.arcs if j <= n)
    out.append("-1,-1")
    if format == "tdalb" and inst.divisions:
        out.append("DIVISIONS")
        for d in inst.divisions:
            opts = " ; ".join(f"{t}/{f}" for t, f in d.options)
            out.append(f"{d.task_id} : {opts}")
    return "\n".join(out) + "\n"


def read_instance(path, cycle_time: int | None = None, format: str | None = None) -> Instance:
    from pathlib import Path

    path = Path(path)
    if format is None:
        format = "tdalb" if path.suffix.lower() == ".tdalb" else "alb"
    text = path.read_text()
    if format == "alb" and "DIVISIONS" in text.upper():
        format = "tdalb"
    return parse_instance(text, format, cycle_time, name=path.stem)


def parse_solution(text: str) -> list[list[Node]]:
    """Read station loads written as ``S1: 2 4`` / ``S2: 1 3^2`` lines."""
    stations = []
    for k, raw in enumerate(text.splitlines(), start=1):
        s = _strip_comment(raw)
        if not s:
            continue
        if ":" in s:
            s = s.split(":", 1)[1]
        load = []
        for tok in s.replace(",", " ").split():
            if tok == "dummy":  # zero-time terminal, re-added by solution_from_labels
                continue
            m = re.fullmatch(r"(\d+)(?:\^(\d+))?", tok)
            if not m:
                raise ParseError(f"bad node token {tok!r}", k)
            load.append((int(m.group(1)), int(m.group(2) or 1)))
        stations.append(load)
    return stations


def solution_from_labels(inst: Instance, stations: Iterable[Iterable[Node]]) -> Solution:
    """Build a solution from loads written with the file's task ids.

    The zero-time dummy terminal, if the instance has one and the loads leave
    it out, goes to the last station.
    """
    ids = {lab: j for j, lab in enumerate(inst.labels, start=1) if lab} if inst.labels else {}
    loads = []
    for s in stations:
        loads.append([(ids.get(j, j) if ids else j, q) for j, q in s])
    if inst.has_dummy_terminal and loads:
        t = inst.terminal
        if not any(j == t for s in loads for j, _ in s):
            loads[-1].append((t, 1))
    return Solution.from_stations(inst, loads)
