"""Exact branch, bound and remember search for SALBP-1 / TDALBP.

Three steps:

I.   the heuristic gives an incumbent and the station budget ``m'``;
II.  cyclic best-first search over station-oriented partial solutions with
     one minimum priority queue per station count, capped load enumeration
     and capped queues;
III. only if II ran into a cap: breadth-first search over station counts
     without load caps, to prove (or improve) the incumbent.

Partial solutions are identified by the set of placed expanded nodes, which
also fixes how many subtasks of every divisible task are already placed.
"""

from __future__ import annotations

import heapq
import logging
import time
from dataclasses import dataclass, field

from ._space import NodeSpace
from .bounds import MODES, bound_report
from .expansion import expand
from .hoffmann import HeuristicConfig, mhh
from .instance import Instance, Solution, station_time

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class SolverConfig:
    lam: float = 0.002
    max_loads: int = 10_000
    max_queue: int = 300_000
    time_limit: float | None = None
    bound_mode: str = "safe"
    min_penalty_postpass: bool = False
    max_memo: int = 5_000_000
    bfs_max_states: int = 2_000_000
    # switches for ablation runs
    max_load_rule: bool = True
    jackson_rule: bool = True
    exchange_rule: bool = True
    memo: bool = True

    def __post_init__(self):
        if self.lam < 0:
            raise ValueError("lam must be >= 0")
        if min(self.max_loads, self.max_queue, self.max_memo, self.bfs_max_states) < 1:
            raise ValueError("limits must be >= 1")
        if self.bound_mode not in MODES:
            raise ValueError(f"unknown bound mode {self.bound_mode!r}")


@dataclass(frozen=True)
class PartialSolution:
    mask: int
    loads: tuple[int, ...]
    idle_total: int
    unassigned: int
    lb: int = 0

    @property
    def m(self) -> int:
        return len(self.loads)


@dataclass
class SolveResult:
    best: Solution
    optimal: bool
    nodes_explored: int
    phase_reached: str
    limits_hit: frozenset[str]
    lower_bound: int
    elapsed: float
    incumbents: list[int] = field(default_factory=list)

    @property
    def m(self) -> int:
        return self.best.m


def priority(e: PartialSolution, lam: float) -> float:
    """Queue key: average idle time minus a bonus for work already placed."""
    idle = e.idle_total / e.m if e.m else 0.0
    return idle - lam * e.unassigned


def optimality_test(inst: Instance, sol: Solution) -> bool:
    """True when the penalty-free idle time cannot absorb the lightest station."""
    c = inst.cycle_time
    loads = [station_time(inst, s) for s in sol.stations]
    pens = [sum(inst.option_penalty(j, q) for j, q in s) for s in sol.stations]
    t_oc = sum(c - (t - p) for t, p in zip(loads, pens))
    return t_oc < min(loads)


class Memo:
    """Best station count seen per placed-node set."""

    def __init__(self, capacity: int = 5_000_000):
        self.capacity = capacity
        self.seen: dict[int, int] = {}
        self.degraded = False

    def visit(self, mask: int, m: int) -> bool:
        """Record ``(mask, m)``; False when the state was already reached with <= m stations."""
        prev = self.seen.get(mask)
        if prev is not None and prev <= m:
            return False
        if prev is None and len(self.seen) >= self.capacity:
            self.degraded = True
            return True
        self.seen[mask] = m
        return True


def remember(memo: Memo, e: PartialSolution) -> bool:
    return memo.visit(e.mask, e.m)


class _Timeout(Exception):
    pass


class Search:
    """Search machinery bound to one instance and configuration."""

    def __init__(self, inst: Instance, cfg: SolverConfig = SolverConfig(), m_prime: int | None = None):
        self.inst = inst
        self.cfg = cfg
        self.g = expand(inst, m_prime)
        self.space = NodeSpace(self.g, bound_mode=cfg.bound_mode)
        self.memo = Memo(cfg.max_memo)
        self.limits: set[str] = set()
        self.nodes = 0
        self.deadline = None

    def root(self) -> PartialSolution:
        lb, _, left = self.space.bound(0)
        return PartialSolution(0, (), 0, left, lb)

    def mask_of(self, nodes) -> int:
        """Bit mask of ``(task, q)`` nodes."""
        return sum(1 << self.g.index[(j, q)] for j, q in nodes)

    def state(self, stations) -> PartialSolution:
        """Partial solution holding the given station loads."""
        loads = tuple(self.mask_of(s) for s in stations)
        mask = 0
        idle = 0
        for ld in loads:
            mask |= ld
            idle += self.space.c - self.space.load_time(ld)
        lb, _, left = self.space.bound(mask)
        return PartialSolution(mask, loads, idle, left, lb)

    def solution(self, loads) -> Solution:
        return Solution.from_stations(self.inst, self.space.loads_to_nodes(list(loads)))

    def _check_time(self):
        if self.deadline is not None and time.perf_counter() > self.deadline:
            self.limits.add("time_limit")
            raise _Timeout

    def children(self, e: PartialSolution, limit: int | None, best_m: int, memo: Memo | None):
        """Expand ``e`` by one station: (open children, completed load tuples)."""
        sp, cfg = self.space, self.cfg
        station = e.m + 1
        loads, truncated = sp.full_loads(e.mask, station, limit,
                                         jackson=cfg.jackson_rule, max_load=cfg.max_load_rule)
        if truncated:
            self.limits.add("max_loads")
        kids, done = [], []
        for load, used in loads:
            new = e.mask | load
            if sp.is_complete(new):
                done.append(e.loads + (load,))
                continue
            if cfg.exchange_rule and sp.rule_iii(new, load):
                continue
            lb, _, left = sp.bound(new)
            if station + lb >= best_m:
                continue
            if memo is not None and not memo.visit(new, station):
                continue
            kids.append(PartialSolution(new, e.loads + (load,), e.idle_total + sp.c - used, left, lb))
        return kids, done

    def expand_station(self, e: PartialSolution, best_m: int | None = None):
        if best_m is None:
            best_m = 10**9
        return self.children(e, self.cfg.max_loads, best_m, self.memo if self.cfg.memo else None)

    def dominance(self, e: PartialSolution, load: int) -> str | None:
        """Reason a child load would be pruned, or None to keep it."""
        sp = self.space
        station = e.m + 1
        al = e.mask | load
        residual = sp.c - sp.load_time(load)
        for v in range(sp.N):
            if sp.final[v] <= residual and sp.eligible(v, al, load, station) and sp.strong(v, al):
                return "max_load"
        if sp._jackson_blocked(e.mask, al, load, residual, station):
            return "jackson"
        if not sp.is_complete(al) and sp.rule_iii(al, load):
            return "exchange"
        return None


def solve(inst: Instance, cfg: SolverConfig = SolverConfig()) -> SolveResult:
    t0 = time.perf_counter()
    deadline = None if cfg.time_limit is None else t0 + cfg.time_limit

    # step I
    g0 = expand(inst)
    best = mhh(g0, cfg=HeuristicConfig(max_loads_per_station=cfg.max_loads))
    history = [best.m]
    root_lb = bound_report(inst, cfg.bound_mode).lb_max
    search = Search(inst, cfg, m_prime=best.m)
    search.deadline = deadline
    root = search.root()
    root_lb = max(root_lb, root.lb)

    def result(optimal: bool, phase: str) -> SolveResult:
        nonlocal best
        if cfg.min_penalty_postpass:
            best = _min_penalty(search, best, deadline)
        limits = set(search.limits)
        if search.memo.degraded:
            limits.add("memo_capacity")
        return SolveResult(best, optimal, search.nodes, phase, frozenset(limits),
                           best.m if optimal else root_lb, time.perf_counter() - t0, history)

    if best.m <= root_lb or optimality_test(inst, best):
        return result(True, "I")

    # step II
    try:
        status, best = _cbfs(search, root, best, root_lb, history)
    except _Timeout:
        return result(False, "II")
    if status == "closed":
        return result(True, "II")
    if status == "exhausted" and not search.limits:
        return result(True, "II")

    # step III
    search.limits.discard("max_loads")
    search.limits.discard("max_queue")
    try:
        status, best = _bfs(search, root, best, root_lb, history)
    except _Timeout:
        return result(False, "III")
    return result(status in ("closed", "exhausted"), "III")


def _improved(search: Search, loads, best: Solution, root_lb: int, history: list[int]):
    sol = search.solution(loads)
    log.debug("incumbent %d -> %d", best.m, sol.m)
    history.append(sol.m)
    closed = sol.m <= root_lb or optimality_test(search.inst, sol)
    return sol, closed


def _cbfs(search: Search, root: PartialSolution, best: Solution, root_lb: int, history):
    cfg = search.cfg
    memo = search.memo if cfg.memo else None
    queues: list[list] = [[]]
    counter = 0
    heapq.heappush(queues[0], (priority(root, cfg.lam), 0, counter, root))
    while True:
        progressed = False
        for depth in range(len(queues)):
            q = queues[depth]
            state = None
            while q:
                _, _, _, cand = heapq.heappop(q)
                if cand.m + cand.lb < best.m:
                    state = cand
                    break
            if state is None:
                continue
            progressed = True
            search._check_time()
            search.nodes += 1
            kids, done = search.children(state, cfg.max_loads, best.m, memo)
            for loads in done:
                if len(loads) < best.m:
                    best, closed = _improved(search, loads, best, root_lb, history)
                    if closed:
                        return "closed", best
            for kid in kids:
                if kid.m + kid.lb >= best.m:
                    continue
                while len(queues) <= kid.m:
                    queues.append([])
                counter += 1
                kq = queues[kid.m]
                heapq.heappush(kq, (priority(kid, cfg.lam), kid.m, counter, kid))
                if len(kq) > cfg.max_queue:
                    search.limits.add("max_queue")
                    keep = max(1, cfg.max_queue * 9 // 10)
                    kq[:] = heapq.nsmallest(keep, kq)
                    heapq.heapify(kq)
        if not progressed:
            return "exhausted", best


def _bfs(search: Search, root: PartialSolution, best: Solution, root_lb: int, history):
    cfg = search.cfg
    seen = Memo(cfg.max_memo) if cfg.memo else None
    level = [root]
    while level:
        nxt = []
        for state in level:
            if state.m + state.lb >= best.m:
                continue
            search._check_time()
            search.nodes += 1
            kids, done = search.children(state, None, best.m, seen)
            if done:
                best, _ = _improved(search, done[0], best, root_lb, history)
                return "closed", best
            nxt.extend(kids)
            if len(nxt) > cfg.bfs_max_states:
                search.limits.add("bfs_states")
                return "limit", best
        level = nxt
    return "exhausted", best


def _min_penalty(search: Search, best: Solution, deadline) -> Solution:
    """Among solutions with ``best.m`` stations find one of least total penalty."""
    sp = search.space
    target = best.m
    if target > sp.g.m_prime:
        return best
    best_f = best.penalty_total
    best_loads = None
    seen = Memo(search.cfg.max_memo)
    stack = [(0, ())]
    try:
        while stack:
            if deadline is not None and time.perf_counter() > deadline:
                search.limits.add("time_limit")
                break
            mask, loads = stack.pop()
            lb, pen_lb, _ = sp.bound(mask)
            if len(loads) + lb > target or sp.penalty_of(mask) + pen_lb >= best_f:
                continue
            found, _ = sp.full_loads(mask, len(loads) + 1, None,
                                     jackson=search.cfg.jackson_rule,
                                     max_load=search.cfg.max_load_rule)
            for load, _used in reversed(found):
                new = mask | load
                m = len(loads) + 1
                if sp.is_complete(new):
                    f = sp.penalty_of(new)
                    if f < best_f:
                        best_f, best_loads = f, loads + (load,)
                    continue
                if search.cfg.exchange_rule and sp.rule_iii(new, load):
                    continue
                if not seen.visit(new, m):
                    continue
                stack.append((new, loads + (load,)))
    finally:
        pass
    if best_loads is None:
        return best
    return search.solution(best_loads)
