"""Constructive heuristic: fill stations one by one with the best full load."""

from __future__ import annotations

from dataclasses import dataclass

from ._space import NodeSpace
from .expansion import ExpandedGraph, expand
from .instance import Solution

POLICIES = ("never", "greedy_when_blocked")


@dataclass(frozen=True)
class HeuristicConfig:
    max_loads_per_station: int = 10_000
    division_policy: str = "greedy_when_blocked"

    def __post_init__(self):
        if self.max_loads_per_station < 1:
            raise ValueError("max_loads_per_station must be >= 1")
        if self.division_policy not in POLICIES:
            raise ValueError(f"unknown division policy {self.division_policy!r}")


def mhh(g: ExpandedGraph, c: int | None = None, cfg: HeuristicConfig = HeuristicConfig()) -> Solution:
    """Fill stations left to right with the least-idle full load.

    Ties go to fewer nodes, then to the lexicographically smallest node list.
    With ``greedy_when_blocked`` a task is only split when no undivided
    candidate fits the remaining capacity; tasks longer than the cycle time
    are split under either policy.
    """
    if c is not None and c != g.cycle_time:
        g = expand(g.instance.with_cycle_time(c), g.m_prime)
    space = NodeSpace(g, use_windows=False)
    if not space.feasible:
        raise ValueError("instance has a task that fits no station")
    stations = _construct(space, cfg)
    return Solution.from_stations(g.instance, space.loads_to_nodes(stations))


def _construct(space: NodeSpace, cfg: HeuristicConfig) -> list[int]:
    c = space.c
    oversize = [space.inst.time(p + 1) > c for p in range(space.n)]

    def allow(v, al, load):
        p = space.parent[v]
        return space.q[v] == 1 or oversize[p] or (al & space.opts[p]) != 0

    mask = 0
    loads: list[int] = []
    while not space.is_complete(mask):
        station = len(loads) + 1
        found, _ = space.full_loads(mask, station, cfg.max_loads_per_station,
                                    jackson=False, allow=allow)
        if found:
            load, used = min(found, key=lambda lu: (-lu[1], bin(lu[0]).count("1"),
                                                    _keys(space, lu[0])))
        else:
            load, used = 0, 0
        if cfg.division_policy == "greedy_when_blocked":
            load, used = _start_divisions(space, mask, load, used, station)
        if not load:
            raise RuntimeError(f"no node can be placed at station {station}")
        mask |= load
        loads.append(load)
    return loads


def _start_divisions(space: NodeSpace, mask: int, load: int, used: int, station: int):
    """Top up a blocked station with first parts of still undivided tasks."""
    while True:
        al = mask | load
        residual = space.c - used
        best = None
        for v in range(space.N):
            if space.q[v] == 1 or space.final[v] > residual:
                continue
            p = space.parent[v]
            if al & space.opts[p] or not space.eligible(v, al, load, station):
                continue
            if best is None or space.final[v] > space.final[best]:
                best = v
        if best is None:
            return load, used
        load |= 1 << best
        used += space.final[best]


def _keys(space: NodeSpace, load: int) -> list[tuple[int, int]]:
    return sorted(space.key[v] for v in range(space.N) if (load >> v) & 1)
