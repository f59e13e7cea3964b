"""Brute-force reference solver for small instances.

Deliberately independent of the search code: it enumerates every nonempty
feasible station load from every reachable set of placed nodes, level by
level, with no dominance, bounds or windows.  Use it to check the exact
solver, never the other way round.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .instance import Instance, InstanceError

DEFAULT_CAP = 18


class OracleCapError(InstanceError):
    pass


@dataclass(frozen=True)
class OracleResult:
    m_opt: int
    min_penalty_among_optima: int
    count_optima: int


def node_count(inst: Instance) -> int:
    return sum(inst.r(j) for j in range(1, inst.n + 1))


def _activations(inst: Instance, j: int) -> list[frozenset[int]]:
    r = inst.r(j)
    out = [frozenset({1})]
    for size in range(2, r):
        for combo in combinations(range(2, r + 1), size):
            if sum(inst.option_time(j, q) for q in combo) == inst.time(j):
                out.append(frozenset(combo))
    return out


def brute_force(inst: Instance, cap_n: int = DEFAULT_CAP, count_limit: int = 1_000_000) -> OracleResult:
    """Exact optimum, least penalty among optima and the number of optima.

    Optima are counted as distinct sets of station loads, so two station
    orders of the same loads count once.  Counting stops at ``count_limit``.
    """
    n_nodes = node_count(inst)
    if n_nodes > cap_n:
        raise OracleCapError(f"instance has {n_nodes} nodes, oracle cap is {cap_n}")
    c = inst.cycle_time
    nodes = [(j, q) for j in range(1, inst.n + 1) for q in range(1, inst.r(j) + 1)]
    bit = {nd: 1 << k for k, nd in enumerate(nodes)}
    ftime = [inst.final_time(j, q) for j, q in nodes]
    pen = [inst.option_penalty(j, q) for j, q in nodes]
    acts = {j: [sum(bit[(j, q)] for q in a) for a in _activations(inst, j)]
            for j in range(1, inst.n + 1)}
    task_bits = {j: sum(bit[(j, q)] for q in range(1, inst.r(j) + 1)) for j in range(1, inst.n + 1)}

    def placed(mask: int, j: int) -> int:
        return mask & task_bits[j]

    def done(mask: int, j: int) -> bool:
        return placed(mask, j) in acts[j]

    def extendable(mask: int, j: int) -> bool:
        got = placed(mask, j)
        return any(got & a == got for a in acts[j])

    def complete(mask: int) -> bool:
        return all(done(mask, j) for j in range(1, inst.n + 1))

    def loads(mask: int) -> list[int]:
        out = []

        def rec(k: int, load: int, used: int) -> None:
            if k == len(nodes):
                if load:
                    out.append(load)
                return
            rec(k + 1, load, used)
            j, _ = nodes[k]
            b = bit[nodes[k]]
            if mask & b or used + ftime[k] > c:
                return
            if load & task_bits[j]:
                return  # one piece of a task per station
            new = mask | load | b
            if not extendable(new, j):
                return
            if not all(done(new, i) for i in inst.predecessors[j]):
                return
            rec(k + 1, load | b, used + ftime[k])

        rec(0, 0, 0)
        return out

    # breadth-first over station counts
    level = {0}
    edges: list[dict[int, list[int]]] = []
    m = 0
    while True:
        m += 1
        nxt: set[int] = set()
        out: dict[int, list[int]] = {}
        for mask in level:
            kids = [mask | ld for ld in loads(mask)]
            out[mask] = kids
            nxt.update(kids)
        edges.append(out)
        if not nxt:
            raise InstanceError("instance has no feasible solution")
        finals = [s for s in nxt if complete(s)]
        if finals:
            break
        level = nxt
        if m > len(nodes):
            raise InstanceError("instance has no feasible solution")

    min_pen = min(sum(p for k, p in enumerate(pen) if s >> k & 1) for s in finals)

    # walk back to keep only masks that lead to a complete set in m stations
    good = [set() for _ in range(m + 1)]
    good[m] = set(finals)
    for k in range(m - 1, -1, -1):
        good[k] = {s for s, kids in edges[k].items() if any(t in good[k + 1] for t in kids)}

    found: set[frozenset[int]] = set()

    def walk(k: int, mask: int, chosen: tuple[int, ...]) -> None:
        if len(found) >= count_limit:
            return
        if k == m:
            found.add(frozenset(chosen))
            return
        for t in edges[k][mask]:
            if t in good[k + 1]:
                walk(k + 1, t, chosen + (t ^ mask,))

    walk(0, 0, ())
    return OracleResult(m, min_pen, len(found))
