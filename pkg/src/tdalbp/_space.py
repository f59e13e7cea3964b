"""Bitmask view of an expanded graph shared by the heuristic and the search.

A partial assignment is an int whose bit ``v`` is set when expanded node ``v``
is placed.  Division state (how many subtasks of each task are placed) is
read off the same mask, so a mask identifies a partial solution up to the
order of its stations.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass

from .expansion import ExpandedGraph, feasible_activations
from .instance import transitive_sets

W1_SCALE = 2
W2_SCALE = 6


def _w1x(t: int, c: int) -> int:
    if 2 * t > c:
        return 2
    return 1 if 2 * t == c else 0


def _w2x(t: int, c: int) -> int:
    if 3 * t > 2 * c:
        return 6
    if 3 * t == 2 * c:
        return 4
    if 3 * t > c:
        return 3
    return 2 if 3 * t == c else 0


def _submasks(mask: int):
    sub = mask
    while sub:
        yield sub
        sub = (sub - 1) & mask


@dataclass
class Rest:
    """Cheapest completion of one task from a given partial division."""

    work: int  # final time still to place
    w1: int
    w2: int
    penalty: int


class NodeSpace:
    def __init__(self, g: ExpandedGraph, use_windows: bool = True, bound_mode: str = "safe"):
        inst = g.instance
        c = inst.cycle_time
        self.g = g
        self.inst = inst
        self.c = c
        nodes = g.nodes
        self.N = N = len(nodes)
        self.n = n = inst.n
        self.key = [nd.key for nd in nodes]
        self.parent = [nd.parent - 1 for nd in nodes]
        self.q = [nd.q for nd in nodes]
        self.final = [nd.final_time for nd in nodes]
        self.penalty = [nd.penalty for nd in nodes]
        self.e = [g.e[nd.key] for nd in nodes]
        self.l = [g.l[nd.key] if use_windows else 10**9 for nd in nodes]

        self.opts = [0] * n
        self.whole = [0] * n
        for v, nd in enumerate(nodes):
            self.opts[self.parent[v]] |= 1 << v
            if nd.q == 1:
                self.whole[self.parent[v]] = 1 << v
        self.divisible = [inst.r(p + 1) > 1 for p in range(n)]
        self.pred_tasks = [tuple(i - 1 for i in inst.predecessors[p + 1]) for p in range(n)]

        trans = transitive_sets(inst)
        self.fstar = [0] * n
        self.pstar = [0] * n
        for p in range(n):
            for s in trans[p + 1][1]:
                self.fstar[p] |= 1 << (s - 1)
            for s in trans[p + 1][0]:
                self.pstar[p] |= 1 << (s - 1)
        self.fstar_count = [bin(f).count("1") for f in self.fstar]

        self.terminal_bit = self.whole[n - 1]
        term_task = 1 << (n - 1)
        near_ok = term_task if inst.time(n) == 0 else 0
        self.near_sink = [(self.fstar[p] & ~near_ok) == 0 for p in range(n)]
        self.near_nodes = 0
        for v in range(N):
            if self.near_sink[self.parent[v]]:
                self.near_nodes |= 1 << v
        self.far_tasks = [p for p in range(n) if not self.near_sink[p]]

        # activations as node masks, restricted to parts that fit and to windows
        self.acts: list[list[int]] = []
        base = [v for v in range(N)]
        first = {}
        for v in base:
            first.setdefault(self.parent[v], v)
        for p in range(n):
            j = p + 1
            window = g.window(j) if use_windows else None
            acts = []
            for a in feasible_activations(inst, j, window).subsets:
                if all(inst.final_time(j, q) <= c for q in a):
                    acts.append(sum(1 << (first[p] + q - 1) for q in a))
            self.acts.append(acts)
        self.complete = [frozenset(a) for a in self.acts]
        self.feasible = all(self.acts)

        self.twin_prev = [-1] * N
        for v in range(N):
            if self.q[v] >= 2:
                p = self.parent[v]
                for u in range(v - 1, first[p], -1):
                    if (self.final[u], self.penalty[u]) == (self.final[v], self.penalty[v]) and \
                            inst.option_time(p + 1, self.q[u]) == inst.option_time(p + 1, self.q[v]):
                        self.twin_prev[v] = u
                        break

        # extendable partial divisions, the parts forced by them, and completion costs
        self.extendable: list[set[int]] = []
        self.forced: list[dict[int, int]] = []
        self.rest: list[dict[int, Rest]] = []
        for p in range(n):
            sub_acts = [a for a in self.acts[p] if a != self.whole[p]]
            ext = {0}
            for a in sub_acts:
                ext.update(_submasks(a))
            forced = {}
            rest = {}
            for part in ext:
                compat = [a for a in self.acts[p] if (a & part) == part and (part == 0 or a != self.whole[p])]
                if part and part in self.complete[p]:
                    continue
                inter = ~0
                for a in compat:
                    inter &= a
                forced[part] = (inter & ~self.whole[p]) if compat else 0
                rest[part] = self._rest(p, part, compat, bound_mode)
            self.extendable.append(ext)
            self.forced.append(forced)
            self.rest.append(rest)

        # Extended Jackson dominators: indivisible i over whole node j
        self.dominators: list[list[int]] = [[] for _ in range(N)]
        indiv = [v for v in range(N) if not self.divisible[self.parent[v]]]
        for j in range(N):
            if self.q[j] != 1:
                continue
            pj = self.parent[j]
            for i in indiv:
                pi = self.parent[i]
                if pi == pj or (self.pstar[pj] >> pi) & 1 or (self.pstar[pi] >> pj) & 1:
                    continue
                if self.final[i] < self.final[j]:
                    continue
                if (self.fstar[pi] & self.fstar[pj]) != self.fstar[pj]:
                    continue
                if self.final[i] == self.final[j] and self.fstar[pi] == self.fstar[pj] and pi > pj:
                    continue
                self.dominators[j].append(i)

        self.order = self._static_order()
        self.pos = [0] * N
        for k, v in enumerate(self.order):
            self.pos[v] = k

    def _rest(self, p: int, part: int, compat: list[int], mode: str) -> Rest:
        c = self.c
        if not compat:
            return Rest(10**9, 10**9, 10**9, 10**9)
        bits = lambda m: [v for v in range(self.N) if (m >> v) & 1]
        costs = []
        for a in compat:
            left = bits(a & ~part)
            costs.append((sum(self.final[v] for v in left),
                          sum(_w1x(self.final[v], c) for v in left),
                          sum(_w2x(self.final[v], c) for v in left),
                          sum(self.penalty[v] for v in left)))
        r = Rest(min(x[0] for x in costs), min(x[1] for x in costs),
                 min(x[2] for x in costs), min(x[3] for x in costs))
        if mode == "paper_literal" and self.divisible[p]:
            subs = 0
            for a in compat:
                if a != self.whole[p]:
                    subs |= a
            subs &= ~part
            if subs:
                left = bits(subs)
                r = Rest(r.work, sum(_w1x(self.final[v], c) for v in left),
                         sum(_w2x(self.final[v], c) for v in left), r.penalty)
        return r

    def _static_order(self) -> list[int]:
        """Linear extension of the node precedences, big nodes first."""
        n, N = self.n, self.N
        waiting = [len(self.pred_tasks[p]) for p in range(n)]
        succ_tasks: list[list[int]] = [[] for _ in range(n)]
        for p in range(n):
            for i in self.pred_tasks[p]:
                succ_tasks[i].append(p)
        nodes_of: list[list[int]] = [[] for _ in range(n)]
        for v in range(N):
            nodes_of[self.parent[v]].append(v)
        heap = []
        for p in range(n):
            if waiting[p] == 0:
                for v in nodes_of[p]:
                    heapq.heappush(heap, (-self.final[v], -self.fstar_count[p], p, self.q[v], v))
        left = [len(nodes_of[p]) for p in range(n)]
        order = []
        while heap:
            *_, v = heapq.heappop(heap)
            order.append(v)
            p = self.parent[v]
            left[p] -= 1
            if left[p] == 0:
                for s in succ_tasks[p]:
                    waiting[s] -= 1
                    if waiting[s] == 0:
                        for u in nodes_of[s]:
                            heapq.heappush(heap, (-self.final[u], -self.fstar_count[s], s, self.q[u], u))
        return order

    # -- state queries ---------------------------------------------------

    def task_done(self, mask: int, p: int) -> bool:
        return (mask & self.opts[p]) in self.complete[p]

    def is_complete(self, mask: int) -> bool:
        return bool(mask & self.terminal_bit)

    def bound(self, mask: int) -> tuple[int, int, int]:
        """(station lower bound, penalty lower bound, unfinished task count)."""
        work = a = b = pen = left = 0
        opts, complete, rest = self.opts, self.complete, self.rest
        for p in range(self.n):
            part = mask & opts[p]
            if part in complete[p]:
                continue
            r = rest[p][part]
            work += r.work
            a += r.w1
            b += r.w2
            pen += r.penalty
            left += 1
        c = self.c
        lb = max(-(-work // c), -(-a // W1_SCALE), -(-b // W2_SCALE))
        return lb, pen, left

    def penalty_of(self, mask: int) -> int:
        return sum(self.penalty[v] for v in range(self.N) if (mask >> v) & 1)

    def load_time(self, load: int) -> int:
        return sum(self.final[v] for v in range(self.N) if (load >> v) & 1)

    def eligible(self, v: int, al: int, load: int, station: int) -> bool:
        if (al >> v) & 1:
            return False
        if station < self.e[v] or station > self.l[v]:
            return False
        p = self.parent[v]
        opts, complete = self.opts, self.complete
        for i in self.pred_tasks[p]:
            if (al & opts[i]) not in complete[i]:
                return False
        part = al & opts[p]
        if self.q[v] == 1:
            return part == 0
        if part & self.whole[p] or load & opts[p]:
            return False
        tw = self.twin_prev[v]
        if tw >= 0 and not (al >> tw) & 1:
            return False
        return (part | (1 << v)) in self.extendable[p]

    def strong(self, v: int, al: int) -> bool:
        """Whether an addable node may always be moved into the current station."""
        if self.q[v] == 1:
            return True
        p = self.parent[v]
        return bool(self.forced[p].get(al & self.opts[p], 0) >> v & 1)

    def rule_iii(self, mask: int, load: int) -> bool:
        """True when the last station holds only near-sink work while other work waits."""
        if load & ~self.near_nodes:
            return False
        return any((mask & self.opts[p]) not in self.complete[p] for p in self.far_tasks)

    def full_loads(self, mask: int, station: int, limit: int | None = None,
                   jackson: bool = True, max_load: bool = True, allow=None):
        """Enumerate station loads for ``station`` on top of ``mask``.

        Returns ``(loads, truncated)`` with loads as ``(load_mask, time)``.
        With ``max_load`` only loads that no movable node can extend are kept;
        ``jackson`` drops loads where an indivisible dominating node could
        replace a whole node.  ``allow`` optionally filters candidate nodes.
        """
        c = self.c
        order, final = self.order, self.final
        N = self.N
        eligible, strong = self.eligible, self.strong
        divisible, parent = self.divisible, self.parent
        out: list[tuple[int, int]] = []
        truncated = False

        # only nodes whose predecessor tasks are done or could finish here
        reach = [False] * self.n
        for p in range(self.n):
            if (mask & self.opts[p]) in self.complete[p]:
                continue
            reach[p] = all(reach[i] or (mask & self.opts[i]) in self.complete[i]
                           for i in self.pred_tasks[p])
        pool = [(k, order[k]) for k in range(N)
                if reach[parent[order[k]]] and not (mask >> order[k]) & 1
                and final[order[k]] <= c and self.e[order[k]] <= station <= self.l[order[k]]]

        def rec(start: int, load: int, used: int) -> bool:
            nonlocal truncated
            al = mask | load
            residual = c - used
            cands = []
            extendable = False
            blocking = None
            # upper bound on what any descendant can still add
            addable_sum = 0
            for k, v in pool:
                if final[v] > residual or (al >> v) & 1:
                    continue
                if k >= start:
                    addable_sum += final[v]
                if not eligible(v, al, load, station):
                    continue
                if allow is not None and not allow(v, al, load):
                    continue
                if k >= start:
                    cands.append(k)
                if not extendable and strong(v, al):
                    extendable = True
                if k < start and not divisible[parent[v]]:
                    if blocking is None or final[v] < blocking:
                        blocking = final[v]
            if blocking is not None and max_load and residual - addable_sum >= blocking:
                return True
            if load and (not max_load or not extendable):
                if not (jackson and self._jackson_blocked(mask, al, load, residual, station)):
                    out.append((load, used))
                    if limit is not None and len(out) >= limit:
                        truncated = True
                        return False
            for k in cands:
                v = order[k]
                if not rec(k + 1, load | (1 << v), used + final[v]):
                    return False
            return True

        rec(0, 0, 0)
        return out, truncated

    def _jackson_blocked(self, mask: int, al: int, load: int, residual: int, station: int) -> bool:
        final = self.final
        for j in range(self.N):
            if not (load >> j) & 1 or not self.dominators[j]:
                continue
            room = residual + final[j]
            for i in self.dominators[j]:
                if final[i] <= room and self.eligible(i, al, load, station):
                    return True
        return False

    def loads_to_nodes(self, loads: list[int]) -> list[list[tuple[int, int]]]:
        return [[self.key[v] for v in range(self.N) if (ld >> v) & 1] for ld in loads]
