"""Lower bounds on the station count.

``safe`` mode charges every divisible task the cheapest of its feasible
activations, so the bounds stay valid whatever the solver decides to divide.
``paper_literal`` mode sums the weights of all subtask options of every
divisible task; it can overshoot the optimum and is kept for experiments.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .expansion import feasible_activations
from .instance import Instance

MODES = ("safe", "paper_literal")


def w1(t: int, c: int) -> Fraction:
    if 2 * t > c:
        return Fraction(1)
    if 2 * t == c:
        return Fraction(1, 2)
    return Fraction(0)


def w2(t: int, c: int) -> Fraction:
    if 3 * t > 2 * c:
        return Fraction(1)
    if 3 * t == 2 * c:
        return Fraction(2, 3)
    if 3 * t > c:
        return Fraction(1, 2)
    if 3 * t == c:
        return Fraction(1, 3)
    return Fraction(0)


def lb1(times: Iterable[int], c: int) -> int:
    if c < 1:
        raise ValueError("cycle time must be >= 1")
    return -(-sum(times) // c)


def cycle_feasible_activations(inst: Instance, j: int) -> list[frozenset[int]]:
    """Activations of ``j`` whose parts all fit the cycle time."""
    c = inst.cycle_time
    acts = feasible_activations(inst, j).subsets
    return [a for a in acts if all(inst.final_time(j, q) <= c for q in a)]


def bounded_subtask_options(inst: Instance, j: int) -> list[int]:
    """Subtask options of ``j`` that occur in some cycle-feasible activation."""
    acts = cycle_feasible_activations(inst, j)
    return sorted({q for a in acts for q in a if q != 1})


def task_weights(inst: Instance, j: int, mode: str = "safe") -> tuple[Fraction, Fraction]:
    """The (w1, w2) contribution of one unassigned task."""
    c = inst.cycle_time
    subs = bounded_subtask_options(inst, j) if inst.division(j) else []
    if not subs:
        t = inst.time(j)
        return w1(t, c), w2(t, c)
    if mode == "paper_literal":
        return (sum((w1(inst.final_time(j, q), c) for q in subs), Fraction(0)),
                sum((w2(inst.final_time(j, q), c) for q in subs), Fraction(0)))
    if mode != "safe":
        raise ValueError(f"unknown bound mode {mode!r}")
    acts = cycle_feasible_activations(inst, j)
    return (min(sum((w1(inst.final_time(j, q), c) for q in a), Fraction(0)) for a in acts),
            min(sum((w2(inst.final_time(j, q), c) for q in a), Fraction(0)) for a in acts))


def lb23(inst: Instance, mode: str = "safe", tasks: Iterable[int] | None = None) -> tuple[int, int]:
    if tasks is None:
        tasks = range(1, inst.n + 1)
    s1 = s2 = Fraction(0)
    for j in tasks:
        a, b = task_weights(inst, j, mode)
        s1 += a
        s2 += b
    return math.ceil(s1), math.ceil(s2)


# -- bin packing -----------------------------------------------------------


def l2_bound(items: Sequence[int], c: int) -> int:
    """The classic L2 bound for bin packing."""
    items = [s for s in items if s > 0]
    if not items:
        return 0
    best = lb1(items, c)
    ks = {0} | {s for s in items if 2 * s <= c}
    for k in ks:
        big = [s for s in items if s > c - k]
        mid = [s for s in items if c - k >= s and 2 * s > c]
        small = sum(s for s in items if 2 * s <= c and s >= k)
        free = len(mid) * c - sum(mid)
        extra = max(0, -(-(small - free) // c))
        best = max(best, len(big) + len(mid) + extra)
    return best


def _ffd(items: list[int], c: int) -> int:
    bins: list[int] = []
    for s in items:
        for k, r in enumerate(bins):
            if r >= s:
                bins[k] = r - s
                break
        else:
            bins.append(c - s)
    return len(bins)


def lb_bin(items: Iterable[int], c: int, node_limit: int = 50_000) -> int:
    """Bin-packing optimum, or a proven lower bound if the node budget runs out.

    Depth-first branch and bound over items in decreasing size; a branch is
    cut when the bins already wasted (residual smaller than every remaining
    item) push ``ceil((total + waste) / c)`` up to the incumbent.
    """
    items = sorted((s for s in items if s > 0), reverse=True)
    for s in items:
        if s > c:
            raise ValueError(f"item of size {s} exceeds capacity {c}")
    if not items:
        return 0
    root = l2_bound(items, c)
    best = _ffd(items, c)
    if best == root:
        return best
    total = sum(items)
    smallest = items[-1]
    nodes = 0
    exhausted = False

    def rec(i: int, bins: list[int]) -> None:
        nonlocal best, nodes, exhausted
        if exhausted or best == root:
            return
        nodes += 1
        if nodes > node_limit:
            exhausted = True
            return
        if i == len(items):
            best = min(best, len(bins))
            return
        waste = sum(r for r in bins if r < smallest)
        if max(len(bins), -(-(total + waste) // c)) >= best:
            return
        s = items[i]
        tried = set()
        for k, r in enumerate(bins):
            if r >= s and r not in tried:
                tried.add(r)
                bins[k] = r - s
                rec(i + 1, bins)
                bins[k] = r
        if len(bins) + 1 < best:
            bins.append(c - s)
            rec(i + 1, bins)
            bins.pop()

    rec(0, [])
    if exhausted and best > root:
        return root
    return best


def bin_relaxation(inst: Instance) -> tuple[list[int], int]:
    """Items and fluid work for the instance-level packing bound.

    Indivisible tasks are rigid items; a divisible task contributes the
    cheapest total final time over its feasible activations as freely
    splittable work.
    """
    items = []
    fluid = 0
    for j in range(1, inst.n + 1):
        if inst.time(j) == 0:
            continue
        if inst.division(j) and bounded_subtask_options(inst, j):
            fluid += min(sum(inst.final_time(j, q) for q in a)
                         for a in cycle_feasible_activations(inst, j))
        else:
            items.append(inst.time(j))
    return items, fluid


def instance_bin_bound(inst: Instance, node_limit: int = 50_000) -> int:
    c = inst.cycle_time
    items, fluid = bin_relaxation(inst)
    return max(lb_bin(items, c, node_limit), -(-(sum(items) + fluid) // c))


@dataclass(frozen=True)
class BoundReport:
    lb1: int
    lb2: int
    lb3: int
    lb_bin: int
    lb_max: int
    mode: str

    def line(self) -> str:
        return f"{self.lb1}\t{self.lb2}\t{self.lb3}\t{self.lb_bin}\t{self.lb_max}\t{self.mode}"


def bound_report(inst: Instance, mode: str = "safe", node_limit: int = 50_000) -> BoundReport:
    if mode not in MODES:
        raise ValueError(f"unknown bound mode {mode!r}")
    b1 = lb1(inst.times.values(), inst.cycle_time)
    b2, b3 = lb23(inst, mode)
    bb = instance_bin_bound(inst, node_limit)
    return BoundReport(b1, b2, b3, bb, max(b1, b2, b3, bb), mode)
