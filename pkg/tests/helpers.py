"""Shared fixtures data: the worked example's printed solutions and a random battery."""

from __future__ import annotations

import random
from functools import lru_cache

from tdalbp.generator import method_m, method_r, random_salbp, with_divisions
from tdalbp.instance import Instance, InstanceError, parse_solution
from tdalbp.oracle import brute_force, node_count

# Station loads printed for the 23-task example (c = 10).
SALBP_12 = """
S1: 1
S2: 2 4
S3: 3
S4: 5 6 7
S5: 8 12
S6: 9
S7: 10 11
S8: 13 15 16
S9: 18 22
S10: 14 21
S11: 17 19 20
S12: 23
"""

TD_F8 = """
S1: 1 3^2
S2: 2 3^3
S3: 4 5 7
S4: 6 9^2
S5: 8 12
S6: 9^3 11 16
S7: 10 14^3
S8: 13^2 14^2
S9: 15 18
S10: 13^3 17 19 20
S11: 21 22 23
"""

TD_F4 = """
S1: 2 4
S2: 1 3^2
S3: 3^3 5
S4: 6 9^2
S5: 8 12
S6: 7 9^3 13
S7: 10 16
S8: 14 17
S9: 11 19 20
S10: 15 18
S11: 21 22 23
"""

TD_F2 = """
S1: 2 4
S2: 1 3^2
S3: 3^3 5 7
S4: 6 10
S5: 8
S6: 9 12
S7: 11 15 16
S8: 18 22
S9: 14 21
S10: 13 17 19
S11: 20 23
"""

PRINTED = {8: TD_F8, 4: TD_F4, 2: TD_F2}


def stations(text: str):
    return parse_solution(text)


def random_divisions(rng: random.Random, inst: Instance, max_r: int = 4) -> Instance:
    """Arbitrary option lists (not always partitions) on a random subset of tasks."""
    divs = {}
    for j in range(1, inst.n + 1):
        t = inst.time(j)
        if t < 3 or rng.random() > 0.4:
            continue
        k = rng.randint(1, max_r - 1)
        opts = sorted(((rng.randint(1, t - 2), rng.randint(1, 2)) for _ in range(k)), reverse=True)
        if rng.random() < 0.6 and t >= 4:
            a = rng.randint(2, t - 2)
            opts = sorted([(a, 1), (t - a, 1)] + opts[: max(0, k - 2)], reverse=True)
        divs[j] = opts
    return with_divisions(inst, divs, "-X")


def _oversize(rng: random.Random, base: Instance) -> Instance:
    """Shrink the cycle time below the longest task, which must then be split."""
    j = max(range(1, base.n + 1), key=base.time)
    t = base.time(j)
    if t < 5:
        raise ValueError("longest task too short")
    a = (t + 1) // 2
    divs = {j: [(a, 1), (t - a, 1)]}
    c = max(a + 1, t - rng.randint(1, 2))
    others = [base.time(i) for i in range(1, base.n + 1) if i != j]
    if max(others, default=0) > c:
        raise ValueError("another task too long")
    return with_divisions(base, divs, "-O").with_cycle_time(c)


@lru_cache(maxsize=None)
def battery(count: int = 220, seed: int = 20240601, cap: int = 18):
    """``count`` TDALBP instances within the oracle cap, each with its oracle result.

    Also returns the SALBP-1 base of every instance (with its oracle result)
    and the generator kind (``M``, ``R``, ``X`` or ``O``).
    """
    rng = random.Random(seed)
    out = []
    k = 0
    while len(out) < count:
        k += 1
        n = rng.randint(3, 9)
        t_max = rng.choice((6, 9, 12))
        base = random_salbp(rng, n, density=rng.choice((0.15, 0.3, 0.5)), t_max=t_max)
        # tight cycle times make division worth its penalty more often
        c = max(max(base.times.values()), round(base.total_time / rng.uniform(1.5, 4.0)))
        base = base.with_cycle_time(c)
        kind = "MRX"[k % 3]
        try:
            if kind == "M":
                inst = method_m(base, rng.choice((1.2, 1.5)))
            elif kind == "R":
                inst = method_r(base, rng.randrange(2**32)) if base.n >= 4 else None
            elif rng.random() < 0.3:
                kind = "O"  # its base keeps the looser cycle time
                inst = _oversize(rng, base)
            else:
                inst = random_divisions(rng, base)
        except (InstanceError, ValueError):
            inst = None
        if inst is None or not inst.divisions or node_count(inst) > cap:
            continue
        out.append((inst, brute_force(inst, cap), base, brute_force(base, cap), kind))
    return out
