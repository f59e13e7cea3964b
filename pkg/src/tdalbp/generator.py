"""Turn SALBP-1 instances into TDALBP instances.

Method-M divides every task longer than the median time: long ones (above
``delta`` times the median) into two parts, the rest into three.  Method-R
divides a random 30% of the tasks, into two parts with probability 0.6 and
three otherwise.  Every subtask costs ``penalty_per_subtask`` extra time.
"""

from __future__ import annotations

import random
import warnings
from dataclasses import dataclass

from .instance import Instance

METHODS = ("M", "R")


@dataclass(frozen=True)
class GenConfig:
    method: str = "M"
    delta: float = 1.5
    seed: int = 0
    penalty_per_subtask: int = 1

    def __post_init__(self):
        if self.method not in METHODS:
            raise ValueError(f"unknown method {self.method!r}")
        if self.delta <= 1:
            raise ValueError("delta must be > 1")
        if self.penalty_per_subtask < 1:
            raise ValueError("penalty_per_subtask must be >= 1")


def split_time(t: int, parts: int) -> list[int]:
    """Split ``t`` as evenly as possible, larger parts first."""
    if parts < 2:
        raise ValueError("need at least two parts")
    base, extra = divmod(t, parts)
    out = [base + 1] * extra + [base] * (parts - extra)
    if out[-1] < 1 or out[0] > t - 2:
        raise ValueError(f"time {t} cannot be split into {parts} parts within [1, {t - 2}]")
    return out


def _real_tasks(inst: Instance) -> list[int]:
    return [j for j in range(1, inst.n + 1) if not (inst.has_dummy_terminal and j == inst.terminal)]


def with_divisions(inst: Instance, divisions: dict[int, list[tuple[int, int]]], tag: str = "") -> Instance:
    """Rebuild ``inst`` (keyed by internal ids) with new divisions, dropping old ones."""
    real = _real_tasks(inst)
    lab = {j: (inst.labels[j - 1] if inst.labels else j) for j in real}
    times = {lab[j]: inst.time(j) for j in real}
    arcs = [(lab[i], lab[j]) for i, j in inst.arcs if i in lab and j in lab]
    divs = {lab[j]: opts for j, opts in divisions.items()}
    name = f"{inst.name}{tag}" if inst.name else tag.lstrip("-")
    return Instance.build(times, arcs, inst.cycle_time, divs, name)


def _divide(inst: Instance, parts: dict[int, int], penalty: int) -> dict[int, list[tuple[int, int]]]:
    out = {}
    for j, k in sorted(parts.items()):
        try:
            out[j] = [(s, penalty) for s in split_time(inst.time(j), k)]
        except ValueError:
            warnings.warn(f"task {inst.label(j)} (t={inst.time(j)}) cannot be split into "
                          f"{k} parts; left indivisible", stacklevel=3)
    return out


def lower_median(values) -> int:
    s = sorted(values)
    return s[(len(s) - 1) // 2]


def method_m(inst: Instance, delta: float = 1.5, penalty: int = 1) -> Instance:
    real = _real_tasks(inst)
    if not real:
        raise ValueError("instance has no tasks")
    x = lower_median(inst.time(j) for j in real)
    parts = {j: (2 if inst.time(j) > delta * x else 3) for j in real if inst.time(j) > x}
    return with_divisions(inst, _divide(inst, parts, penalty), f"-M{delta:g}")


def method_r(inst: Instance, seed: int = 0, penalty: int = 1, share: float = 0.30,
             p_two: float = 0.6) -> Instance:
    real = _real_tasks(inst)
    if len(real) < 4:
        raise ValueError("method R needs at least 4 tasks")
    eligible = [j for j in real if inst.time(j) >= 4]
    want = round(share * len(real))
    if not eligible:
        warnings.warn("no task has time >= 4; nothing divided", stacklevel=2)
    rng = random.Random(seed)
    chosen = sorted(rng.sample(eligible, min(want, len(eligible))))
    parts = {j: (2 if rng.random() < p_two else 3) for j in chosen}
    return with_divisions(inst, _divide(inst, parts, penalty), f"-R{seed}")


def generate(inst: Instance, cfg: GenConfig) -> Instance:
    if cfg.method == "M":
        return method_m(inst, cfg.delta, cfg.penalty_per_subtask)
    return method_r(inst, cfg.seed, cfg.penalty_per_subtask)


def random_salbp(rng: random.Random, n: int, c: int | None = None, density: float = 0.3,
                 t_max: int = 9) -> Instance:
    """Small random SALBP-1 instance for tests and demos."""
    times = [rng.randint(1, t_max) for _ in range(n)]
    arcs = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1) if rng.random() < density]
    if c is None:
        c = rng.randint(max(times), max(times) + 2 * t_max)
    return Instance.build(times, arcs, c, name=f"rand{n}")
