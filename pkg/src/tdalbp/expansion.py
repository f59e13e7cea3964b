"""Expanded precedence graph and station intervals.

Every divisible task ``j`` becomes the node set ``{j^1, ..., j^r}``; each node
inherits all arcs of ``j`` and nodes of the same task are mutually unordered.
Earliest/latest stations follow the usual work-over-cycle-time ceiling formulas,
with predecessor and successor work counted at full original task times and
the node's own work at the smallest option time of its task.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from typing import NamedTuple

from .instance import Instance, Node, activation_subsets, node_label, transitive_sets


@dataclass(frozen=True)
class SubtaskNode:
    parent: int
    q: int
    given_time: int
    penalty: int

    @property
    def final_time(self) -> int:
        return self.given_time + self.penalty

    @property
    def key(self) -> Node:
        return (self.parent, self.q)


@dataclass(frozen=True, eq=False)
class ExpandedGraph:
    instance: Instance
    nodes: tuple[SubtaskNode, ...]
    arcs: tuple[tuple[Node, Node], ...]
    e: dict[Node, int]
    l: dict[Node, int]
    m_prime: int

    @property
    def cycle_time(self) -> int:
        return self.instance.cycle_time

    def si(self, node: Node) -> tuple[int, int]:
        return self.e[node], self.l[node]

    @cached_property
    def index(self) -> dict[Node, int]:
        return {nd.key: k for k, nd in enumerate(self.nodes)}

    def node(self, key: Node) -> SubtaskNode:
        return self.nodes[self.index[key]]

    @cached_property
    def b(self) -> dict[int, frozenset[Node]]:
        """Candidate node set of every station ``1..m'``."""
        out = {k: set() for k in range(1, self.m_prime + 1)}
        for nd in self.nodes:
            lo, hi = self.si(nd.key)
            for k in range(max(lo, 1), min(hi, self.m_prime) + 1):
                out[k].add(nd.key)
        return {k: frozenset(v) for k, v in out.items()}

    def nodes_of(self, j: int) -> list[Node]:
        return [(j, q) for q in range(1, self.instance.r(j) + 1)]

    @cached_property
    def transitive(self) -> dict[int, tuple[frozenset[int], frozenset[int]]]:
        return transitive_sets(self.instance)

    def window(self, j: int) -> int:
        lo, hi = self.si((j, 1))
        return max(hi - lo + 1, 0)

    def with_m_prime(self, m_prime: int) -> "ExpandedGraph":
        return expand(self.instance, m_prime)

    def dump(self) -> str:
        """Diagnostic listing: node lines then arc lines."""
        inst = self.instance
        out = ["# node parent q given penalty final E L"]
        for nd in self.nodes:
            e, l = self.si(nd.key)
            out.append(f"{node_label(nd.parent, nd.q, inst)} {inst.label(nd.parent)} {nd.q} "
                       f"{nd.given_time} {nd.penalty} {nd.final_time} {e} {l}")
        out.append("# arcs")
        out.extend(f"{node_label(*a, inst)} {node_label(*b, inst)}" for a, b in self.arcs)
        return "\n".join(out) + "\n"


def _min_option_time(inst: Instance, j: int) -> int:
    return min(inst.option_time(j, q) for q in range(1, inst.r(j) + 1))


def earliest_station(g: ExpandedGraph, node: Node) -> int:
    inst = g.instance
    j = node[0]
    work = _min_option_time(inst, j) + sum(inst.time(i) for i in g.transitive[j][0])
    return 1 if work == 0 else math.ceil(work / inst.cycle_time)


def latest_station(g: ExpandedGraph, node: Node, m_prime: int | None = None) -> int:
    inst = g.instance
    if m_prime is None:
        m_prime = g.m_prime
    j = node[0]
    work = _min_option_time(inst, j) + sum(inst.time(i) for i in g.transitive[j][1])
    return m_prime if work == 0 else m_prime + 1 - math.ceil(work / inst.cycle_time)


def expand(inst: Instance, m_prime: int | None = None) -> ExpandedGraph:
    """Build the expanded graph; ``m_prime`` defaults to the task count."""
    if m_prime is None:
        m_prime = inst.n
    nodes = tuple(
        SubtaskNode(j, q, inst.option_time(j, q), inst.option_penalty(j, q))
        for j in range(1, inst.n + 1)
        for q in range(1, inst.r(j) + 1)
    )
    arcs = tuple(
        ((i, p), (j, q))
        for i, j in inst.arcs
        for p in range(1, inst.r(i) + 1)
        for q in range(1, inst.r(j) + 1)
    )
    g = ExpandedGraph(inst, nodes, arcs, {}, {}, m_prime)
    for nd in nodes:
        g.e[nd.key] = earliest_station(g, nd.key)
        g.l[nd.key] = latest_station(g, nd.key, m_prime)
    return g


class Activations(NamedTuple):
    subsets: list[frozenset[int]]
    prunable: frozenset[int]


def feasible_activations(
    inst: Instance, task_id: int, window: int | None = None
) -> Activations:
    """Option-index subsets whose given times sum to the task time.

    Always contains ``{1}``.  Subsets needing more distinct stations than
    ``window`` are dropped; subtask options appearing in no surviving subset
    are reported as prunable.
    """
    r = inst.r(task_id)
    subs = [inst.option_time(task_id, q) for q in range(2, r + 1)]
    found = [frozenset(q + 2 for q in idx) for idx in activation_subsets(subs, inst.time(task_id))]
    if window is not None:
        found = [s for s in found if len(s) <= window]
    used = set().union(*found) if found else set()
    prunable = frozenset(q for q in range(2, r + 1) if q not in used)
    return Activations([frozenset({1})] + found, prunable)
