"""Encoder selection for neighbour-only broadcast: minimum-weight dominating sets.

Every vertex either encodes (action 1) or decodes (action 0); a decoder must
have at least one encoding neighbour. Minimising the summed weight of the
encoders is the minimum-weight dominating set problem.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Mapping

from stegnet.errors import SizeLimitError, UnknownVertexError
from stegnet.graph import Graph

__all__ = [
    "EXACT_LIMIT",
    "DominatingSet",
    "action_vector",
    "coverage_holds",
    "is_dominating",
    "mwds_exact",
    "mwds_greedy",
]

EXACT_LIMIT = 30
_TOL = 1e-9


class DominatingMethod(str, Enum):
    EXACT = "exact"
    GREEDY = "greedy"


@dataclass(frozen=True)
class DominatingSet:
    members: frozenset[str]
    total_weight: float
    method: DominatingMethod

    @property
    def sorted_members(self) -> list[str]:
        return sorted(self.members)


def _check_subset(g: Graph, d: Iterable[str]) -> frozenset[str]:
    d = frozenset(d)
    unknown = sorted(x for x in d if x not in g)
    if unknown:
        raise UnknownVertexError(f"unknown vertex {unknown[0]!r}")
    return d


def is_dominating(g: Graph, d: Iterable[str]) -> bool:
    d = _check_subset(g, d)
    return all(v in d or not g.neighbors(v).isdisjoint(d) for v in g.vertices)


def action_vector(g: Graph, d: Iterable[str]) -> dict[str, int]:
    """0/1 action per vertex: 1 marks an encoder (member of ``d``)."""
    d = _check_subset(g, d)
    return {v: int(v in d) for v in g.vertices}


def coverage_holds(g: Graph, action: Mapping[str, int]) -> dict[str, bool]:
    """Per vertex: does the sum of neighbour actions reach ``1 - action[v]``?"""
    missing = [v for v in g.vertices if v not in action]
    if missing:
        raise UnknownVertexError(f"action vector has no entry for {missing[0]!r}")
    return {
        v: sum(action[u] for u in g.neighbors(v)) >= 1 - action[v]
        for v in g.vertices
    }


def _weight_of(g: Graph, members: Iterable[str]) -> float:
    return sum((g.vertex_weight(v) for v in sorted(members)), 0.0)


def mwds_greedy(g: Graph) -> DominatingSet:
    """Repeatedly take the vertex with the lowest weight per newly covered vertex.

    A vertex covers itself and its neighbours. Ratios are compared exactly by
    cross-multiplication; ties go to the smallest id.
    """
    uncovered = set(g.vertices)
    closed = {v: g.neighbors(v) | {v} for v in g.vertices}
    chosen: set[str] = set()
    while uncovered:
        best = None
        best_w, best_n = 0.0, 0
        for v in g.vertices:
            if v in chosen:
                continue
            gain = len(closed[v] & uncovered)
            if gain == 0:
                continue
            w = g.vertex_weight(v)
            if best is None or w * best_n < best_w * gain:
                best, best_w, best_n = v, w, gain
        chosen.add(best)
        uncovered -= closed[best]
    return DominatingSet(frozenset(chosen), _weight_of(g, chosen), DominatingMethod.GREEDY)


def mwds_exact(g: Graph, limit: int = EXACT_LIMIT) -> DominatingSet:
    """Globally minimum-weight dominating set by branch-and-bound.

    Vertices are decided in id order, "include" before "exclude", so the first
    optimum reached is the lexicographically smallest sorted member list
    among equal-weight optima (positive weights rule out the prefix case).
    The lower bound charges each uncovered vertex the cheapest weight-per-
    coverage ratio among its still-undecided closed neighbours.
    """
    n = g.num_vertices
    if n > limit:
        raise SizeLimitError(
            f"exact MWDS limited to {limit} vertices, graph has {n}; use the greedy solver"
        )
    order = list(g.vertices)
    if not order:
        return DominatingSet(frozenset(), 0.0, DominatingMethod.EXACT)
    index = {v: i for i, v in enumerate(order)}
    weight = [g.vertex_weight(v) for v in order]
    closed = [sorted({index[u] for u in g.neighbors(v)} | {i}) for i, v in enumerate(order)]
    last_chance = [max(c) for c in closed]  # after this index, vertex i can no longer be covered

    upper = mwds_greedy(g).total_weight
    best_weight = upper
    best_set: list[int] | None = None

    cover = [0] * n  # number of chosen vertices dominating i
    chosen: list[int] = []

    def lower_bound(i: int) -> float | None:
        total = 0.0
        for u in range(n):
            if cover[u]:
                continue
            cheapest = None
            for c in closed[u]:
                if c < i:
                    continue
                gain = sum(1 for x in closed[c] if not cover[x])
                ratio = weight[c] / gain
                if cheapest is None or ratio < cheapest:
                    cheapest = ratio
            if cheapest is None:
                return None
            total += cheapest
        return total

    def can_improve(value: float) -> bool:
        if best_set is None:
            return value <= best_weight + _TOL
        return value < best_weight - _TOL

    def search(i: int, current: float) -> None:
        nonlocal best_weight, best_set
        if all(cover):
            if can_improve(current):
                best_weight, best_set = current, list(chosen)
            return
        if i == n:
            return
        lb = lower_bound(i)
        if lb is None or not can_improve(current + lb):
            return

        chosen.append(i)
        for x in closed[i]:
            cover[x] += 1
        search(i + 1, current + weight[i])
        for x in closed[i]:
            cover[x] -= 1
        chosen.pop()

        # excluding i is infeasible if some vertex loses its last coverer
        if any(not cover[u] and last_chance[u] == i for u in closed[i]):
            return
        search(i + 1, current)

    search(0, 0.0)
    assert best_set is not None  # the greedy solution is always reachable
    members = frozenset(order[i] for i in best_set)
    return DominatingSet(members, _weight_of(g, members), DominatingMethod.EXACT)
