"""Brute-force reference answers for small instances.

Nothing here calls the solvers; only the TerminalSpec value type is shared.
Each function enumerates straight from the definition and returns a weight
only. Budgets are checked before any exponential loop starts.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterable, Iterator

from stegnet.attack import TerminalSpec
from stegnet.errors import GraphError, SizeLimitError, TerminalSpecError
from stegnet.graph import Graph

__all__ = [
    "CUT_BUDGET",
    "MWDS_BUDGET",
    "STEINER_BUDGET",
    "OracleBudget",
    "dominates",
    "oracle_min_cut",
    "oracle_mst_weight",
    "oracle_mwds",
    "oracle_shortest_distance",
    "oracle_steiner",
    "separates",
    "simple_paths",
]


@dataclass(frozen=True)
class OracleBudget:
    max_vertices: int
    max_edges: int | None = None

    def check(self, g: Graph, what: str) -> None:
        if g.num_vertices > self.max_vertices:
            raise SizeLimitError(
                f"{what} oracle budget is {self.max_vertices} vertices, graph has {g.num_vertices}"
            )
        if self.max_edges is not None and g.num_edges > self.max_edges:
            raise SizeLimitError(
                f"{what} oracle budget is {self.max_edges} edges, graph has {g.num_edges}"
            )


CUT_BUDGET = OracleBudget(max_vertices=12)
MWDS_BUDGET = OracleBudget(max_vertices=16)
STEINER_BUDGET = OracleBudget(max_vertices=9, max_edges=14)


def oracle_min_cut(g: Graph, spec: TerminalSpec, budget: OracleBudget = CUT_BUDGET) -> float:
    """Cheapest crossing weight over all bipartitions with S on one side and T on the other."""
    s_side, t_side = set(spec.encoders), set(spec.decoders)
    if not s_side or not t_side or s_side & t_side:
        raise TerminalSpecError("need non-empty, disjoint encoder and decoder sets")
    g.require(*s_side, *t_side)
    budget.check(g, "min-cut")
    free = [v for v in g.vertices if v not in s_side and v not in t_side]
    edges = g.edges()
    best = math.inf
    for bits in itertools.product((False, True), repeat=len(free)):
        side = s_side | {v for v, on in zip(free, bits) if on}
        crossing = sum((w for u, v, w in edges if (u in side) != (v in side)), 0.0)
        best = min(best, crossing)
    return best


def oracle_mwds(g: Graph, budget: OracleBudget = MWDS_BUDGET) -> float:
    """Minimum total vertex weight over all subsets that dominate ``g``."""
    budget.check(g, "MWDS")
    vertices = g.vertices
    adjacent = {v: set(g.neighbors(v)) for v in vertices}
    best = math.inf
    for bits in itertools.product((False, True), repeat=len(vertices)):
        chosen = {v for v, on in zip(vertices, bits) if on}
        if all(v in chosen or adjacent[v] & chosen for v in vertices):
            best = min(best, sum((g.vertex_weight(v) for v in chosen), 0.0))
    return best


def _connects(terminals: list[str], edges: Iterable[tuple[str, str, float]]) -> bool:
    # plain flood fill over the chosen edges
    adjacency: dict[str, list[str]] = {}
    for u, v, _ in edges:
        adjacency.setdefault(u, []).append(v)
        adjacency.setdefault(v, []).append(u)
    seen = {terminals[0]}
    todo = [terminals[0]]
    while todo:
        x = todo.pop()
        for y in adjacency.get(x, ()):
            if y not in seen:
                seen.add(y)
                todo.append(y)
    return all(t in seen for t in terminals)


def oracle_steiner(
    g: Graph, terminals: Iterable[str], budget: OracleBudget = STEINER_BUDGET
) -> float:
    """Minimum total weight over all edge subsets whose subgraph joins every terminal."""
    terms = sorted(set(terminals))
    if not terms:
        raise GraphError("terminal set must be non-empty")
    g.require(*terms)
    budget.check(g, "Steiner")
    if len(terms) == 1:
        return 0.0
    edges = g.edges()
    best = math.inf
    for bits in itertools.product((False, True), repeat=len(edges)):
        chosen = [e for e, on in zip(edges, bits) if on]
        weight = sum((w for _, _, w in chosen), 0.0)
        if weight < best and _connects(terms, chosen):
            best = weight
    return best


def oracle_shortest_distance(g: Graph, s: str, t: str) -> float:
    """Floyd-Warshall distance; ``inf`` when unreachable."""
    g.require(s, t)
    vs = g.vertices
    dist = {(a, b): (0.0 if a == b else math.inf) for a in vs for b in vs}
    for u, v, w in g.edges():
        dist[u, v] = min(dist[u, v], w)
        dist[v, u] = min(dist[v, u], w)
    for k in vs:
        for a in vs:
            for b in vs:
                through = dist[a, k] + dist[k, b]
                if through < dist[a, b]:
                    dist[a, b] = through
    return dist[s, t]


def oracle_mst_weight(g: Graph) -> float:
    """Prim's algorithm by linear scans; ``inf`` for a disconnected graph."""
    vs = list(g.vertices)
    if not vs:
        return 0.0
    in_tree = {vs[0]}
    total = 0.0
    while len(in_tree) < len(vs):
        best = None
        for u, v, w in g.edges():
            if (u in in_tree) != (v in in_tree) and (best is None or w < best[2]):
                best = (u, v, w)
        if best is None:
            return math.inf
        in_tree.update(best[:2])
        total += best[2]
    return total


def simple_paths(g: Graph, s: str, t: str) -> Iterator[list[str]]:
    """Every simple path from ``s`` to ``t`` as a vertex list (depth-first)."""
    g.require(s, t)

    def extend(path: list[str]) -> Iterator[list[str]]:
        tip = path[-1]
        if tip == t:
            yield list(path)
            return
        for nxt in g.sorted_neighbors(tip):
            if nxt not in path:
                path.append(nxt)
                yield from extend(path)
                path.pop()

    yield from extend([s])


def dominates(g: Graph, members: Iterable[str]) -> bool:
    """Every vertex is a member or has a member neighbour."""
    chosen = set(members)
    g.require(*chosen)
    return all(v in chosen or not chosen.isdisjoint(g.neighbors(v)) for v in g.vertices)


def separates(g: Graph, spec: TerminalSpec, removed: Iterable[tuple[str, str]]) -> bool:
    """No encoder reaches a decoder once ``removed`` edges are gone."""
    gone = {frozenset(e) for e in removed}
    reach = set(spec.encoders)
    todo = list(reach)
    while todo:
        x = todo.pop()
        for y in g.neighbors(x):
            if y not in reach and frozenset((x, y)) not in gone:
                reach.add(y)
                todo.append(y)
    return reach.isdisjoint(spec.decoders)
