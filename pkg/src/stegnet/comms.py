"""Low-risk communication planning under an additive edge-risk model.

Connecting a sender to its receivers with minimum summed risk is a Steiner
tree problem: two terminals reduce to a shortest path, all vertices to a
minimum spanning tree, and the general case uses the metric-closure
2-approximation. Success-probability graphs are mapped to additive ones by
``w = -ln p``, which turns "maximise the product" into "minimise the sum".
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Mapping

from stegnet.errors import GraphError, NoPathError
from stegnet.graph import EdgePair, Graph, component_of, edge_key

__all__ = [
    "SteinerPlan",
    "Variant",
    "comms_plan",
    "dijkstra",
    "mst_plan",
    "prob_to_additive",
    "shortest_path_plan",
    "steiner_plan",
]


class Variant(str, Enum):
    SHORTEST_PATH = "shortest-path"
    MST = "mst"
    METRIC_CLOSURE = "metric-closure-2approx"
    PER_SENDER_UNION = "per-sender-union"


@dataclass(frozen=True)
class SteinerPlan:
    edges: tuple[EdgePair, ...]
    total_weight: float
    terminals: frozenset[str]
    variant: Variant


def _plan(g: Graph, edges: Iterable[tuple[str, str]], terminals, variant: Variant) -> SteinerPlan:
    keys = sorted({edge_key(u, v) for u, v in edges})
    total = sum((g.edge_weight(u, v) for u, v in keys), 0.0)
    return SteinerPlan(tuple(keys), total, frozenset(terminals), variant)


class ProbabilityError(GraphError):
    """An edge probability lies outside (0, 1]."""


def prob_to_additive(pg: Graph) -> Graph:
    """Replace every success probability ``p`` in (0, 1] by the risk ``-ln p``."""
    for u, v, p in pg.edges():
        if not 0.0 < p <= 1.0:
            raise ProbabilityError(f"edge ({u}, {v}) probability {p!r} outside (0, 1]")
    return pg.with_edge_weights(lambda p: 0.0 - math.log(p))


def dijkstra(g: Graph, source: str) -> tuple[dict[str, float], dict[str, str]]:
    """Distances and shortest-path-tree parents from ``source``.

    The heap is ordered by (distance, id) and a parent only changes on a
    strictly shorter distance, so ties resolve toward the vertex settled first.
    """
    g.require(source)
    dist = {source: 0.0}
    parent: dict[str, str] = {}
    done: set[str] = set()
    heap = [(0.0, source)]
    while heap:
        d, u = heapq.heappop(heap)
        if u in done:
            continue
        done.add(u)
        for v, w in sorted(g.incident(u).items()):
            nd = d + w
            if v not in done and (v not in dist or nd < dist[v]):
                dist[v] = nd
                parent[v] = u
                heapq.heappush(heap, (nd, v))
    return dist, parent


def _tree_path(parent: Mapping[str, str], source: str, target: str) -> list[EdgePair]:
    path = []
    v = target
    while v != source:
        u = parent[v]
        path.append(edge_key(u, v))
        v = u
    return path


def shortest_path_plan(g: Graph, s: str, t: str) -> SteinerPlan:
    g.require(s, t)
    dist, parent = dijkstra(g, s)
    if t not in dist:
        raise NoPathError(f"no path between {s!r} and {t!r}")
    return _plan(g, _tree_path(parent, s, t), {s, t}, Variant.SHORTEST_PATH)


class _DisjointSet:
    def __init__(self, items: Iterable[str]) -> None:
        self.parent = {x: x for x in items}

    def find(self, x: str) -> str:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a: str, b: str) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        self.parent[max(ra, rb)] = min(ra, rb)
        return True


def _kruskal(vertices: Iterable[str], edges: Iterable[tuple[str, str, float]]) -> list[EdgePair]:
    ds = _DisjointSet(vertices)
    ordered = sorted((w, *edge_key(u, v)) for u, v, w in edges)
    return [(u, v) for w, u, v in ordered if ds.union(u, v)]


def mst_plan(g: Graph) -> SteinerPlan:
    """Kruskal over edges sorted by (weight, u, v)."""
    tree = _kruskal(g.vertices, g.edges())
    if len(tree) != max(g.num_vertices - 1, 0):
        raise NoPathError("graph is disconnected; no spanning tree exists")
    return _plan(g, tree, g.vertices, Variant.MST)


def _prune_leaves(edges: set[EdgePair], terminals: frozenset[str]) -> set[EdgePair]:
    edges = set(edges)
    while True:
        degree: dict[str, int] = {}
        for u, v in edges:
            degree[u] = degree.get(u, 0) + 1
            degree[v] = degree.get(v, 0) + 1
        leaves = {x for x, d in degree.items() if d == 1 and x not in terminals}
        if not leaves:
            return edges
        edges = {e for e in edges if e[0] not in leaves and e[1] not in leaves}


def _require_connected(g: Graph, terminals: frozenset[str]) -> None:
    first = min(terminals)
    reach = component_of(g, [first])
    stranded = sorted(terminals - reach)
    if stranded:
        raise NoPathError(
            f"terminals not mutually reachable: {first!r} cannot reach {', '.join(stranded)}"
        )


def steiner_plan(g: Graph, terminals: Iterable[str]) -> SteinerPlan:
    """Edge set connecting all ``terminals``, within twice the optimum weight.

    One terminal gives an empty plan, two a shortest path, all vertices an
    MST. Otherwise: MST of the terminals' metric closure, each closure edge
    expanded into its shortest path, an MST of the resulting subgraph to drop
    cycles, then non-terminal leaves pruned.
    """
    terms = frozenset(terminals)
    if not terms:
        raise GraphError("terminal set must be non-empty")
    g.require(*sorted(terms))
    _require_connected(g, terms)
    if len(terms) == 1:
        return SteinerPlan((), 0.0, terms, Variant.SHORTEST_PATH)
    if len(terms) == 2:
        s, t = sorted(terms)
        return shortest_path_plan(g, s, t)
    if terms == set(g.vertices):
        return mst_plan(g)

    ordered = sorted(terms)
    trees = {s: dijkstra(g, s) for s in ordered}
    closure = [
        (a, b, trees[a][0][b]) for i, a in enumerate(ordered) for b in ordered[i + 1 :]
    ]
    expanded: set[EdgePair] = set()
    for a, b in _kruskal(ordered, closure):
        expanded.update(_tree_path(trees[a][1], a, b))

    touched = sorted({x for e in expanded for x in e})
    sub = [(u, v, g.edge_weight(u, v)) for u, v in expanded]
    tree = _prune_leaves(set(_kruskal(touched, sub)), terms)
    return _plan(g, tree, terms, Variant.METRIC_CLOSURE)


def comms_plan(
    g: Graph, senders: Iterable[str], decoder_map: Mapping[str, Iterable[str]]
) -> SteinerPlan:
    """Union of per-sender Steiner plans connecting each sender to its own decoders.

    Feasible for the group objective but not necessarily optimal; shared
    edges are counted once.
    """
    senders = sorted(set(senders))
    extra = sorted(set(decoder_map) - set(senders))
    if extra:
        raise GraphError(f"decoder map names non-senders: {', '.join(extra)}")
    groups = {s: frozenset(decoder_map.get(s, ())) for s in senders}
    if not any(groups.values()):
        raise GraphError("at least one sender needs a decoder")

    plans = [steiner_plan(g, {s} | groups[s]) for s in senders if groups[s]]
    if len(plans) == 1:
        return plans[0]
    terminals = set(senders).union(*groups.values())
    edges = {e for p in plans for e in p.edges}
    return _plan(g, edges, terminals, Variant.PER_SENDER_UNION)
