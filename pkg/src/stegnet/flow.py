"""Directed flow networks built from undirected graphs, max-flow and min-cut.

Each undirected edge ``(u, v, w)`` becomes two independent arcs ``u->v`` and
``v->u``, both with capacity ``w``. Residual capacity of ``u->v`` is
``c(u, v) - f(u, v) + f(v, u)``: pushing along ``u->v`` first cancels any
flow on ``v->u`` and only then loads ``u->v``, so recorded flows always stay
within ``[0, capacity]``.

Traversals visit neighbours in lexicographic id order, so results (flows,
cut sides) are deterministic.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from enum import Enum
from typing import Mapping

from stegnet.errors import GraphError
from stegnet.graph import EdgePair, Graph, edge_key

__all__ = [
    "EPS",
    "Algorithm",
    "Arc",
    "CutResult",
    "FlowNetwork",
    "FlowResult",
    "max_flow",
    "min_cut",
    "residual_reachable",
    "to_flow_network",
]

EPS = 1e-9


class Algorithm(str, Enum):
    AUGMENTING_PATH = "augmenting-path"
    BLOCKING_FLOW = "blocking-flow"


@dataclass
class Arc:
    tail: str
    head: str
    capacity: float
    flow: float = 0.0


@dataclass(frozen=True)
class FlowResult:
    value: float
    flows: Mapping[tuple[str, str], float]
    algorithm: Algorithm


@dataclass(frozen=True)
class CutResult:
    source_side: frozenset[str]
    cut_edges: tuple[EdgePair, ...]
    weight: float


class FlowNetwork:
    """Mutable capacitated digraph with a designated source and sink.

    Owned by one solver at a time; ``max_flow`` overwrites the arc flows.
    """

    def __init__(self, vertices, source: str, sink: str) -> None:
        self.vertices = tuple(sorted(vertices))
        vset = set(self.vertices)
        for x in (source, sink):
            if x not in vset:
                raise GraphError(f"unknown vertex {x!r}")
        if source == sink:
            raise GraphError("source and sink must differ")
        self.source = source
        self.sink = sink
        self.arcs: dict[tuple[str, str], Arc] = {}
        self.edge_weights: dict[EdgePair, float] = {}
        self._adj: dict[str, list[str]] = {v: [] for v in self.vertices}

    def add_undirected(self, u: str, v: str, w: float) -> None:
        key = edge_key(u, v)
        if key in self.edge_weights:
            raise GraphError(f"duplicate edge ({u}, {v})")
        self.edge_weights[key] = w
        self.arcs[(u, v)] = Arc(u, v, w)
        self.arcs[(v, u)] = Arc(v, u, w)
        self._adj[u].append(v)
        self._adj[v].append(u)

    def finalize(self) -> None:
        for nbrs in self._adj.values():
            nbrs.sort()

    def residual_neighbors(self, u: str) -> list[str]:
        return self._adj[u]

    def residual(self, u: str, v: str) -> float:
        fwd = self.arcs.get((u, v))
        back = self.arcs.get((v, u))
        r = 0.0
        if fwd is not None:
            r += fwd.capacity - fwd.flow
        if back is not None:
            r += back.flow
        return r

    def push(self, u: str, v: str, amount: float) -> None:
        back = self.arcs.get((v, u))
        if back is not None and back.flow > 0:
            cancel = min(amount, back.flow)
            back.flow -= cancel
            amount -= cancel
        if amount > 0:
            fwd = self.arcs[(u, v)]
            fwd.flow = min(fwd.capacity, fwd.flow + amount)

    def reset(self) -> None:
        for arc in self.arcs.values():
            arc.flow = 0.0

    def flow_value(self) -> float:
        out = sum(a.flow for a in self.arcs.values() if a.tail == self.source)
        back = sum(a.flow for a in self.arcs.values() if a.head == self.source)
        return out - back

    def net_outflow(self, v: str) -> float:
        out = sum(a.flow for a in self.arcs.values() if a.tail == v)
        inn = sum(a.flow for a in self.arcs.values() if a.head == v)
        return out - inn


def to_flow_network(g: Graph, source: str, sink: str) -> FlowNetwork:
    """Split every edge of ``g`` into two opposite arcs of equal capacity; flows start at 0."""
    g.require(source, sink)
    net = FlowNetwork(g.vertices, source, sink)
    for u, v, w in g.edges():
        net.add_undirected(u, v, w)
    net.finalize()
    return net


def _bfs_levels(net: FlowNetwork) -> dict[str, int]:
    level = {net.source: 0}
    queue = deque([net.source])
    while queue:
        u = queue.popleft()
        for v in net.residual_neighbors(u):
            if v not in level and net.residual(u, v) > EPS:
                level[v] = level[u] + 1
                queue.append(v)
    return level


def _augmenting_path(net: FlowNetwork) -> float:
    """Edmonds-Karp: repeatedly saturate the shortest (fewest arcs) residual path."""
    total = 0.0
    while True:
        parent: dict[str, str | None] = {net.source: None}
        queue = deque([net.source])
        while queue and net.sink not in parent:
            u = queue.popleft()
            for v in net.residual_neighbors(u):
                if v not in parent and net.residual(u, v) > EPS:
                    parent[v] = u
                    queue.append(v)
        if net.sink not in parent:
            return total
        path = []
        v = net.sink
        while parent[v] is not None:
            u = parent[v]
            path.append((u, v))
            v = u
        delta = min(net.residual(u, v) for u, v in path)
        for u, v in path:
            net.push(u, v, delta)
        total += delta


def _blocking_flow(net: FlowNetwork) -> float:
    """Dinic: per phase, find a blocking flow in the BFS level graph."""
    total = 0.0
    while True:
        level = _bfs_levels(net)
        if net.sink not in level:
            return total
        ptr = {v: 0 for v in level}
        dead: set[str] = set()
        stack = [net.source]
        while stack:
            u = stack[-1]
            if u == net.sink:
                arcs = list(zip(stack, stack[1:]))
                delta = min(net.residual(a, b) for a, b in arcs)
                for a, b in arcs:
                    net.push(a, b, delta)
                total += delta
                stack = [net.source]
                continue
            nbrs = net.residual_neighbors(u)
            advanced = False
            while ptr[u] < len(nbrs):
                v = nbrs[ptr[u]]
                if (
                    level.get(v) == level[u] + 1
                    and v not in dead
                    and net.residual(u, v) > EPS
                ):
                    stack.append(v)
                    advanced = True
                    break
                ptr[u] += 1
            if not advanced:
                dead.add(u)
                stack.pop()
                if stack:
                    ptr[stack[-1]] += 1


def max_flow(
    net: FlowNetwork, algorithm: Algorithm | str = Algorithm.BLOCKING_FLOW
) -> FlowResult:
    """Compute a maximum source-sink flow, overwriting any flow already on ``net``."""
    algorithm = Algorithm(algorithm)
    net.reset()
    if algorithm is Algorithm.AUGMENTING_PATH:
        value = _augmenting_path(net)
    else:
        value = _blocking_flow(net)
    flows = {key: arc.flow for key, arc in sorted(net.arcs.items())}
    return FlowResult(value=value, flows=flows, algorithm=algorithm)


def residual_reachable(net: FlowNetwork) -> frozenset[str]:
    """Vertices reachable from the source through arcs with residual capacity above EPS.

    Depth-first, children in lexicographic order. On a network carrying a
    maximum flow this is the source side of the source-minimal minimum cut.
    """
    seen = {net.source}
    stack = [(net.source, iter(net.residual_neighbors(net.source)))]
    while stack:
        u, children = stack[-1]
        for v in children:
            if v not in seen and net.residual(u, v) > EPS:
                seen.add(v)
                stack.append((v, iter(net.residual_neighbors(v))))
                break
        else:
            stack.pop()
    return frozenset(seen)


def cut_boundary(
    edge_weights: Mapping[EdgePair, float], side: frozenset[str] | set[str]
) -> tuple[tuple[EdgePair, ...], float]:
    """Edges with exactly one endpoint in ``side`` and their total weight."""
    crossing = tuple(sorted(k for k in edge_weights if (k[0] in side) != (k[1] in side)))
    return crossing, sum((edge_weights[k] for k in crossing), 0.0)


def min_cut(
    net: FlowNetwork, algorithm: Algorithm | str = Algorithm.BLOCKING_FLOW
) -> CutResult:
    """Max-flow followed by residual reachability; returns the source-minimal minimum cut."""
    max_flow(net, algorithm)
    side = residual_reachable(net)
    edges, weight = cut_boundary(net.edge_weights, side)
    return CutResult(source_side=side, cut_edges=edges, weight=weight)
