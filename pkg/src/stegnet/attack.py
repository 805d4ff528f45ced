"""Minimum-cost edge removal that separates an encoder set from a decoder set.

Two reductions turn the multi-terminal problem into a single source/sink
min-cut:

* super-terminal: add a super-source joined to every encoder and a
  super-sink joined to every decoder, with a weight larger than the whole
  graph so those artificial edges never belong to a minimum cut;
* contraction: merge all encoders into one vertex and all decoders into
  another, summing the weights of edges that become parallel and dropping
  edges internal to either set.

Both produce the same cost; cut edges are mapped back to original edges.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Mapping

from stegnet.errors import GraphError, TerminalSpecError
from stegnet.flow import Algorithm, min_cut, to_flow_network
from stegnet.graph import EdgePair, Graph, component_of, edge_key, total_edge_weight

__all__ = [
    "ContractionMap",
    "CutPlan",
    "Method",
    "TerminalSpec",
    "augment_super",
    "contract",
    "plan_cut",
    "verify_disconnection",
]


class Method(str, Enum):
    SUPER_TERMINAL = "super-terminal"
    CONTRACTION = "contraction"


@dataclass(frozen=True)
class TerminalSpec:
    encoders: frozenset[str]
    decoders: frozenset[str]

    def __init__(self, encoders: Iterable[str], decoders: Iterable[str]) -> None:
        object.__setattr__(self, "encoders", frozenset(encoders))
        object.__setattr__(self, "decoders", frozenset(decoders))

    def validate(self, g: Graph) -> None:
        if not self.encoders:
            raise TerminalSpecError("encoder set S must be non-empty")
        if not self.decoders:
            raise TerminalSpecError("decoder set T must be non-empty")
        overlap = self.encoders & self.decoders
        if overlap:
            raise TerminalSpecError(
                f"encoder and decoder sets must be disjoint (S∩T=∅); shared: {', '.join(sorted(overlap))}"
            )
        missing = sorted((self.encoders | self.decoders) - set(g.vertices))
        if missing:
            raise TerminalSpecError(f"unknown terminal vertices: {', '.join(missing)}")


@dataclass(frozen=True)
class CutPlan:
    removed_edges: tuple[EdgePair, ...]
    total_cost: float
    method: Method


@dataclass(frozen=True)
class ContractionMap:
    """Contracted edge -> the original edges merged into it."""

    entries: Mapping[EdgePair, tuple[EdgePair, ...]]

    def expand(self, pairs: Iterable[EdgePair]) -> list[EdgePair]:
        out: list[EdgePair] = []
        for p in pairs:
            out.extend(self.entries[edge_key(*p)])
        return sorted(out)


def _fresh_id(base: str, taken: set[str]) -> str:
    if base not in taken:
        return base
    i = 1
    while f"{base}_{i}" in taken:
        i += 1
    return f"{base}_{i}"


def artificial_ids(g: Graph) -> tuple[str, str]:
    """Ids for the super-source and super-sink that collide with no vertex of ``g``."""
    taken = set(g.vertices)
    vs = _fresh_id("v_s", taken)
    taken.add(vs)
    return vs, _fresh_id("v_t", taken)


def augment_super(g: Graph, spec: TerminalSpec) -> tuple[Graph, str, str]:
    """Attach a super-source to every encoder and a super-sink to every decoder.

    The new edges weigh ``total_edge_weight(g) + 1``, which exceeds any cut
    made of original edges only.
    """
    spec.validate(g)
    vs, vt = artificial_ids(g)
    big = total_edge_weight(g) + 1.0
    vertices = g.vertex_weights()
    vertices[vs] = 1.0
    vertices[vt] = 1.0
    edges = g.edges()
    edges += [(vs, s, big) for s in sorted(spec.encoders)]
    edges += [(t, vt, big) for t in sorted(spec.decoders)]
    return Graph(vertices, edges), vs, vt


def contract(g: Graph, spec: TerminalSpec) -> tuple[Graph, str, str, ContractionMap]:
    """Collapse S into one vertex and T into another, merging parallel edges by weight sum.

    Vertices outside S ∪ T are kept even when isolated, and both contracted
    vertices are always present, so the result is a valid flow instance.
    """
    spec.validate(g)
    vs, vt = artificial_ids(g)

    def image(x: str) -> str:
        if x in spec.encoders:
            return vs
        if x in spec.decoders:
            return vt
        return x

    weights: dict[EdgePair, float] = defaultdict(float)
    sources: dict[EdgePair, list[EdgePair]] = defaultdict(list)
    for u, v, w in g.edges():
        a, b = image(u), image(v)
        if a == b:
            continue  # internal to S or to T
        key = edge_key(a, b)
        weights[key] += w
        sources[key].append((u, v))

    vertices = {v: g.vertex_weight(v) for v in g.vertices if image(v) == v}
    vertices[vs] = 1.0
    vertices[vt] = 1.0
    contracted = Graph(vertices, [(a, b, w) for (a, b), w in weights.items()])
    cmap = ContractionMap({k: tuple(sorted(v)) for k, v in sorted(sources.items())})
    return contracted, vs, vt, cmap


def plan_cut(
    g: Graph,
    spec: TerminalSpec,
    method: Method | str = Method.CONTRACTION,
    algorithm: Algorithm | str = Algorithm.BLOCKING_FLOW,
) -> CutPlan:
    """Cheapest set of original edges whose removal separates every encoder from every decoder."""
    method = Method(method)
    if method is Method.SUPER_TERMINAL:
        reduced, vs, vt = augment_super(g, spec)
        cut = min_cut(to_flow_network(reduced, vs, vt), algorithm)
        for u, v in cut.cut_edges:
            if {u, v} & {vs, vt}:
                raise RuntimeError(
                    f"artificial edge ({u}, {v}) in minimum cut; super-terminal weight rule broken"
                )
        removed = sorted(cut.cut_edges)
    else:
        reduced, vs, vt, cmap = contract(g, spec)
        cut = min_cut(to_flow_network(reduced, vs, vt), algorithm)
        removed = cmap.expand(cut.cut_edges)
    cost = sum((g.edge_weight(u, v) for u, v in removed), 0.0)
    return CutPlan(removed_edges=tuple(removed), total_cost=cost, method=method)


def verify_disconnection(
    g: Graph, spec: TerminalSpec, removed: Iterable[tuple[str, str]]
) -> bool:
    """True iff no encoder can reach any decoder once ``removed`` is deleted from ``g``."""
    spec.validate(g)
    removed = list(removed)
    for u, v in removed:
        if not g.has_edge(u, v):
            raise GraphError(f"edge ({u}, {v}) is not in the graph")
    reach = component_of(g.without_edges(removed), spec.encoders)
    return not (reach & spec.decoders)
