"""Undirected, vertex- and edge-weighted graph model plus the SGN text format.

SGN is a line-oriented UTF-8 format::

    # comment
    v <id> [weight]         vertex, weight defaults to 1
    e <id1> <id2> <weight>  undirected edge

Declarations may appear in any order; every edge endpoint must be declared
somewhere in the document. Vertex ids are non-empty ``[A-Za-z0-9_]`` tokens
and are compared as plain Python strings wherever an ordering is needed.
"""

from __future__ import annotations

import math
import re
from collections import deque
from typing import Iterable, Iterator, Mapping

from stegnet._rng import SplitMix64
from stegnet.errors import GraphError, ParseError, UnknownVertexError

__all__ = [
    "Graph",
    "edge_key",
    "format_weight",
    "has_path",
    "parse_graph",
    "random_graph",
    "serialize_graph",
    "total_edge_weight",
]

_ID_RE = re.compile(r"[A-Za-z0-9_]+")
_NUMBER_RE = re.compile(r"[+-]?(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?")

EdgePair = tuple[str, str]
WeightedEdge = tuple[str, str, float]


def edge_key(u: str, v: str) -> EdgePair:
    """Canonical (smaller, larger) form of an undirected vertex pair."""
    return (u, v) if u <= v else (v, u)


def format_weight(w: float) -> str:
    """Shortest text that parses back to exactly ``w``; integral values drop the '.0'."""
    w = float(w)
    if w.is_integer() and abs(w) < 2**53:
        return str(int(w))
    return repr(w)


def _check_id(vid: object) -> str:
    if not isinstance(vid, str) or not _ID_RE.fullmatch(vid):
        raise GraphError(f"invalid vertex id {vid!r}")
    return vid


def _check_weight(w: object, what: str, *, allow_zero: bool = False) -> float:
    try:
        value = float(w)  # type: ignore[arg-type]
    except (TypeError, ValueError):
        raise GraphError(f"{what} weight {w!r} is not a number") from None
    if not math.isfinite(value):
        raise GraphError(f"{what} weight {w!r} is not finite")
    if value < 0 or (value == 0 and not allow_zero):
        raise GraphError(f"{what} weight {w!r} must be positive")
    return value + 0.0  # folds -0.0


class Graph:
    """Immutable undirected graph with positive vertex weights and non-negative edge weights.

    ``vertices`` is either a mapping id -> weight or an iterable of ids and
    ``(id, weight)`` pairs; bare ids get weight 1.0. ``edges`` holds
    ``(u, v, w)`` triples. Zero edge weights are accepted so that
    probability-derived graphs (where ``p = 1`` maps to 0) stay representable;
    the SGN parser itself only admits strictly positive weights.
    """

    __slots__ = ("_vweight", "_adj", "_nedges")

    def __init__(
        self,
        vertices: Mapping[str, float] | Iterable[str | tuple[str, float]] = (),
        edges: Iterable[tuple[str, str, float]] = (),
    ) -> None:
        vweight: dict[str, float] = {}
        items = vertices.items() if isinstance(vertices, Mapping) else vertices
        for item in items:
            if isinstance(item, tuple):
                vid, w = item
            else:
                vid, w = item, 1.0
            vid = _check_id(vid)
            if vid in vweight:
                raise GraphError(f"duplicate vertex {vid!r}")
            vweight[vid] = _check_weight(w, f"vertex {vid!r}")

        adj: dict[str, dict[str, float]] = {v: {} for v in vweight}
        count = 0
        for u, v, w in edges:
            for x in (u, v):
                if x not in adj:
                    raise GraphError(f"edge ({u}, {v}) references undeclared vertex {x!r}")
            if u == v:
                raise GraphError(f"self-loop on {u!r}")
            if v in adj[u]:
                raise GraphError(f"duplicate edge ({u}, {v})")
            weight = _check_weight(w, f"edge ({u}, {v})", allow_zero=True)
            adj[u][v] = weight
            adj[v][u] = weight
            count += 1

        self._vweight = vweight
        self._adj = adj
        self._nedges = count

    # -- read-only views ------------------------------------------------------

    @property
    def vertices(self) -> tuple[str, ...]:
        return tuple(sorted(self._vweight))

    @property
    def num_vertices(self) -> int:
        return len(self._vweight)

    @property
    def num_edges(self) -> int:
        return self._nedges

    def __len__(self) -> int:
        return len(self._vweight)

    def __contains__(self, vid: object) -> bool:
        return vid in self._vweight

    def __iter__(self) -> Iterator[str]:
        return iter(self.vertices)

    def require(self, *vids: str) -> None:
        """Raise UnknownVertexError for the first id that is not a vertex."""
        for vid in vids:
            if vid not in self._vweight:
                raise UnknownVertexError(f"unknown vertex {vid!r}")

    def vertex_weight(self, vid: str) -> float:
        self.require(vid)
        return self._vweight[vid]

    def vertex_weights(self) -> dict[str, float]:
        return dict(self._vweight)

    def edges(self) -> list[WeightedEdge]:
        """All edges as ``(u, v, w)`` with ``u < v``, sorted by ``(u, v)``."""
        out = [
            (u, v, w)
            for u, nbrs in self._adj.items()
            for v, w in nbrs.items()
            if u < v
        ]
        out.sort(key=lambda e: (e[0], e[1]))
        return out

    def has_edge(self, u: str, v: str) -> bool:
        return u in self._adj and v in self._adj[u]

    def edge_weight(self, u: str, v: str) -> float:
        self.require(u, v)
        try:
            return self._adj[u][v]
        except KeyError:
            raise GraphError(f"no edge ({u}, {v})") from None

    def neighbors(self, vid: str) -> frozenset[str]:
        """N(v): every u with an edge (u, v). Never contains ``vid``."""
        self.require(vid)
        return frozenset(self._adj[vid])

    def sorted_neighbors(self, vid: str) -> list[str]:
        self.require(vid)
        return sorted(self._adj[vid])

    def incident(self, vid: str) -> dict[str, float]:
        """Neighbor -> edge weight, as a fresh dict."""
        self.require(vid)
        return dict(self._adj[vid])

    # -- derived graphs -------------------------------------------------------

    def without_edges(self, pairs: Iterable[tuple[str, str]]) -> Graph:
        drop = set()
        for u, v in pairs:
            if not self.has_edge(u, v):
                raise GraphError(f"no edge ({u}, {v})")
            drop.add(edge_key(u, v))
        kept = [e for e in self.edges() if (e[0], e[1]) not in drop]
        return Graph(self._vweight, kept)

    def edge_subgraph(self, pairs: Iterable[tuple[str, str]]) -> Graph:
        """Same vertex set, keeping only the listed edges."""
        keep = set()
        for u, v in pairs:
            if not self.has_edge(u, v):
                raise GraphError(f"no edge ({u}, {v})")
            keep.add(edge_key(u, v))
        return Graph(self._vweight, [e for e in self.edges() if (e[0], e[1]) in keep])

    def with_edge_weights(self, fn) -> Graph:
        return Graph(self._vweight, [(u, v, fn(w)) for u, v, w in self.edges()])

    # -- value semantics ------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._vweight == other._vweight and self._adj == other._adj

    def __hash__(self) -> int:
        return hash((tuple(sorted(self._vweight.items())), tuple(self.edges())))

    def __repr__(self) -> str:
        return f"Graph(|V|={self.num_vertices}, |E|={self.num_edges})"


def total_edge_weight(g: Graph) -> float:
    """Sum of all edge weights (0 for an edgeless graph), in canonical edge order."""
    return math.fsum(w for _, _, w in g.edges())


def has_path(g: Graph, u: str, v: str) -> bool:
    """True iff ``v`` is reachable from ``u``; a vertex always reaches itself."""
    g.require(u, v)
    if u == v:
        return True
    seen = {u}
    queue = deque([u])
    while queue:
        x = queue.popleft()
        for y in g.sorted_neighbors(x):
            if y == v:
                return True
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return False


def component_of(g: Graph, sources: Iterable[str]) -> set[str]:
    """Every vertex reachable from any of ``sources``."""
    start = list(sources)
    g.require(*start)
    seen = set(start)
    queue = deque(sorted(seen))
    while queue:
        x = queue.popleft()
        for y in g.sorted_neighbors(x):
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return seen


# -- SGN text format ----------------------------------------------------------


def _parse_number(token: str, lineno: int, what: str) -> float:
    if not _NUMBER_RE.fullmatch(token):
        raise ParseError(f"{what} weight {token!r} is not a finite number", lineno)
    value = float(token)
    if not math.isfinite(value):
        raise ParseError(f"{what} weight {token!r} is not finite", lineno)
    if value <= 0:
        raise ParseError(f"{what} weight {token!r} must be positive", lineno)
    return value + 0.0


def parse_graph(text: str | bytes, *, auto_declare: bool = False) -> Graph:
    """Parse an SGN document.

    With ``auto_declare`` set, edge endpoints that never get a ``v`` line are
    declared implicitly with weight 1. Every error carries the offending
    line number.
    """
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise GraphError(f"document is not valid UTF-8: {exc}") from None

    vertices: dict[str, float] = {}
    edges: dict[EdgePair, tuple[str, str, float, int]] = {}
    for lineno, raw in enumerate(text.split("\n"), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        kind = tokens[0]
        if kind == "v":
            if len(tokens) not in (2, 3):
                raise ParseError("expected 'v <id> [weight]'", lineno)
            vid = tokens[1]
            if not _ID_RE.fullmatch(vid):
                raise ParseError(f"invalid vertex id {vid!r}", lineno)
            if vid in vertices:
                raise ParseError(f"duplicate vertex {vid!r}", lineno)
            weight = _parse_number(tokens[2], lineno, "vertex") if len(tokens) == 3 else 1.0
            vertices[vid] = weight
        elif kind == "e":
            if len(tokens) != 4:
                raise ParseError("expected 'e <id1> <id2> <weight>'", lineno)
            u, v = tokens[1], tokens[2]
            for x in (u, v):
                if not _ID_RE.fullmatch(x):
                    raise ParseError(f"invalid vertex id {x!r}", lineno)
            if u == v:
                raise ParseError(f"self-loop on {u!r}", lineno)
            key = edge_key(u, v)
            if key in edges:
                raise ParseError(f"duplicate edge ({u}, {v})", lineno)
            edges[key] = (u, v, _parse_number(tokens[3], lineno, "edge"), lineno)
        else:
            raise ParseError(f"unknown record type {kind!r}", lineno)

    for u, v, _, lineno in edges.values():
        for x in (u, v):
            if x not in vertices:
                if not auto_declare:
                    raise ParseError(f"edge references undeclared vertex {x!r}", lineno)
                vertices[x] = 1.0
    return Graph(vertices, [(u, v, w) for u, v, w, _ in edges.values()])


def serialize_graph(g: Graph) -> str:
    """Canonical SGN: vertices sorted by id, then edges sorted by (min, max) endpoint."""
    lines = [f"v {v} {format_weight(g.vertex_weight(v))}" for v in g.vertices]
    lines += [f"e {u} {v} {format_weight(w)}" for u, v, w in g.edges()]
    return "".join(line + "\n" for line in lines)


# -- deterministic instances ----------------------------------------------------


def random_graph(
    n: int,
    edge_probability: float,
    weight_range: tuple[float, float],
    seed: int,
    *,
    integer_weights: bool = False,
    vertex_weight_range: tuple[float, float] | None = None,
) -> Graph:
    """Seeded Erdős–Rényi instance on vertices ``v0 .. v{n-1}``.

    The stream is SplitMix64 seeded with ``seed mod 2**64``. For each pair
    ``i < j`` (outer loop ``i``, numeric order) one uniform draw ``u`` decides
    the edge (present iff ``u < p``); a present edge consumes a second draw
    for its weight. Real weights are ``lo + (hi - lo) * draw``; integer
    weights are ``lo + floor(draw * (hi - lo + 1))``. When
    ``vertex_weight_range`` is given, vertex weights are drawn first, one per
    vertex in numeric order, with the same rule.
    """
    if not isinstance(n, int) or n < 1:
        raise GraphError(f"n must be a positive integer, got {n!r}")
    if not 0.0 <= edge_probability <= 1.0:
        raise GraphError(f"edge probability must lie in [0, 1], got {edge_probability!r}")
    ranges = [weight_range] + ([vertex_weight_range] if vertex_weight_range else [])
    for lo, hi in ranges:
        if not (math.isfinite(lo) and math.isfinite(hi) and 0 < lo <= hi):
            raise GraphError(f"weight range must satisfy 0 < lo <= hi, got ({lo}, {hi})")
        if integer_weights and not (float(lo).is_integer() and float(hi).is_integer()):
            raise GraphError("integer weights need integral range bounds")

    rng = SplitMix64(seed)

    def draw_weight(lo: float, hi: float) -> float:
        x = rng.random()
        if integer_weights:
            return float(int(lo) + math.floor(x * (int(hi) - int(lo) + 1)))
        return lo + (hi - lo) * x

    names = [f"v{i}" for i in range(n)]
    if vertex_weight_range:
        vertices = [(name, draw_weight(*vertex_weight_range)) for name in names]
    else:
        vertices = [(name, 1.0) for name in names]
    edges = []
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < edge_probability:
                edges.append((names[i], names[j], draw_weight(*weight_range)))
    return Graph(vertices, edges)
