from __future__ import annotations

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from stegnet._rng import SplitMix64
from stegnet.errors import GraphError, ParseError, UnknownVertexError
from stegnet.graph import (
    Graph,
    format_weight,
    has_path,
    parse_graph,
    random_graph,
    serialize_graph,
    total_edge_weight,
)

from conftest import graphs


class TestParse:
    def test_minimal_document(self):
        g = parse_graph("v a\nv b\ne a b 2.5")
        assert g.vertices == ("a", "b")
        assert g.vertex_weight("a") == g.vertex_weight("b") == 1.0
        assert g.edges() == [("a", "b", 2.5)]

    def test_bytes_comments_and_blank_lines(self):
        g = parse_graph(b"# header\n\nv x 3\n  # indented comment\ne x y 4\nv y\n")
        assert g.vertex_weight("x") == 3.0
        assert g.edge_weight("y", "x") == 4.0

    def test_edge_before_declaration(self):
        g = parse_graph("e a b 1\nv b\nv a\n")
        assert g.has_edge("a", "b")

    @pytest.mark.parametrize(
        "text, lineno, fragment",
        [
            ("v a\ne a a 1.0", 2, "self-loop"),
            ("v a\nv b\ne a b 1\ne b a 2", 4, "duplicate edge"),
            ("v a\nv a", 2, "duplicate vertex"),
            ("v a\ne a b 1", 2, "undeclared"),
            ("v a\nv b\ne a b 0", 3, "positive"),
            ("v a\nv b\ne a b -1", 3, "positive"),
            ("v a\nv b\ne a b inf", 3, "finite"),
            ("v a\nv b\ne a b nan", 3, "finite"),
            ("v a\nv b\ne a b 1e999", 3, "finite"),
            ("v a 0", 1, "positive"),
            ("v a\nv b\ne a b", 3, "expected"),
            ("v a 1 2", 1, "expected"),
            ("x a", 1, "unknown record"),
            ("v a-b", 1, "invalid vertex id"),
            ("v a\nv b\ne a b 1_0", 3, "finite"),
        ],
    )
    def test_errors_carry_line_numbers(self, text, lineno, fragment):
        with pytest.raises(ParseError) as info:
            parse_graph(text)
        assert info.value.lineno == lineno
        assert fragment in str(info.value)

    def test_auto_declare(self):
        g = parse_graph("e a b 2\n", auto_declare=True)
        assert g.vertices == ("a", "b")
        assert g.vertex_weight("a") == 1.0

    def test_ids_are_case_sensitive(self):
        g = parse_graph("v A\nv a\ne A a 1\n")
        assert g.vertices == ("A", "a")


class TestSerialize:
    def test_canonical_order(self):
        g = Graph(["b", "a"], [("b", "a", 2.5)])
        assert serialize_graph(g) == "v a 1\nv b 1\ne a b 2.5\n"

    def test_empty(self):
        assert serialize_graph(Graph()) == ""

    def test_weights_round_trip_exactly(self):
        g = Graph({"a": 0.1, "b": 1e-7}, [("a", "b", 1 / 3)])
        assert parse_graph(serialize_graph(g)) == g

    @given(graphs(max_n=9, vertex_weights=True))
    def test_round_trip(self, g):
        assert parse_graph(serialize_graph(g)) == g

    @given(st.integers(1, 12), st.floats(0, 1), st.integers(0, 2**64 - 1))
    @settings(max_examples=50)
    def test_round_trip_random_graphs(self, n, p, seed):
        g = random_graph(n, p, (0.5, 7.25), seed)
        assert parse_graph(serialize_graph(g)) == g


def test_format_weight():
    assert format_weight(3.0) == "3"
    assert format_weight(2.5) == "2.5"
    assert format_weight(0.1) == "0.1"
    assert float(format_weight(1 / 3)) == 1 / 3


class TestNeighbors:
    def test_star(self):
        g = Graph(["c", "l1", "l2", "l3"], [("c", "l1", 1), ("c", "l2", 1), ("c", "l3", 1)])
        assert g.neighbors("c") == {"l1", "l2", "l3"}

    def test_isolated(self):
        assert Graph(["a"]).neighbors("a") == frozenset()

    def test_triangle(self, triangle):
        assert triangle.neighbors("a") == {"b", "c"}

    def test_unknown(self, triangle):
        with pytest.raises(UnknownVertexError):
            triangle.neighbors("zz")

    @given(graphs())
    def test_symmetric_and_irreflexive(self, g):
        for v in g.vertices:
            assert v not in g.neighbors(v)
            for u in g.neighbors(v):
                assert v in g.neighbors(u)
        for u, v, _ in g.edges():
            assert v in g.neighbors(u) and u in g.neighbors(v)


class TestHasPath:
    def test_path_graph(self):
        g = Graph(["a", "b", "c"], [("a", "b", 1), ("b", "c", 1)])
        assert has_path(g, "a", "c")

    def test_isolated_pair(self):
        assert not has_path(Graph(["a", "b"]), "a", "b")

    def test_reflexive(self):
        assert has_path(Graph(["a"]), "a", "a")

    def test_unknown(self):
        with pytest.raises(UnknownVertexError):
            has_path(Graph(["a"]), "a", "b")

    @given(graphs(max_n=8))
    def test_equivalence_relation(self, g):
        vs = g.vertices
        reach = {(u, v): has_path(g, u, v) for u in vs for v in vs}
        for u in vs:
            assert reach[u, u]
        for u, v in itertools.product(vs, repeat=2):
            assert reach[u, v] == reach[v, u]
        for u, v, w in itertools.product(vs, repeat=3):
            if reach[u, v] and reach[v, w]:
                assert reach[u, w]


class TestTotalEdgeWeight:
    def test_encoder_links_total(self):
        g = Graph(["a", "b", "c", "d"], [("a", "b", 13), ("a", "c", 17), ("a", "d", 31)])
        assert total_edge_weight(g) == 61

    def test_edgeless(self):
        assert total_edge_weight(Graph(["a", "b"])) == 0

    def test_single_edge(self):
        assert total_edge_weight(Graph(["a", "b"], [("a", "b", 27)])) == 27

    @given(graphs(), st.randoms())
    def test_insertion_order_irrelevant(self, g, rnd):
        edges = g.edges()
        rnd.shuffle(edges)
        names = list(g.vertices)
        rnd.shuffle(names)
        h = Graph(names, edges)
        assert h == g
        assert total_edge_weight(h) == sum(w for _, _, w in g.edges())


class TestRandomGraph:
    def test_single_vertex(self):
        g = random_graph(1, 0.9, (1, 2), 7)
        assert g.vertices == ("v0",) and g.num_edges == 0

    def test_complete(self):
        assert random_graph(4, 1.0, (1, 2), 0).num_edges == 6

    def test_empty_probability(self):
        assert random_graph(6, 0.0, (1, 2), 0).num_edges == 0

    def test_deterministic(self):
        a = serialize_graph(random_graph(9, 0.5, (1.0, 5.0), 1234))
        b = serialize_graph(random_graph(9, 0.5, (1.0, 5.0), 1234))
        assert a == b
        assert a != serialize_graph(random_graph(9, 0.5, (1.0, 5.0), 1235))

    def test_frozen_stream(self):
        # pins the documented SplitMix64 + pair-order algorithm
        g = random_graph(4, 0.5, (1, 20), 42, integer_weights=True)
        assert serialize_graph(g) == FROZEN_SEED_42

    def test_weights_within_range(self):
        g = random_graph(12, 0.7, (2.0, 3.0), 5, vertex_weight_range=(1.0, 9.0))
        assert all(2.0 <= w <= 3.0 for _, _, w in g.edges())
        assert all(1.0 <= g.vertex_weight(v) <= 9.0 for v in g.vertices)

    def test_integer_weights(self):
        g = random_graph(10, 1.0, (1, 3), 3, integer_weights=True)
        assert {w for _, _, w in g.edges()} <= {1.0, 2.0, 3.0}

    @pytest.mark.parametrize(
        "args",
        [
            (0, 0.5, (1, 2), 0),
            (3, -0.1, (1, 2), 0),
            (3, 1.1, (1, 2), 0),
            (3, 0.5, (0, 2), 0),
            (3, 0.5, (3, 2), 0),
            (3, 0.5, (1, float("inf")), 0),
        ],
    )
    def test_invalid(self, args):
        with pytest.raises(GraphError):
            random_graph(*args)


class TestGraphInvariants:
    def test_rejects_self_loop(self):
        with pytest.raises(GraphError):
            Graph(["a"], [("a", "a", 1)])

    def test_rejects_parallel(self):
        with pytest.raises(GraphError):
            Graph(["a", "b"], [("a", "b", 1), ("b", "a", 1)])

    def test_rejects_negative_edge(self):
        with pytest.raises(GraphError):
            Graph(["a", "b"], [("a", "b", -1)])

    def test_rejects_nonpositive_vertex_weight(self):
        with pytest.raises(GraphError):
            Graph({"a": 0.0})

    def test_without_edges(self, triangle):
        h = triangle.without_edges([("c", "a")])
        assert not h.has_edge("a", "c") and h.num_edges == 2
        assert triangle.has_edge("a", "c")


FROZEN_SEED_42 = (
    "v v0 1\n"
    "v v1 1\n"
    "v v2 1\n"
    "v v3 1\n"
    "e v0 v2 6\n"
    "e v0 v3 1\n"
    "e v1 v3 17\n"
    "e v2 v3 13\n"
)


def test_splitmix64_reference_vector():
    # published SplitMix64 outputs for seed 1234567
    rng = SplitMix64(1234567)
    assert [rng.next_u64() for _ in range(5)] == [
        6457827717110365317,
        3203168211198807973,
        9817491932198370423,
        4593380528125082431,
        16408922859458223821,
    ]
