from __future__ import annotations

from pathlib import Path

import pytest
from hypothesis import strategies as st

from stegnet.graph import Graph, parse_graph

FIXTURES = Path(__file__).parent / "fixtures"


@st.composite
def graphs(draw, min_n: int = 1, max_n: int = 8, max_weight: int = 20, vertex_weights: bool = False):
    """Integer-weighted undirected graphs on ids v0..v{n-1}."""
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    names = [f"v{i}" for i in range(n)]
    pairs = [(names[i], names[j]) for i in range(n) for j in range(i + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    weight = st.integers(min_value=1, max_value=max_weight)
    edges = [(u, v, float(draw(weight))) for u, v in chosen]
    if vertex_weights:
        vertices = {v: float(draw(st.integers(min_value=1, max_value=9))) for v in names}
    else:
        vertices = {v: 1.0 for v in names}
    return Graph(vertices, edges)


def load(name: str) -> Graph:
    return parse_graph((FIXTURES / name).read_text())


@pytest.fixture
def triangle() -> Graph:
    return parse_graph("v a\nv b\nv c\ne a b 1\ne b c 2\ne a c 3\n")


@pytest.fixture
def diamond() -> Graph:
    return load("diamond.sgn")


@pytest.fixture
def square() -> Graph:
    return load("square.sgn")


@pytest.fixture
def star() -> Graph:
    return load("star.sgn")
