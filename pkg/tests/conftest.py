from __future__ import annotations

import os
import random
import sys

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

sys.path.insert(0, os.path.dirname(__file__))

from hyperbetti.hypergraph import Hypergraph  # noqa: E402
from hyperbetti.simplicial import SimplicialComplex, VertexUniverse, bits  # noqa: E402

settings.register_profile(
    "default", deadline=None, max_examples=60, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")


def faces_of(cx: SimplicialComplex) -> set[frozenset[int]]:
    """Every face as a frozenset of vertex indices."""
    return {frozenset(bits(f)) for group in cx.face_table().values() for f in group}


def random_complex(rng: random.Random, n: int, max_facets: int = 6) -> SimplicialComplex:
    u = VertexUniverse(n)
    facets = [rng.randrange(1 << n) for _ in range(rng.randint(0, max_facets))]
    return SimplicialComplex(u, facets)


def random_hypergraph(rng: random.Random, n: int, d: int | None = None, max_edges: int = 8) -> Hypergraph:
    u = VertexUniverse(n)
    edges = []
    for _ in range(rng.randint(0, max_edges)):
        if d is None:
            m = rng.randrange(1, 1 << n)
        else:
            m = sum(1 << v for v in rng.sample(range(n), d))
        edges.append(m)
    return Hypergraph(u, edges)


@st.composite
def complexes(draw, min_n: int = 1, max_n: int = 7, max_facets: int = 6):
    n = draw(st.integers(min_n, max_n))
    facets = draw(st.lists(st.integers(0, (1 << n) - 1), max_size=max_facets))
    return SimplicialComplex(VertexUniverse(n), facets)


@st.composite
def hypergraphs(draw, min_n: int = 1, max_n: int = 7, max_edges: int = 8):
    n = draw(st.integers(min_n, max_n))
    edges = draw(st.lists(st.integers(1, (1 << n) - 1), max_size=max_edges))
    return Hypergraph(VertexUniverse(n), edges)


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    results = getattr(module, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(results):
        terminalreporter.write_line(results[number])
