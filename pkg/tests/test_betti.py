import random
from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles as o
from conftest import complexes, hypergraphs, random_hypergraph
from hyperbetti.betti import (
    BettiTable,
    HilbertSeries,
    betti_from_fvector_linear,
    hilbert_from_fvector,
    hilbert_numerator_from_betti,
    hochster_graded,
    hochster_multigraded,
    is_cohen_macaulay,
    krull_dimension,
)
from hyperbetti.exceptions import InputError, ResourceLimitError
from hyperbetti.families import make_da, make_knd, make_multipartite
from hyperbetti.homology import GF2, QQ, FieldSpec
from hyperbetti.hypergraph import Hypergraph
from hyperbetti.simplicial import SimplicialComplex, VertexUniverse, simplex


def edge_sets(h):
    return [[v for v in range(h.universe.size) if e >> v & 1] for e in h.edges]


def test_multigraded_k32():
    table = hochster_multigraded(make_knd(3, 2))
    assert table.entries == {(0, 0): 1, (1, 0b011): 1, (1, 0b101): 1, (1, 0b110): 1, (2, 0b111): 2}


def test_full_simplex_and_edgeless():
    u = VertexUniverse(4)
    assert hochster_multigraded(simplex(u)).entries == {(0, 0): 1}
    t = hochster_graded(Hypergraph(u, []))
    assert t.entries == {(0, 0): 1}
    assert t.projective_dimension() == 0 and t.depth() == 4 and t.is_linear(3)


def test_small_tables():
    k21 = make_knd(2, 1)
    assert hochster_graded(k21.product(k21)).totals() == [1, 4, 4, 1]
    assert hochster_graded(make_multipartite([2, 3], 3)).totals() == [1, 9, 13, 5]
    k42 = hochster_graded(make_knd(4, 2))
    assert k42.entries == {(0, 0): 1, (1, 2): 6, (2, 3): 8, (3, 4): 3}


def test_ring_statistics():
    h = make_knd(6, 3)
    t = hochster_graded(h)
    assert t.projective_dimension() == 6 - 3 + 1
    assert is_cohen_macaulay(h)
    mp = make_multipartite([2, 2], 3)
    assert is_cohen_macaulay(mp)
    mp = make_multipartite([2, 3], 3)
    tab = hochster_graded(mp)
    assert tab.depth() == 2 and krull_dimension(mp.independence_complex()) == 3
    assert not is_cohen_macaulay(mp)
    da = make_da([3, 2], [1, 2])
    assert hochster_graded(da).depth() == 2
    assert krull_dimension(da.independence_complex()) == max(1 - 1 + 2, 2 - 1 + 3)
    assert krull_dimension(SimplicialComplex(VertexUniverse(3), [])) == 0


def test_linearity_verdicts():
    path = Hypergraph(VertexUniverse(4), [0b0011, 0b0110, 0b1100])
    assert hochster_graded(path).is_linear(2)
    two_edges = Hypergraph(VertexUniverse(4), [0b0011, 0b1100])
    t = hochster_graded(two_edges)
    assert not t.is_linear(2) and t.linear_degree() is None
    assert hochster_graded(make_knd(5, 3)).linear_degree() == 3


def test_hilbert_examples():
    k32 = make_knd(3, 2).independence_complex()
    assert hilbert_from_fvector(k32) == HilbertSeries((1, 0, -3, 2), 3)
    assert str(hilbert_from_fvector(k32)) == "(1 - 3t^2 + 2t^3) / (1 - t)^3"
    empty = SimplicialComplex(VertexUniverse(3), [])
    assert hilbert_from_fvector(empty).numerator == (1, -3, 3, -1)
    assert hilbert_from_fvector(simplex(VertexUniverse(4))).numerator == (1,)
    assert hilbert_numerator_from_betti(hochster_graded(make_knd(2, 2))) == [1, 0, -1]
    assert hilbert_numerator_from_betti(BettiTable({(0, 0): 1}, 3)) == [1]


def test_fvector_route_examples():
    k32 = make_knd(3, 2).independence_complex()
    assert betti_from_fvector_linear(k32, 2).entries == {(0, 0): 1, (1, 2): 3, (2, 3): 2}
    for n in range(2, 9):
        for d in range(2, n + 1):
            t = betti_from_fvector_linear(make_knd(n, d).independence_complex(), d)
            assert t.entries == o.knd_betti(n, d)
    mp = make_multipartite([2, 3], 3).independence_complex()
    assert betti_from_fvector_linear(mp, 3).totals() == [1, 9, 13, 5]


def test_resource_limit_and_void():
    with pytest.raises(ResourceLimitError):
        hochster_graded(make_knd(10, 3), limit=9)
    from hyperbetti.simplicial import void_complex
    with pytest.raises(InputError):
        hochster_graded(void_complex(VertexUniverse(3)))


def test_jobs_do_not_change_the_table():
    h = make_da([3, 3, 2], [1, 2, 1])
    one = hochster_multigraded(h, jobs=1)
    two = hochster_multigraded(h, jobs=2)
    assert one == two and list(one.entries) == list(two.entries)


def test_betti_table_helpers():
    t = BettiTable({(0, 0): 1, (1, 2): 3, (2, 3): 0}, 3, GF2)
    assert t.entries == {(0, 0): 1, (1, 2): 3}
    assert t == BettiTable({(0, 0): 1, (1, 2): 3}, 3, QQ)
    assert t.totals() == [1, 3]
    with pytest.raises(InputError):
        BettiTable({}, 2).projective_dimension()


@given(hypergraphs(max_n=7), st.sampled_from([0, 2, 3]))
def test_hochster_matches_koszul_oracle(h, p):
    f = QQ if p == 0 else FieldSpec(p)
    assert hochster_graded(h, f).entries == o.koszul_betti(edge_sets(h), h.universe.size, p)


@given(complexes(max_n=8))
def test_hilbert_numerators_agree(cx):
    from_f = hilbert_from_fvector(cx)
    from_b = hilbert_numerator_from_betti(hochster_graded(cx))
    assert list(from_f.numerator) == from_b
    assert from_f.denominator_power == cx.vertex_count


@given(hypergraphs(max_n=7))
def test_pd_and_depth_are_consistent(h):
    t = hochster_graded(h)
    cx = h.independence_complex()
    assert 0 <= t.projective_dimension() <= cx.vertex_count
    # depth never exceeds Krull dimension
    assert t.depth() <= krull_dimension(cx)


def test_induced_subhypergraph_monotonicity():
    rng = random.Random(11)
    for _ in range(20):
        h = random_hypergraph(rng, 7, max_edges=6)
        y = rng.randrange(1 << 7)
        big, small = hochster_graded(h), hochster_graded(h.induced(y))
        assert all(b <= big[k] for k, b in small.entries.items())


def test_knd_top_restriction_is_the_whole_set():
    for n in range(3, 8):
        for d in range(2, n + 1):
            t = hochster_multigraded(make_knd(n, d))
            full = (1 << n) - 1
            assert t[(n - d + 1, full)] == comb(n - 1, d - 1)
