import json

import pytest
from hypothesis import given

from conftest import complexes, hypergraphs
from hyperbetti import formats
from hyperbetti.betti import BettiTable, hilbert_from_fvector, hochster_graded, hochster_multigraded
from hyperbetti.exceptions import InputError
from hyperbetti.families import make_da, make_knd, make_multipartite
from hyperbetti.homology import GF2, reduced_homology
from hyperbetti.simplicial import SimplicialComplex, VertexUniverse, void_complex

SAMPLE = """# two blocks
vertices: a b | A B C
facet: a b A   # trailing comment
facet: B C
"""


def test_parse_complex_with_blocks():
    cx = formats.parse_complex(SAMPLE)
    assert cx.universe.blocks == ((0, 1), (2, 3, 4))
    assert cx.facets == (0b00111, 0b11000)
    assert formats.parse_complex(formats.format_complex(cx)) == cx


def test_parse_errors():
    for bad in ["facet: a", "vertices: a b\nfacet: z", "vertices: a\nvertices: b",
                "vertices: a b\nbogus: a", "vertices: a |  | b", "vertices: a\njunk"]:
        with pytest.raises(InputError):
            formats.parse_complex(bad)
    with pytest.raises(InputError):
        formats.parse_hypergraph("vertices: a b\nedge:")
    with pytest.raises(InputError):
        formats.parse_hypergraph("vertices: a b\nfacet: a")


def test_special_complexes_round_trip():
    u = VertexUniverse(3)
    for cx in [SimplicialComplex(u, []), void_complex(u), SimplicialComplex(u, [1], ground=0b011)]:
        assert formats.parse_complex(formats.format_complex(cx)) == cx
        assert formats.complex_from_json(formats.complex_to_json(cx)) == cx


def test_generated_family_round_trips():
    for h in [make_knd(4, 2), make_multipartite([2, 3], 3), make_da([3, 3, 3], [1, 1, 3])]:
        assert formats.parse_hypergraph(formats.format_hypergraph(h)) == h
        assert formats.hypergraph_from_json(formats.hypergraph_to_json(h)) == h
    text = formats.format_hypergraph(make_da([3, 3, 3], [1, 1, 3]))
    assert text.splitlines()[0] == "vertices: a b c | A B C | d e f"
    assert "edge: a A d e f" in text


@given(complexes(max_n=8))
def test_complex_round_trip(cx):
    assert formats.parse_complex(formats.format_complex(cx)) == cx
    assert formats.complex_from_json(json.loads(json.dumps(formats.complex_to_json(cx)))) == cx


@given(hypergraphs(max_n=8))
def test_hypergraph_round_trip(h):
    assert formats.parse_hypergraph(formats.format_hypergraph(h)) == h


def test_betti_json_shape():
    t = hochster_graded(make_multipartite([2, 3], 3), GF2)
    data = formats.betti_to_json(t)
    assert list(data) == ["n", "field", "entries", "pd", "depth", "linear_for_d"]
    assert data["entries"][1] == {"i": 1, "j": 3, "beta": 9}
    assert (data["pd"], data["depth"], data["linear_for_d"]) == (3, 2, 3)
    assert formats.betti_from_json(data) == t
    assert formats.betti_to_json(t, 2)["linear_for_d"] is None


def test_multigraded_json_uses_labels():
    data = formats.multigraded_to_json(hochster_multigraded(make_knd(3, 2)))
    assert data["entries"][1] == {"i": 1, "degree": ["a", "b"], "beta": 1}
    assert data["entries"][-1] == {"i": 2, "degree": ["a", "b", "c"], "beta": 2}


def test_other_json_renderings():
    tri = SimplicialComplex(VertexUniverse(3), [0b011, 0b101, 0b110])
    assert formats.homology_to_json(reduced_homology(tri)) == {"-1": 0, "0": 0, "1": 1}
    hs = formats.hilbert_to_json(hilbert_from_fvector(make_knd(3, 2).independence_complex()))
    assert hs == {"numerator": [1, 0, -3, 2], "denominator_power": 3, "text": "(1 - 3t^2 + 2t^3) / (1 - t)^3"}


def test_text_and_csv_tables():
    t = BettiTable({(0, 0): 1, (1, 3): 9, (2, 4): 13, (3, 5): 5}, 5)
    text = formats.format_betti_text(t)
    assert text.splitlines()[1].split() == ["total:", "1", "9", "13", "5"]
    assert text.splitlines()[-1].split() == ["2:", ".", "9", "13", "5"]
    assert formats.format_betti_csv(t).splitlines() == ["i,j,beta", "0,0,1", "1,3,9", "2,4,13", "3,5,5"]
