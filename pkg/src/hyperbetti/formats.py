"""Text and JSON formats for complexes, hypergraphs and Betti tables.

Complex / hypergraph text format::

    # comment
    vertices: a b | A B C        # blocks separated by '|', optional
    facet: a b                   # complexes; 'void' on its own line for the void complex
    edge: a b A                  # hypergraphs

Bit order follows declaration order. A complex with no ``facet:`` lines is
``{∅}``. A ``ground:`` line restricts the vertex set a complex lives on.
"""

from __future__ import annotations

import csv
import io as _io
import json
import sys
from typing import Any, TextIO

from .betti import BettiTable, HilbertSeries, MultigradedBettiTable, format_polynomial
from .exceptions import InputError
from .homology import FieldSpec, HomologyProfile
from .hypergraph import Hypergraph
from .simplicial import SimplicialComplex, VertexUniverse


# --------------------------------------------------------------------------
# text format
# --------------------------------------------------------------------------

def _parse_lines(text: str) -> tuple[VertexUniverse, list[tuple[str, list[str], int]]]:
    universe: VertexUniverse | None = None
    records: list[tuple[str, list[str], int]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, rest = line.partition(":")
        key = key.strip().lower()
        if not sep:
            if key == "void":
                records.append(("void", [], lineno))
                continue
            raise InputError(f"line {lineno}: expected 'key: values', got {raw!r}")
        if key == "vertices":
            if universe is not None:
                raise InputError(f"line {lineno}: duplicate vertices line")
            groups = [g.split() for g in rest.split("|")]
            if len(groups) > 1 and any(not g for g in groups):
                raise InputError(f"line {lineno}: empty block")
            labels = [v for g in groups for v in g]
            if len(groups) > 1:
                blocks, start = [], 0
                for g in groups:
                    blocks.append(tuple(range(start, start + len(g))))
                    start += len(g)
                universe = VertexUniverse(len(labels), tuple(labels), tuple(blocks))
            else:
                universe = VertexUniverse(len(labels), tuple(labels))
        elif key in {"facet", "edge", "ground"}:
            records.append((key, rest.split(), lineno))
        else:
            raise InputError(f"line {lineno}: unknown key {key!r}")
    if universe is None:
        raise InputError("missing 'vertices:' line")
    return universe, records


def parse_complex(text: str) -> SimplicialComplex:
    universe, records = _parse_lines(text)
    facets, ground, void = [], None, False
    for key, values, lineno in records:
        if key == "facet":
            facets.append(universe.as_mask(values))
        elif key == "ground":
            ground = universe.as_mask(values)
        elif key == "void":
            void = True
        else:
            raise InputError(f"line {lineno}: '{key}' lines do not belong in a complex file")
    return SimplicialComplex(universe, facets, ground=ground, void=void)


def parse_hypergraph(text: str) -> Hypergraph:
    universe, records = _parse_lines(text)
    edges, ground = [], None
    for key, values, lineno in records:
        if key == "edge":
            if not values:
                raise InputError(f"line {lineno}: empty edge")
            edges.append(universe.as_mask(values))
        elif key == "ground":
            ground = universe.as_mask(values)
        else:
            raise InputError(f"line {lineno}: '{key}' lines do not belong in a hypergraph file")
    return Hypergraph(universe, edges, ground=ground)


def _vertices_line(universe: VertexUniverse) -> str:
    if universe.blocks:
        return "vertices: " + " | ".join(" ".join(universe.labels[v] for v in b) for b in universe.blocks)
    return "vertices: " + " ".join(universe.labels)


def _check_declaration_order(universe: VertexUniverse) -> None:
    order = [v for b in universe.blocks for v in b]
    if universe.blocks and order != list(range(universe.size)):
        raise InputError("text format needs blocks listed in index order")


def format_complex(cx: SimplicialComplex) -> str:
    u = cx.universe
    _check_declaration_order(u)
    lines = [_vertices_line(u)]
    if cx.ground != u.full:
        lines.append("ground: " + " ".join(u.names(cx.ground)))
    if cx.is_void:
        lines.append("void")
    for f in cx.facets:
        lines.append("facet: " + " ".join(u.names(f)))
    return "\n".join(lines) + "\n"


def format_hypergraph(h: Hypergraph) -> str:
    u = h.universe
    _check_declaration_order(u)
    lines = [_vertices_line(u)]
    if h.ground != u.full:
        lines.append("ground: " + " ".join(u.names(h.ground)))
    for e in h.edges:
        lines.append("edge: " + " ".join(u.names(e)))
    return "\n".join(lines) + "\n"


def looks_like_json(text: str) -> bool:
    return text.lstrip().startswith("{")


# --------------------------------------------------------------------------
# JSON mirrors
# --------------------------------------------------------------------------

def _universe_json(universe: VertexUniverse) -> list:
    if universe.blocks:
        return [[universe.labels[v] for v in b] for b in universe.blocks]
    return list(universe.labels)


def _universe_from_json(data: list) -> VertexUniverse:
    if data and all(isinstance(b, list) for b in data):
        labels = [v for b in data for v in b]
        blocks, start = [], 0
        for b in data:
            blocks.append(tuple(range(start, start + len(b))))
            start += len(b)
        return VertexUniverse(len(labels), tuple(labels), tuple(blocks))
    return VertexUniverse(len(data), tuple(data))


def hypergraph_to_json(h: Hypergraph) -> dict[str, Any]:
    u = h.universe
    out: dict[str, Any] = {"vertices": _universe_json(u), "edges": [u.names(e) for e in h.edges]}
    if h.ground != u.full:
        out["ground"] = u.names(h.ground)
    return out


def hypergraph_from_json(data: dict[str, Any]) -> Hypergraph:
    u = _universe_from_json(data["vertices"])
    ground = u.as_mask(data["ground"]) if "ground" in data else None
    return Hypergraph(u, (u.as_mask(e) for e in data.get("edges", [])), ground=ground)


def complex_to_json(cx: SimplicialComplex) -> dict[str, Any]:
    u = cx.universe
    out: dict[str, Any] = {"vertices": _universe_json(u), "facets": [u.names(f) for f in cx.facets]}
    if cx.ground != u.full:
        out["ground"] = u.names(cx.ground)
    if cx.is_void:
        out["void"] = True
    return out


def complex_from_json(data: dict[str, Any]) -> SimplicialComplex:
    u = _universe_from_json(data["vertices"])
    ground = u.as_mask(data["ground"]) if "ground" in data else None
    return SimplicialComplex(u, (u.as_mask(f) for f in data.get("facets", [])), ground=ground,
                             void=bool(data.get("void", False)))


def betti_to_json(table: BettiTable, linear_for_d: int | None = None) -> dict[str, Any]:
    """The Betti table JSON object. ``linear_for_d`` defaults to the detected linear degree."""
    if linear_for_d is None:
        linear_for_d = table.linear_degree()
    elif not table.is_linear(linear_for_d):
        linear_for_d = None
    pd = table.projective_dimension()
    return {
        "n": table.n,
        "field": table.field.name if table.field is not None else None,
        "entries": [{"i": i, "j": j, "beta": b} for (i, j), b in table.entries.items()],
        "pd": pd,
        "depth": table.n - pd,
        "linear_for_d": linear_for_d,
    }


def betti_from_json(data: dict[str, Any]) -> BettiTable:
    entries = {(int(e["i"]), int(e["j"])): int(e["beta"]) for e in data["entries"]}
    f = FieldSpec.parse(data["field"]) if data.get("field") else None
    return BettiTable(entries, int(data["n"]), f)


def multigraded_to_json(table: MultigradedBettiTable) -> dict[str, Any]:
    u = table.universe
    return {
        "n": table.n,
        "field": table.field.name if table.field is not None else None,
        "entries": [{"i": i, "degree": u.names(v), "beta": b} for (i, v), b in table.entries.items()],
    }


def homology_to_json(profile: HomologyProfile) -> dict[str, int]:
    return profile.to_json()


def hilbert_to_json(series: HilbertSeries) -> dict[str, Any]:
    return {
        "numerator": list(series.numerator),
        "denominator_power": series.denominator_power,
        "text": str(series),
    }


def dumps(obj: Any) -> str:
    """Deterministic JSON rendering used by every command."""
    return json.dumps(obj, indent=2, sort_keys=False) + "\n"


# --------------------------------------------------------------------------
# Betti table renderings
# --------------------------------------------------------------------------

def format_betti_text(table: BettiTable) -> str:
    """Macaulay2-style table: columns ``i``, rows ``j - i``, plus a totals row."""
    if not table.entries:
        return "(empty table)\n"
    pd = table.projective_dimension()
    rows = sorted({j - i for i, j in table.entries})
    cells = {(j - i, i): b for (i, j), b in table.entries.items()}
    width = max(len(str(b)) for b in table.entries.values())
    width = max(width, len(str(pd)), max(len(str(t)) for t in table.totals()))
    head_w = max(len("total:"), max(len(f"{r}:") for r in rows))
    lines = [" " * head_w + " " + " ".join(str(i).rjust(width) for i in range(pd + 1))]
    lines.append("total:".rjust(head_w) + " " + " ".join(str(t).rjust(width) for t in table.totals()))
    for r in range(rows[0], rows[-1] + 1):
        vals = [str(cells[(r, i)]) if (r, i) in cells else "." for i in range(pd + 1)]
        lines.append(f"{r}:".rjust(head_w) + " " + " ".join(v.rjust(width) for v in vals))
    return "\n".join(lines) + "\n"


def format_betti_csv(table: BettiTable) -> str:
    buf = _io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["i", "j", "beta"])
    for (i, j), b in table.entries.items():
        writer.writerow([i, j, b])
    return buf.getvalue()


def read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def write_text(path: str, text: str, stream: TextIO | None = None) -> None:
    if path == "-":
        (stream or sys.stdout).write(text)
        return
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)


__all__ = [
    "parse_complex", "parse_hypergraph", "format_complex", "format_hypergraph",
    "hypergraph_to_json", "hypergraph_from_json", "complex_to_json", "complex_from_json",
    "betti_to_json", "betti_from_json", "multigraded_to_json", "homology_to_json",
    "hilbert_to_json", "format_betti_text", "format_betti_csv", "format_polynomial", "dumps",
]
