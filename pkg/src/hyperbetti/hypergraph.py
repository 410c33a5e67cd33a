"""Hypergraphs on partitioned vertex sets and their independence complexes."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .exceptions import InputError
from .simplicial import FaceLike, SimplicialComplex, VertexUniverse, bits, maximal_faces


class Hypergraph:
    """A vertex set with a family of nonempty edges.

    Edges are kept as sorted, deduplicated masks. Singleton edges and nested
    edges are accepted (products with ``K_n^1`` factors need them); use
    :func:`validate_simple` to check the simple-hypergraph conditions.
    """

    __slots__ = ("universe", "ground", "edges")

    def __init__(self, universe: VertexUniverse, edges: Iterable[FaceLike] = (), *, ground: int | None = None):
        self.universe = universe
        self.ground = universe.full if ground is None else universe.as_mask(ground)
        masks = set()
        for e in edges:
            m = universe.as_mask(e)
            if m == 0:
                raise InputError("edges must be nonempty")
            if m & ~self.ground:
                raise InputError(f"edge {universe.names(m)} is outside the vertex set")
            masks.add(m)
        self.edges: tuple[int, ...] = tuple(sorted(masks))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Hypergraph):
            return NotImplemented
        return (self.universe.size, self.ground, self.edges) == (other.universe.size, other.ground, other.edges)

    def __hash__(self) -> int:
        return hash((self.universe.size, self.ground, self.edges))

    def __repr__(self) -> str:
        shown = ", ".join("".join(self.universe.names(e)) for e in self.edges[:8])
        more = ", ..." if len(self.edges) > 8 else ""
        return f"Hypergraph(n={self.vertex_count}, edges=[{shown}{more}])"

    def __len__(self) -> int:
        return len(self.edges)

    @property
    def vertex_count(self) -> int:
        return self.ground.bit_count()

    def minimal_edges(self) -> tuple[int, ...]:
        """Inclusion-minimal edges."""
        ordered = sorted(self.edges, key=int.bit_count)
        kept: list[int] = []
        for e in ordered:
            if not any(k & e == k for k in kept):
                kept.append(e)
        return tuple(sorted(kept))

    def is_uniform(self, declared: int | None = None) -> int | None:
        """The common edge size, or None. An edgeless hypergraph reports ``declared``."""
        sizes = {e.bit_count() for e in self.edges}
        if not sizes:
            return declared
        return sizes.pop() if len(sizes) == 1 else None

    def induced(self, vertices: FaceLike) -> "Hypergraph":
        """Sub-hypergraph on ``vertices`` keeping the edges that lie inside it."""
        y = self.universe.as_mask(vertices) & self.ground
        return Hypergraph(self.universe, (e for e in self.edges if e & y == e), ground=y)

    def product(self, other: "Hypergraph") -> "Hypergraph":
        """Edges are unions ``E ∪ F`` of one edge from each factor.

        Overlapping factors are treated as disjoint copies, as in :meth:`SimplicialComplex.join`.
        """
        if self.universe == other.universe and not self.ground & other.ground:
            universe, shift = self.universe, 0
        else:
            universe, shift = self.universe.disjoint_union(other.universe), self.universe.size
        edges = [e | (f << shift) for e in self.edges for f in other.edges]
        return Hypergraph(universe, edges, ground=self.ground | (other.ground << shift))

    def independence_complex(self) -> SimplicialComplex:
        """Sets containing no edge. Its minimal non-faces are the minimal edges."""
        return SimplicialComplex(self.universe, maximal_independent_sets(self), ground=self.ground)

    def edge_ideal(self) -> "EdgeIdealView":
        n = self.universe.size
        return EdgeIdealView(tuple(tuple((e >> k) & 1 for k in range(n)) for e in self.edges))


@dataclass(frozen=True)
class EdgeIdealView:
    """Exponent vectors of the squarefree generators ``x^E``, one per edge."""

    generators: tuple[tuple[int, ...], ...]

    def __len__(self) -> int:
        return len(self.generators)


@dataclass(frozen=True)
class SimplicityReport:
    singleton_edges: tuple[int, ...]
    nested_pairs: tuple[tuple[int, int], ...]  # (smaller, larger)

    @property
    def is_simple(self) -> bool:
        return not self.singleton_edges and not self.nested_pairs


def validate_simple(h: Hypergraph) -> SimplicityReport:
    singletons = tuple(e for e in h.edges if e.bit_count() < 2)
    nested = tuple(
        (e, f) for e in h.edges for f in h.edges if e != f and e & f == e
    )
    return SimplicityReport(singletons, nested)


def maximal_independent_sets(h: Hypergraph) -> tuple[int, ...]:
    """Facets of the independence complex, by depth-first face enumeration.

    A face is grown one vertex at a time in increasing index order; adding
    vertex ``v`` can only create an edge whose largest vertex is ``v``.
    """
    ground = h.ground
    order = list(bits(ground))
    closing: dict[int, list[int]] = {v: [] for v in order}
    for e in h.minimal_edges():
        closing[e.bit_length() - 1].append(e)

    faces: set[int] = set()
    stack = [(0, 0)]  # (face, position in order to extend from)
    while stack:
        face, start = stack.pop()
        faces.add(face)
        for pos in range(start, len(order)):
            v = order[pos]
            g = face | (1 << v)
            if any(e & g == e for e in closing[v]):
                continue
            stack.append((g, pos + 1))

    facets = [
        f for f in faces
        if all((f | (1 << v)) not in faces for v in bits(ground & ~f))
    ]
    return maximal_faces(facets)


def count_disjoint_edge_families(h: Hypergraph, i: int) -> int:
    """Number of ``i``-sets of pairwise disjoint edges whose union induces exactly those edges."""
    if h.edges and h.is_uniform() is None:
        raise InputError("count_disjoint_edge_families needs a uniform hypergraph")
    if i < 0:
        return 0
    edges = h.edges
    count = 0

    def extend(start: int, union: int, depth: int) -> None:
        nonlocal count
        if depth == i:
            inside = sum(1 for e in edges if e & union == e)
            if inside == i:
                count += 1
            return
        for k in range(start, len(edges)):
            e = edges[k]
            if e & union == 0:
                extend(k + 1, union | e, depth + 1)

    extend(0, 0, 0)
    return count
