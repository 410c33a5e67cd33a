"""Abstract simplicial complexes on a small vertex universe.

Faces are plain ``int`` bit masks: bit ``k`` is set when vertex ``k`` of the
universe belongs to the face. The same mask doubles as a squarefree
multidegree, so ``mask.bit_count()`` is both the cardinality of the face and
the total degree of the corresponding monomial.

A complex is stored by its facets. Three cases are kept apart:

* the *void* complex, which has no faces at all;
* the *empty* complex ``{∅}``, whose only face is the empty set (no facets
  are stored);
* everything else.

Every complex also carries a *ground set*, the vertices it lives on. The
ground set is the full universe unless the complex came out of
:meth:`SimplicialComplex.restriction`; vertex identities are never
re-indexed, which keeps multigraded bookkeeping in terms of the original
universe.
"""

from __future__ import annotations

import math
import string
import threading
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence, Union

from .exceptions import InputError

MAX_VERTICES = 63

FaceLike = Union[int, Iterable[Union[int, str]]]


# --------------------------------------------------------------------------
# bit mask helpers
# --------------------------------------------------------------------------

def bits(mask: int) -> Iterator[int]:
    """Indices of the set bits of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def submasks(mask: int) -> Iterator[int]:
    """Every subset of ``mask``, starting with ``mask`` itself and ending with 0."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def subsets_of_size(mask: int, k: int) -> Iterator[int]:
    for combo in combinations(tuple(bits(mask)), k):
        yield mask_of(combo)


def maximal_faces(masks: Iterable[int]) -> tuple[int, ...]:
    """Inclusion-maximal members of ``masks``, deduplicated and sorted."""
    unique = sorted(set(masks), key=lambda m: -m.bit_count())
    kept: list[int] = []
    for m in unique:
        if not any(m & k == m for k in kept):
            kept.append(m)
    return tuple(sorted(kept))


# --------------------------------------------------------------------------
# vertex universe
# --------------------------------------------------------------------------

def default_labels(blocks: Sequence[Sequence[int]], size: int) -> tuple[str, ...]:
    """Labels in the style ``a b c | A B C | d e f``.

    Odd-numbered blocks draw lower-case letters and even-numbered blocks draw
    upper-case letters, each pool continuing where it stopped. When a pool
    runs dry every vertex is labelled ``x0, x1, ...`` instead.
    """
    if not blocks:
        blocks = (tuple(range(size)),)
    pools = (iter(string.ascii_lowercase), iter(string.ascii_uppercase))
    labels: list[str | None] = [None] * size
    for b, block in enumerate(blocks):
        pool = pools[b % 2]
        for v in block:
            labels[v] = next(pool, None)
    if any(label is None for label in labels):
        return tuple(f"x{k}" for k in range(size))
    return tuple(labels)  # type: ignore[arg-type]


@dataclass(frozen=True)
class VertexUniverse:
    """An ordered vertex set ``0 .. size-1`` with optional labels and blocks.

    ``blocks`` is an ordered partition of the indices; it is empty when the
    universe carries no partition.
    """

    size: int
    labels: tuple[str, ...] = ()
    blocks: tuple[tuple[int, ...], ...] = ()

    def __post_init__(self) -> None:
        if not 0 <= self.size <= MAX_VERTICES:
            raise InputError(f"universe size must lie in [0, {MAX_VERTICES}], got {self.size}")
        blocks = tuple(tuple(int(v) for v in block) for block in self.blocks)
        if blocks:
            seen: list[int] = [v for block in blocks for v in block]
            if any(not block for block in blocks):
                raise InputError("partition blocks must be nonempty")
            if sorted(seen) != list(range(self.size)):
                raise InputError("partition blocks must be disjoint and cover the universe")
        object.__setattr__(self, "blocks", blocks)
        labels = tuple(self.labels) if self.labels else default_labels(blocks, self.size)
        if len(labels) != self.size:
            raise InputError(f"expected {self.size} labels, got {len(labels)}")
        if len(set(labels)) != len(labels):
            raise InputError("vertex labels must be distinct")
        for label in labels:
            if not label or any(ch.isspace() for ch in label) or label in {"|", "#"} or ":" in label:
                raise InputError(f"invalid vertex label {label!r}")
        object.__setattr__(self, "labels", labels)

    @classmethod
    def from_block_sizes(cls, sizes: Sequence[int], labels: Sequence[str] | None = None) -> "VertexUniverse":
        """Universe ``[n1] ⊔ ... ⊔ [nt]`` with contiguous blocks."""
        blocks = []
        start = 0
        for size in sizes:
            if size < 1:
                raise InputError("block sizes must be positive")
            blocks.append(tuple(range(start, start + size)))
            start += size
        return cls(start, tuple(labels) if labels else (), tuple(blocks))

    @property
    def full(self) -> int:
        return (1 << self.size) - 1

    @property
    def block_masks(self) -> tuple[int, ...]:
        if not self.blocks:
            return (self.full,) if self.size else ()
        return tuple(mask_of(block) for block in self.blocks)

    def index(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise InputError(f"unknown vertex {label!r}") from None

    def as_mask(self, face: FaceLike) -> int:
        """Coerce a mask, or an iterable of indices and labels, to a mask."""
        if isinstance(face, int):
            mask = face
        else:
            mask = 0
            for v in face:
                k = self.index(v) if isinstance(v, str) else int(v)
                if not 0 <= k < self.size:
                    raise InputError(f"vertex {v!r} outside universe of size {self.size}")
                mask |= 1 << k
        if mask < 0 or mask & ~self.full:
            raise InputError(f"face {mask:#b} is not contained in the universe")
        return mask

    def names(self, mask: int) -> list[str]:
        return [self.labels[v] for v in bits(mask)]

    def disjoint_union(self, other: "VertexUniverse") -> "VertexUniverse":
        """``self ⊔ other``; ``other``'s indices are shifted by ``self.size``."""
        shift = self.size
        left = self.blocks or ((tuple(range(self.size)),) if self.size else ())
        right = other.blocks or ((tuple(range(other.size)),) if other.size else ())
        blocks = left + tuple(tuple(v + shift for v in block) for block in right)
        labels = self.labels + other.labels
        if len(set(labels)) != len(labels):
            labels = ()
        return VertexUniverse(self.size + other.size, labels, blocks)


# --------------------------------------------------------------------------
# simplicial complexes
# --------------------------------------------------------------------------

class SimplicialComplex:
    """An immutable simplicial complex given by its facets.

    Parameters
    ----------
    universe
        The vertex universe faces are drawn from.
    facets
        Candidate facets as masks or vertex iterables. Duplicates and
        non-maximal candidates are dropped. An empty list gives ``{∅}``.
    ground
        Vertex set the complex lives on (defaults to the whole universe).
    void
        Build the void complex instead. ``facets`` must then be empty.
    """

    __slots__ = ("universe", "ground", "facets", "is_void", "_faces", "_lock")

    def __init__(
        self,
        universe: VertexUniverse,
        facets: Iterable[FaceLike] = (),
        *,
        ground: int | None = None,
        void: bool = False,
    ) -> None:
        self.universe = universe
        self.ground = universe.full if ground is None else universe.as_mask(ground)
        masks = [universe.as_mask(f) for f in facets]
        for m in masks:
            if m & ~self.ground:
                raise InputError(f"face {universe.names(m)} is outside the ground set")
        if void and masks:
            raise InputError("the void complex has no facets")
        normalized = maximal_faces(masks)
        self.facets: tuple[int, ...] = () if normalized == (0,) else normalized
        self.is_void = bool(void)
        self._faces: dict[int, tuple[int, ...]] | None = None
        self._lock = threading.Lock()

    def __reduce__(self):
        return (_rebuild, (self.universe, self.facets, self.ground, self.is_void))

    # -- identity ---------------------------------------------------------

    def _key(self) -> tuple:
        return (self.universe.size, self.ground, self.facets, self.is_void)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self) -> int:
        return hash(self._key())

    def __repr__(self) -> str:
        if self.is_void:
            return "SimplicialComplex(void)"
        if not self.facets:
            return "SimplicialComplex({∅})"
        shown = ", ".join("".join(self.universe.names(f)) if f else "∅" for f in self.facets[:8])
        more = ", ..." if len(self.facets) > 8 else ""
        return f"SimplicialComplex(facets=[{shown}{more}])"

    # -- basic queries ----------------------------------------------------

    @property
    def is_empty_complex(self) -> bool:
        """True for ``{∅}``."""
        return not self.is_void and not self.facets

    @property
    def vertex_count(self) -> int:
        """Number of vertices in the ground set (variables of the polynomial ring)."""
        return self.ground.bit_count()

    def generators(self) -> tuple[int, ...]:
        """Facets, with ``{∅}`` reported as the single facet ``0``."""
        if self.is_void:
            return ()
        return self.facets or (0,)

    def dimension(self) -> int | float:
        """``max |F| - 1``; ``-1`` for ``{∅}`` and ``-inf`` for the void complex."""
        if self.is_void:
            return -math.inf
        if not self.facets:
            return -1
        return max(f.bit_count() for f in self.facets) - 1

    def __contains__(self, face: FaceLike) -> bool:
        mask = self.universe.as_mask(face)
        return any(mask & f == mask for f in self.generators())

    def cone_apex(self) -> int:
        """Mask of vertices lying in every facet (nonzero means a cone)."""
        gens = self.generators()
        if not gens:
            return 0
        apex = gens[0]
        for f in gens[1:]:
            apex &= f
        return apex

    def face_table(self) -> dict[int, tuple[int, ...]]:
        """All faces grouped by dimension, each group sorted by mask value."""
        if self._faces is None:
            with self._lock:
                if self._faces is None:
                    self._faces = faces_by_dimension(self.generators())
        return self._faces

    def faces(self, r: int | None = None) -> tuple[int, ...]:
        """Faces of dimension ``r`` (all faces when ``r`` is None)."""
        table = self.face_table()
        if r is None:
            return tuple(sorted(f for group in table.values() for f in group))
        return table.get(r, ())

    def f_vector(self) -> list[int]:
        """``(f_-1, f_0, ..., f_{e-1})`` with ``e = dim + 1``."""
        if self.is_void:
            raise InputError("the void complex has no f-vector")
        table = self.face_table()
        return [len(table.get(r, ())) for r in range(-1, int(self.dimension()) + 1)]

    # -- constructions ----------------------------------------------------

    def _derive(self, facets: Iterable[int], ground: int | None = None) -> "SimplicialComplex":
        return SimplicialComplex(self.universe, facets, ground=self.ground if ground is None else ground)

    def skeleton(self, r: int) -> "SimplicialComplex":
        """Faces of dimension at most ``r``."""
        if r < -1:
            raise InputError("skeleton degree must be at least -1")
        if self.is_void:
            return self
        out: list[int] = []
        for f in self.generators():
            if f.bit_count() <= r + 1:
                out.append(f)
            else:
                out.extend(subsets_of_size(f, r + 1))
        return self._derive(out)

    def restriction(self, vertices: FaceLike) -> "SimplicialComplex":
        """Faces contained in ``vertices``; the result lives on that vertex set."""
        v = self.universe.as_mask(vertices) & self.ground
        if self.is_void:
            return SimplicialComplex(self.universe, ground=v, void=True)
        return self._derive((f & v for f in self.generators()), ground=v)

    def join(self, other: "SimplicialComplex") -> "SimplicialComplex":
        """The join: faces are unions ``F ∪ G`` of a face from each factor.

        Factors on one universe with disjoint ground sets stay in that
        universe. Otherwise the result lives on ``self.universe ⊔ other.universe``.
        """
        if self.universe == other.universe and not self.ground & other.ground:
            universe, shift = self.universe, 0
        else:
            universe, shift = self.universe.disjoint_union(other.universe), self.universe.size
        ground = self.ground | (other.ground << shift)
        if self.is_void or other.is_void:
            return SimplicialComplex(universe, ground=ground, void=True)
        facets = [f | (g << shift) for f in self.generators() for g in other.generators()]
        return SimplicialComplex(universe, facets, ground=ground)

    def minimal_nonfaces(self) -> tuple[int, ...]:
        """Inclusion-minimal subsets of the ground set that are not faces."""
        if self.is_void:
            raise InputError("minimal non-faces of the void complex are undefined")
        faces = set(self.faces())
        found: set[int] = set()
        for f in faces:
            for v in bits(self.ground & ~f):
                g = f | (1 << v)
                if g in faces or g in found:
                    continue
                if all((g ^ (1 << u)) in faces for u in bits(g)):
                    found.add(g)
        return tuple(sorted(found))

    def alexander_dual(self) -> "SimplicialComplex":
        """``{F ⊆ ground : ground \\ F ∉ Δ}``.

        Facets of the dual are the complements of the minimal non-faces. The
        full simplex dualizes to the void complex and vice versa.
        """
        if self.is_void:
            return SimplicialComplex(self.universe, [self.ground], ground=self.ground)
        nonfaces = self.minimal_nonfaces()
        if not nonfaces:
            return SimplicialComplex(self.universe, ground=self.ground, void=True)
        return self._derive(self.ground & ~m for m in nonfaces)


def _rebuild(universe, facets, ground, void):
    return SimplicialComplex(universe, facets, ground=ground, void=void)


def faces_by_dimension(generators: Iterable[int]) -> dict[int, tuple[int, ...]]:
    """Downward closure of ``generators`` grouped by dimension."""
    seen: set[int] = set()
    for g in generators:
        if g in seen:
            continue
        seen.update(submasks(g))
    table: dict[int, list[int]] = {}
    for f in seen:
        table.setdefault(f.bit_count() - 1, []).append(f)
    return {r: tuple(sorted(group)) for r, group in sorted(table.items())}


def complex_from_facets(universe: VertexUniverse, facets: Iterable[FaceLike]) -> SimplicialComplex:
    return SimplicialComplex(universe, facets)


def void_complex(universe: VertexUniverse, ground: int | None = None) -> SimplicialComplex:
    return SimplicialComplex(universe, ground=ground, void=True)


def empty_complex(universe: VertexUniverse, ground: int | None = None) -> SimplicialComplex:
    """The complex ``{∅}``."""
    return SimplicialComplex(universe, ground=ground)


def simplex(universe: VertexUniverse, vertices: FaceLike | None = None) -> SimplicialComplex:
    """The full simplex on ``vertices`` (default: the whole universe)."""
    mask = universe.full if vertices is None else universe.as_mask(vertices)
    return SimplicialComplex(universe, [mask], ground=mask)
