"""Graded Betti numbers of Stanley-Reisner rings via Hochster's formula.

For a complex ``Δ`` on ``n`` vertices,

    β_{i,V}(R/I_Δ) = dim H̃_{|V|-i-1}(Δ_V; k)      (V ⊆ [n] squarefree)

and the N-graded numbers sum these over ``|V| = j``. The sweep visits all
``2^n`` restrictions, skipping those that are cones (a vertex lying in every
facet of ``Δ_V``), since cones are acyclic.

The sweep can be split across worker processes. Subsets are numbered by the
integers ``0 .. 2^n - 1`` and cut into contiguous ranges, i.e. by their
high-order bits; the partial tables are disjoint and merge by union, so the
result does not depend on the number of workers.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from math import comb
from typing import Iterable, Mapping, Union

from .exceptions import InputError, ResourceLimitError
from .homology import GF2, FieldSpec, homology_from_faces
from .hypergraph import Hypergraph
from .simplicial import SimplicialComplex, VertexUniverse, bits, faces_by_dimension, maximal_faces

DEFAULT_LIMIT = 24

ComplexLike = Union[SimplicialComplex, Hypergraph]


def binom(n: int, k: int) -> int:
    """Binomial coefficient, zero whenever ``k < 0``, ``n < 0`` or ``n < k``."""
    if k < 0 or n < 0 or n < k:
        return 0
    return comb(n, k)


# --------------------------------------------------------------------------
# tables
# --------------------------------------------------------------------------

class BettiTable:
    """N-graded Betti numbers ``β_{i,j}`` of ``R/I`` with ``R`` on ``n`` variables.

    Only nonzero entries are stored; missing entries read as zero. Equality
    compares ``n`` and the entries, not the field.
    """

    __slots__ = ("entries", "n", "field")

    def __init__(self, entries: Mapping[tuple[int, int], int], n: int, field: FieldSpec | None = None):
        self.entries: dict[tuple[int, int], int] = {
            (int(i), int(j)): int(b) for (i, j), b in sorted(entries.items()) if b
        }
        self.n = int(n)
        self.field = field

    def __getitem__(self, key: tuple[int, int]) -> int:
        return self.entries.get(key, 0)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BettiTable):
            return NotImplemented
        return self.n == other.n and self.entries == other.entries

    def __repr__(self) -> str:
        return f"BettiTable(n={self.n}, totals={self.totals()})"

    def totals(self) -> list[int]:
        """Total Betti numbers ``β_0, ..., β_pd``."""
        if not self.entries:
            return []
        out = [0] * (self.projective_dimension() + 1)
        for (i, _), b in self.entries.items():
            out[i] += b
        return out

    def projective_dimension(self) -> int:
        if not self.entries:
            raise InputError("projective dimension of an empty table")
        return max(i for i, _ in self.entries)

    def depth(self) -> int:
        return depth_via_ab(self.n, self.projective_dimension())

    def is_linear(self, d: int) -> bool:
        return has_linear_resolution(self, d)

    def linear_degree(self) -> int | None:
        """The ``d`` for which the resolution is ``d``-linear, if any."""
        firsts = {j for (i, j) in self.entries if i == 1}
        if len(firsts) != 1:
            return None
        d = firsts.pop()
        return d if self.is_linear(d) else None

    def hilbert_numerator(self) -> list[int]:
        return hilbert_numerator_from_betti(self)


class MultigradedBettiTable:
    """``β_{i,V}`` keyed by homological degree and squarefree degree mask."""

    __slots__ = ("entries", "universe", "n", "field")

    def __init__(self, entries: Mapping[tuple[int, int], int], universe: VertexUniverse, n: int,
                 field: FieldSpec | None = None):
        self.entries = {k: int(b) for k, b in sorted(entries.items()) if b}
        self.universe = universe
        self.n = n
        self.field = field

    def __getitem__(self, key: tuple[int, int]) -> int:
        return self.entries.get(key, 0)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MultigradedBettiTable):
            return NotImplemented
        return self.n == other.n and self.entries == other.entries

    def graded(self) -> BettiTable:
        out: dict[tuple[int, int], int] = {}
        for (i, v), b in self.entries.items():
            key = (i, v.bit_count())
            out[key] = out.get(key, 0) + b
        return BettiTable(out, self.n, self.field)


@dataclass(frozen=True)
class HilbertSeries:
    """``numerator(t) / (1 - t)^denominator_power`` with dense integer coefficients."""

    numerator: tuple[int, ...]
    denominator_power: int

    def __post_init__(self) -> None:
        coeffs = list(self.numerator)
        while len(coeffs) > 1 and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "numerator", tuple(coeffs))

    def __str__(self) -> str:
        return f"({format_polynomial(self.numerator)}) / (1 - t)^{self.denominator_power}"


def format_polynomial(coeffs: Iterable[int], var: str = "t") -> str:
    terms = []
    for k, c in enumerate(coeffs):
        if not c:
            continue
        mag = abs(c)
        body = str(mag) if k == 0 else (("" if mag == 1 else str(mag)) + (var if k == 1 else f"{var}^{k}"))
        sign = "-" if c < 0 else "+"
        terms.append((sign, body))
    if not terms:
        return "0"
    first_sign, first = terms[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out


# --------------------------------------------------------------------------
# the Hochster sweep
# --------------------------------------------------------------------------

def _as_complex(obj: ComplexLike) -> SimplicialComplex:
    if isinstance(obj, Hypergraph):
        return obj.independence_complex()
    return obj


def restriction_homology(generators: tuple[int, ...], v: int, f: FieldSpec) -> dict[int, int]:
    """Nonzero ``dim H̃_r(Δ_V)`` for the complex generated by ``generators``."""
    if v == 0:
        return {-1: 1}
    cut = {g & v for g in generators}
    apex = v
    for g in cut:
        apex &= g
    if apex:
        return {}
    restricted = maximal_faces(cut)
    apex = v
    for g in restricted:
        apex &= g
    if apex:
        return {}
    return homology_from_faces(faces_by_dimension(restricted), f)


def _scatter(k: int, positions: tuple[int, ...]) -> int:
    v = 0
    for pos in positions:
        if k & 1:
            v |= 1 << pos
        k >>= 1
        if not k:
            break
    return v


def _sweep_range(generators: tuple[int, ...], ground: int, f: FieldSpec, lo: int, hi: int) -> dict[tuple[int, int], int]:
    positions = tuple(bits(ground))
    contiguous = ground == (1 << len(positions)) - 1
    out: dict[tuple[int, int], int] = {}
    for k in range(lo, hi):
        v = k if contiguous else _scatter(k, positions)
        dims = restriction_homology(generators, v, f)
        if dims:
            size = v.bit_count()
            for r, d in dims.items():
                out[(size - r - 1, v)] = d
    return out


def _resolve_jobs(jobs: int | None) -> int:
    if jobs is None or jobs == 0:
        return os.cpu_count() or 1
    if jobs < 0:
        raise InputError("jobs must be positive")
    return jobs


def hochster_multigraded(
    cx: ComplexLike,
    f: FieldSpec = GF2,
    *,
    limit: int = DEFAULT_LIMIT,
    jobs: int | None = 1,
) -> MultigradedBettiTable:
    """Multigraded Betti numbers of the Stanley-Reisner ring of ``cx``.

    ``jobs`` sets the number of worker processes (None or 0 means one per
    CPU). Raises :class:`ResourceLimitError` when the ground set has more
    than ``limit`` vertices.
    """
    cx = _as_complex(cx)
    if cx.is_void:
        raise InputError("the void complex has no Stanley-Reisner ring")
    m = cx.vertex_count
    if m > limit:
        raise ResourceLimitError(f"{m} vertices exceeds the enumeration limit {limit}")
    gens = cx.generators()
    total = 1 << m
    workers = min(_resolve_jobs(jobs), total)
    if workers <= 1:
        entries = _sweep_range(gens, cx.ground, f, 0, total)
    else:
        # split by high-order bits into a power-of-two number of ranges
        chunks = 1
        while chunks < 4 * workers and chunks < total:
            chunks *= 2
        step = total // chunks
        entries = {}
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = [
                pool.submit(_sweep_range, gens, cx.ground, f, c * step, (c + 1) * step)
                for c in range(chunks)
            ]
            for fut in futures:
                entries.update(fut.result())
    return MultigradedBettiTable(entries, cx.universe, m, f)


def hochster_graded(
    cx: ComplexLike,
    f: FieldSpec = GF2,
    *,
    limit: int = DEFAULT_LIMIT,
    jobs: int | None = 1,
) -> BettiTable:
    """N-graded Betti numbers, the multigraded table summed over ``|V| = j``."""
    return hochster_multigraded(cx, f, limit=limit, jobs=jobs).graded()


# --------------------------------------------------------------------------
# ring statistics
# --------------------------------------------------------------------------

def projective_dimension(table: BettiTable) -> int:
    return table.projective_dimension()


def depth_via_ab(n: int, pd: int) -> int:
    """Auslander-Buchsbaum: ``depth = n - pd`` over a polynomial ring in ``n`` variables."""
    if pd > n or pd < 0:
        raise InputError(f"projective dimension {pd} out of range for {n} variables")
    return n - pd


def krull_dimension(cx: SimplicialComplex) -> int:
    """``dim R/I_Δ = dim Δ + 1``."""
    if cx.is_void:
        raise InputError("the void complex has no Stanley-Reisner ring")
    return int(cx.dimension()) + 1


def is_cohen_macaulay(cx: ComplexLike, f: FieldSpec = GF2, *, limit: int = DEFAULT_LIMIT,
                      jobs: int | None = 1, table: BettiTable | None = None) -> bool:
    """depth (from the Hochster table) equals Krull dimension."""
    cx = _as_complex(cx)
    if table is None:
        table = hochster_graded(cx, f, limit=limit, jobs=jobs)
    return depth_via_ab(cx.vertex_count, table.projective_dimension()) == krull_dimension(cx)


def has_linear_resolution(table: BettiTable, d: int) -> bool:
    """Every entry with ``i > 0`` sits at ``j = i + d - 1``."""
    if d < 1:
        raise InputError("linearity degree must be at least 1")
    return all(j == i + d - 1 for (i, j) in table.entries if i > 0)


# --------------------------------------------------------------------------
# Hilbert series and the f-vector route
# --------------------------------------------------------------------------

def hilbert_from_fvector(cx: SimplicialComplex) -> HilbertSeries:
    """``Σ_r f_{r-1} t^r (1-t)^{n-r}`` over ``(1-t)^n``, expanded exactly."""
    fvec = cx.f_vector()
    n = cx.vertex_count
    coeffs = [0] * (n + 1)
    for r, fr in enumerate(fvec):
        for k in range(n - r + 1):
            coeffs[r + k] += fr * (-1) ** k * comb(n - r, k)
    return HilbertSeries(tuple(coeffs), n)


def hilbert_numerator_from_betti(table: BettiTable) -> list[int]:
    """``S(t) = Σ_{i,j} (-1)^i β_{i,j} t^j`` as a dense coefficient list."""
    top = max((j for _, j in table.entries), default=0)
    coeffs = [0] * (top + 1)
    for (i, j), b in table.entries.items():
        coeffs[j] += (-1) ** i * b
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def betti_from_fvector_linear(cx: SimplicialComplex, d: int) -> BettiTable:
    """Betti numbers read off the f-vector, assuming a ``d``-linear resolution.

    ``β_{i,j} = Σ_{r=0}^{e} (-1)^{j-i-r} f_{r-1} C(n-r, j-r)`` with
    ``j = i + d - 1`` and ``e = dim Δ + 1``. The result is meaningless when the
    resolution is not actually linear.
    """
    if d < 1:
        raise InputError("linearity degree must be at least 1")
    fvec = cx.f_vector()
    n = cx.vertex_count
    entries = {(0, 0): 1}
    for i in range(1, n + 1):
        j = i + d - 1
        beta = sum((-1) ** (j - i - r) * fr * binom(n - r, j - r) for r, fr in enumerate(fvec))
        if beta:
            entries[(i, j)] = beta
    return BettiTable(entries, n)
