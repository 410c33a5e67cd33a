"""Complete hypergraph families and closed forms for their Betti numbers.

Families, on the vertex set ``[n1] ⊔ ... ⊔ [nt]`` with ``N = n1 + ... + nt``:

``knd``           ``K_n^d``: every d-subset of ``[n]`` is an edge.
``multipartite``  ``K^d_{n1..nt}``: every d-subset not inside a single block.
``da``            ``K^{d(a)}``: d-subsets taking exactly ``a_s`` vertices from block s.
``dI``            ``K^{d(I)}``: d-subsets taking ``a_s ∈ I_s = [α_s, β_s]`` vertices
                  from block s.

All closed forms use the binomial convention of :func:`binom`, which is zero
for negative arguments; the ``j_s = 0`` terms of the multipartite formula
rely on it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, product
from math import prod
from typing import Iterator, Sequence

from .betti import DEFAULT_LIMIT, BettiTable, binom, hochster_multigraded
from .exceptions import InputError
from .homology import GF2, FieldSpec
from .hypergraph import Hypergraph
from .simplicial import SimplicialComplex, VertexUniverse, mask_of, simplex

FAMILY_KINDS = ("knd", "multipartite", "da", "dI")


def compositions(total: int, bounds: Sequence[tuple[int, int]]) -> Iterator[tuple[int, ...]]:
    """Tuples ``(a_1..a_t)`` with ``lo_s <= a_s <= hi_s`` summing to ``total``."""
    if not bounds:
        if total == 0:
            yield ()
        return
    (lo, hi), rest = bounds[0], bounds[1:]
    rest_lo = sum(b[0] for b in rest)
    rest_hi = sum(b[1] for b in rest)
    for a in range(max(lo, total - rest_hi), min(hi, total - rest_lo) + 1):
        for tail in compositions(total - a, rest):
            yield (a,) + tail


def _universe(ns: Sequence[int]) -> VertexUniverse:
    if any(n < 0 for n in ns):
        raise InputError("block sizes must be nonnegative")
    sizes = [n for n in ns if n]
    if len(sizes) != len(ns):
        raise InputError("block sizes must be positive")
    return VertexUniverse.from_block_sizes(sizes) if sizes else VertexUniverse(0)


def _edges_with_profile(blocks: Sequence[tuple[int, ...]], profile: Sequence[int]) -> Iterator[int]:
    """Edges taking exactly ``profile[s]`` vertices from block ``s``."""
    choices = [combinations(block, a) for block, a in zip(blocks, profile)]
    for pick in product(*(list(c) for c in choices)):
        yield mask_of(v for part in pick for v in part)


# --------------------------------------------------------------------------
# constructors
# --------------------------------------------------------------------------

def make_knd(n: int, d: int) -> Hypergraph:
    if d < 1:
        raise InputError("d must be at least 1")
    if n < 0:
        raise InputError("n must be nonnegative")
    universe = VertexUniverse.from_block_sizes([n]) if n else VertexUniverse(0)
    return Hypergraph(universe, (mask_of(c) for c in combinations(range(n), d)))


def make_multipartite(ns: Sequence[int], d: int) -> Hypergraph:
    if not ns:
        raise InputError("need at least one block")
    if d < 2:
        raise InputError("d must be at least 2")
    universe = _universe(ns)
    block_masks = universe.block_masks
    edges = (
        m for m in (mask_of(c) for c in combinations(range(universe.size), d))
        if not any(m & b == m for b in block_masks)
    )
    return Hypergraph(universe, edges)


def make_da(ns: Sequence[int], a: Sequence[int]) -> Hypergraph:
    if len(ns) != len(a):
        raise InputError("n and a must have the same length")
    if any(x < 1 for x in a):
        raise InputError("every a_s must be at least 1")
    universe = _universe(ns)
    if any(x > n for x, n in zip(a, ns)):
        return Hypergraph(universe)
    return Hypergraph(universe, _edges_with_profile(universe.blocks, a))


@dataclass(frozen=True)
class IntervalSpec:
    """Per-block intervals ``[α_s, β_s]`` of admissible edge intersections."""

    bounds: tuple[tuple[int, int], ...]

    @classmethod
    def parse(cls, text: str) -> "IntervalSpec":
        """``"1:2,1:1,2:3"`` or ``"1:2,1,2:3"`` (a lone number is a singleton)."""
        bounds = []
        for part in text.split(","):
            part = part.strip()
            if not part:
                raise InputError(f"empty interval in {text!r}")
            lo, _, hi = part.partition(":")
            try:
                bounds.append((int(lo), int(hi) if hi else int(lo)))
            except ValueError:
                raise InputError(f"cannot parse interval {part!r}") from None
        return cls(tuple(bounds))

    def __str__(self) -> str:
        return ",".join(f"{lo}:{hi}" for lo, hi in self.bounds)

    def check(self, ns: Sequence[int]) -> None:
        if len(self.bounds) != len(ns):
            raise InputError("need one interval per block")
        for (lo, hi), n in zip(self.bounds, ns):
            if not 0 <= lo <= hi <= n:
                raise InputError(f"interval [{lo}, {hi}] is not inside [0, {n}]")


def normalize_intervals(spec: IntervalSpec, ns: Sequence[int], d: int, *, strict: bool = False) -> IntervalSpec:
    """Shrink intervals until ``α_s + Σ_{j≠s} β_j >= d`` and ``β_s + Σ_{j≠s} α_j <= d``.

    Values dropped this way belong to no edge, so the hypergraph is unchanged.
    With ``strict=True`` any needed shrinking is reported as an error instead.
    """
    spec.check(ns)
    lo = [b[0] for b in spec.bounds]
    hi = [b[1] for b in spec.bounds]
    changed = True
    while changed:
        changed = False
        for s in range(len(lo)):
            new_lo = max(lo[s], d - (sum(hi) - hi[s]))
            new_hi = min(hi[s], d - (sum(lo) - lo[s]))
            if new_lo > new_hi:
                raise InputError(f"no composition of {d} fits the intervals {spec}")
            if (new_lo, new_hi) != (lo[s], hi[s]):
                lo[s], hi[s] = new_lo, new_hi
                changed = True
    out = IntervalSpec(tuple(zip(lo, hi)))
    if strict and out != spec:
        raise InputError(f"intervals {spec} are not normalized for d={d} (normalized: {out})")
    return out


def make_dI(ns: Sequence[int], intervals: IntervalSpec, d: int, *, strict: bool = False) -> Hypergraph:
    if d < 1:
        raise InputError("d must be at least 1")
    norm = normalize_intervals(intervals, ns, d, strict=strict)
    universe = _universe(ns)
    edges: set[int] = set()
    for profile in compositions(d, norm.bounds):
        edges.update(_edges_with_profile(universe.blocks, profile))
    return Hypergraph(universe, edges)


# --------------------------------------------------------------------------
# closed forms
# --------------------------------------------------------------------------

def closed_betti_knd(n: int, d: int) -> BettiTable:
    """``β_{i,j}(K_n^d) = C(n, j) C(j-1, d-1)`` at ``j = i + d - 1``."""
    entries = {(0, 0): 1}
    for i in range(1, n - d + 2):
        j = i + d - 1
        entries[(i, j)] = binom(n, j) * binom(j - 1, d - 1)
    return BettiTable(entries, n)


def closed_betti_multipartite(ns: Sequence[int], d: int) -> BettiTable:
    """Betti numbers of ``K^d_{n1..nt}``: those of ``K_N^d`` minus a block correction."""
    big_n = sum(ns)
    entries = {(0, 0): 1}
    full = [(0, n) for n in ns]
    for i in range(1, big_n - d + 2):
        j = i + d - 1
        correction = sum(
            prod(binom(n, js) for n, js in zip(ns, parts)) * sum(binom(js - 1, d - 1) for js in parts)
            for parts in compositions(j, full)
        )
        entries[(i, j)] = binom(big_n, j) * binom(j - 1, d - 1) - correction
    return BettiTable(entries, big_n)


def knd_linear_betti(n: int, a: int, r: int) -> int:
    """``β_{r, r+a-1}(K_n^a) = C(n, r+a-1) C(r+a-2, a-1)``."""
    return binom(n, r + a - 1) * binom(r + a - 2, a - 1)


def closed_betti_da(ns: Sequence[int], a: Sequence[int]) -> BettiTable:
    """Sum over ``r_1 + ... + r_t = i + t - 1`` (``r_l >= 1``) of products of ``K_{n_l}^{a_l}`` numbers."""
    if len(ns) != len(a):
        raise InputError("n and a must have the same length")
    if any(x < 1 for x in a):
        raise InputError("every a_s must be at least 1")
    big_n, d, t = sum(ns), sum(a), len(ns)
    entries = {(0, 0): 1}
    for i in range(1, big_n - d + 2):
        bounds = [(1, i + t - 1)] * t
        beta = sum(
            prod(knd_linear_betti(n, x, r) for n, x, r in zip(ns, a, rs))
            for rs in compositions(i + t - 1, bounds)
        )
        entries[(i, i + d - 1)] = beta
    return BettiTable(entries, big_n)


def _uniformity(cx: SimplicialComplex) -> int | None:
    sizes = {m.bit_count() for m in cx.minimal_nonfaces()}
    return sizes.pop() if len(sizes) == 1 else None


def restriction_homology_table(cx: SimplicialComplex, f: FieldSpec = GF2, *, limit: int = DEFAULT_LIMIT,
                               jobs: int | None = 1) -> dict[tuple[int, int], int]:
    """``{(j, r): Σ_{|V|=j} dim H̃_r(Δ_V)}`` over all nonempty ``V``."""
    table: dict[tuple[int, int], int] = {}
    for (i, v), b in hochster_multigraded(cx, f, limit=limit, jobs=jobs).entries.items():
        j = v.bit_count()
        if j == 0:
            continue
        key = (j, j - i - 1)
        table[key] = table.get(key, 0) + b
    return table


def closed_betti_product(
    components: Sequence[SimplicialComplex | Hypergraph],
    f: FieldSpec = GF2,
    *,
    limit: int = DEFAULT_LIMIT,
    jobs: int | None = 1,
    fast_path: bool | None = None,
) -> BettiTable:
    """Betti numbers of ``H_1 · ... · H_t`` from the restriction homology of each factor.

    ``β_{i,j} = Σ_{j_1+..+j_t = j, j_l >= 1} Σ_{r_1+..+r_t = j-i-(2t-1)} Π_l h_l(j_l, r_l)``
    where ``h_l(j, r)`` sums ``dim H̃_r`` over the ``j``-vertex restrictions of
    the ``l``-th independence complex. Degrees ``r_l = -1`` are included so
    that factors with singleton edges (``K_n^1``) are handled.

    When every factor is ``a_l``-uniform with an ``a_l``-linear resolution only
    ``r_l = a_l - 2`` contributes and the inner sum collapses. ``fast_path``
    forces (True) or forbids (False) that shortcut; by default it is used
    whenever it applies.
    """
    if len(components) < 2:
        raise InputError("a product needs at least two factors")
    complexes = [c.independence_complex() if isinstance(c, Hypergraph) else c for c in components]
    t = len(complexes)
    big_n = sum(c.vertex_count for c in complexes)
    tables = [restriction_homology_table(c, f, limit=limit, jobs=jobs) for c in complexes]

    degrees: list[int | None] = []
    for c, h in zip(complexes, tables):
        a = _uniformity(c)
        linear = a is not None and all(r == a - 2 for (_, r) in h)
        degrees.append(a if linear else None)
    usable = all(a is not None for a in degrees)
    if fast_path and not usable:
        raise InputError("the linear shortcut needs uniform factors with linear resolutions")
    use_fast = usable if fast_path is None else fast_path

    entries: dict[tuple[int, int], int] = {(0, 0): 1}
    if use_fast:
        per_size = [{j: b for (j, r), b in h.items() if r == a - 2} for h, a in zip(tables, degrees)]
        shift = sum(degrees) - 1  # type: ignore[arg-type]
        for combo in product(*(sorted(p.items()) for p in per_size)):
            j = sum(js for js, _ in combo)
            key = (j - shift, j)
            entries[key] = entries.get(key, 0) + prod(b for _, b in combo)
    else:
        for combo in product(*(sorted(h.items()) for h in tables)):
            j = sum(js for (js, _), _ in combo)
            r_sum = sum(r for (_, r), _ in combo)
            i = j - r_sum - (2 * t - 1)
            key = (i, j)
            entries[key] = entries.get(key, 0) + prod(b for _, b in combo)
    return BettiTable(entries, big_n, f)


# --------------------------------------------------------------------------
# combinatorial identities
# --------------------------------------------------------------------------

def check_identity_A(n: int, d: int, j: int) -> bool:
    """``Σ_{r=0}^{d-1} (-1)^{d-1-r} C(n,r) C(n-r,j-r) == C(n,j) C(j-1,d-1)``."""
    lhs = sum((-1) ** (d - 1 - r) * binom(n, r) * binom(n - r, j - r) for r in range(d))
    return lhs == binom(n, j) * binom(j - 1, d - 1)


def multipartite_top_face_size(ns: Sequence[int], d: int) -> int:
    """Largest face cardinality of the independence complex of ``K^d_{n1..nt}``."""
    return max(max(ns), d - 1)


def check_identity_B(ns: Sequence[int], d: int, j: int) -> bool:
    """The two expressions for ``β_{i,j}(K_N^d) - β_{i,j}(K^d_{n1..nt})`` agree."""
    big_n = sum(ns)
    e = multipartite_top_face_size(ns, d)
    lhs = sum(
        (-1) ** (d - r) * binom(big_n - r, j - r) * sum(binom(n, r) for n in ns)
        for r in range(d, e + 1)
    )
    rhs = sum(
        prod(binom(n, js) for n, js in zip(ns, parts)) * sum(binom(js - 1, d - 1) for js in parts)
        for parts in compositions(j, [(0, n) for n in ns])
    )
    return lhs == rhs


# --------------------------------------------------------------------------
# structural predictions
# --------------------------------------------------------------------------

def multipartite_fvector(ns: Sequence[int], d: int) -> list[int]:
    """``f_{r-1} = C(N, r)`` for ``r <= d-1`` and ``Σ_s C(n_s, r)`` beyond."""
    big_n = sum(ns)
    e = multipartite_top_face_size(ns, d)
    return [binom(big_n, r) if r <= d - 1 else sum(binom(n, r) for n in ns) for r in range(e + 1)]


def cm_predicate_multipartite(ns: Sequence[int], d: int) -> bool:
    """Cohen-Macaulay exactly when every block has at most ``d - 1`` vertices."""
    return all(n <= d - 1 for n in ns)


def cm_predicate_da(ns: Sequence[int], a: Sequence[int]) -> bool:
    """Cohen-Macaulay exactly when ``a_s = n_s`` for all blocks but possibly one,
    and that block maximizes ``a_i + Σ_{j≠i} n_j``."""
    big_n = sum(ns)
    scores = [x + big_n - n for n, x in zip(ns, a)]
    best = max(scores)
    for i in range(len(ns)):
        others_full = all(a[s] == ns[s] for s in range(len(ns)) if s != i)
        if others_full and scores[i] == best:
            return True
    return False


def da_dual_as_join(ns: Sequence[int], a: Sequence[int]) -> SimplicialComplex:
    """Join over blocks of the ``(n_s - a_s - 1)``-skeleton of the simplex on block ``s``."""
    universe = _universe(ns)
    result: SimplicialComplex | None = None
    for block, n, x in zip(universe.blocks, ns, a):
        piece = simplex(universe, block).skeleton(n - x - 1)
        result = piece if result is None else result.join(piece)
    assert result is not None
    return result


# --------------------------------------------------------------------------
# family specs
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class FamilySpec:
    """A member of one of the four families; serializes to the FamilySpec JSON object."""

    kind: str
    n: tuple[int, ...]
    d: int | None = None
    a: tuple[int, ...] = ()
    intervals: IntervalSpec | None = None
    strict_intervals: bool = field(default=False, compare=False)

    def __post_init__(self) -> None:
        if self.kind not in FAMILY_KINDS:
            raise InputError(f"unknown family {self.kind!r}; choose from {', '.join(FAMILY_KINDS)}")
        object.__setattr__(self, "n", tuple(int(x) for x in self.n))
        object.__setattr__(self, "a", tuple(int(x) for x in self.a))
        if not self.n:
            raise InputError("n must list at least one block size")
        if self.kind == "knd":
            if len(self.n) != 1:
                raise InputError("knd takes a single n")
            if self.d is None:
                raise InputError("knd needs d")
        elif self.kind == "multipartite":
            if self.d is None:
                raise InputError("multipartite needs d")
        elif self.kind == "da":
            if len(self.a) != len(self.n):
                raise InputError("da needs one a_s per block")
            if self.d is None:
                object.__setattr__(self, "d", sum(self.a))
            elif self.d != sum(self.a):
                raise InputError(f"d={self.d} does not equal sum(a)={sum(self.a)}")
        elif self.kind == "dI":
            if self.d is None or self.intervals is None:
                raise InputError("dI needs d and intervals")
            self.intervals.check(self.n)

    @property
    def degree(self) -> int:
        assert self.d is not None
        return self.d

    @property
    def vertex_count(self) -> int:
        return sum(self.n)

    def normalized_intervals(self) -> IntervalSpec:
        assert self.intervals is not None
        return normalize_intervals(self.intervals, self.n, self.degree, strict=self.strict_intervals)

    def build(self) -> Hypergraph:
        if self.kind == "knd":
            return make_knd(self.n[0], self.degree)
        if self.kind == "multipartite":
            return make_multipartite(self.n, self.degree)
        if self.kind == "da":
            return make_da(self.n, self.a)
        assert self.intervals is not None
        return make_dI(self.n, self.intervals, self.degree, strict=self.strict_intervals)

    def has_closed_form(self) -> bool:
        return self.kind in {"knd", "multipartite", "da"}

    def closed_betti(self) -> BettiTable:
        if self.kind == "knd":
            return closed_betti_knd(self.n[0], self.degree)
        if self.kind == "multipartite":
            return closed_betti_multipartite(self.n, self.degree)
        if self.kind == "da":
            return closed_betti_da(self.n, self.a)
        raise InputError("no closed form for dI hypergraphs; use the Hochster or f-vector method")

    def product_factors(self) -> list[Hypergraph] | None:
        """``K^{d(a)} = Π K_{n_s}^{a_s}``; None for other families."""
        if self.kind != "da":
            return None
        return [make_knd(n, x) for n, x in zip(self.n, self.a)]

    def expected_pd(self) -> int | None:
        """Projective dimension predicted for the family (when edges exist)."""
        if self.kind in {"knd", "multipartite", "da"} and self.vertex_count >= self.degree:
            if self.kind == "da" and any(x > n for x, n in zip(self.a, self.n)):
                return None
            return self.vertex_count - self.degree + 1
        return None

    def cm_prediction(self) -> bool | None:
        if self.kind == "knd":
            return True
        if self.kind == "multipartite":
            return cm_predicate_multipartite(self.n, self.degree)
        if self.kind == "da":
            return cm_predicate_da(self.n, self.a)
        return None

    def to_json(self) -> dict:
        out: dict = {"kind": self.kind, "n": list(self.n), "d": self.d}
        if self.kind == "da":
            out["a"] = list(self.a)
        if self.intervals is not None:
            out["intervals"] = [list(b) for b in self.intervals.bounds]
        return out

    @classmethod
    def from_json(cls, data: dict) -> "FamilySpec":
        intervals = data.get("intervals")
        return cls(
            kind=data["kind"],
            n=tuple(data["n"]),
            d=data.get("d"),
            a=tuple(data.get("a") or ()),
            intervals=IntervalSpec(tuple(tuple(b) for b in intervals)) if intervals else None,
        )
