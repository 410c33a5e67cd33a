"""Reduced simplicial homology over GF(p) and over the rationals.

Chain groups run from degree -1 (spanned by the empty face) up to the
dimension of the complex. Boundary signs follow the ascending-index order of
a face's vertices: removing the vertex in position ``k`` (0-based) carries
the sign ``(-1)**k``.

Ranks are exact. GF(2) uses Python integers as packed bit rows, odd primes
use sparse modular elimination, and the rationals use sparse fraction-free
elimination over unbounded integers (rows are kept primitive by dividing out
their content).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd
from typing import Iterable, Mapping, Sequence

import numpy as np

from .exceptions import InputError
from .simplicial import SimplicialComplex

_MAX_PRIME = 2**31 - 1


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    k = 3
    while k * k <= p:
        if p % k == 0:
            return False
        k += 2
    return True


@dataclass(frozen=True)
class FieldSpec:
    """Coefficient field: ``GF(p)`` for a prime ``p``, or ``Q`` when ``p`` is None."""

    p: int | None = 2

    def __post_init__(self) -> None:
        if self.p is not None:
            if not 2 <= self.p <= _MAX_PRIME or not _is_prime(self.p):
                raise InputError(f"{self.p} is not a prime in [2, 2^31 - 1]")

    @classmethod
    def parse(cls, text: str | int | None) -> "FieldSpec":
        """Accept ``"q"``/``"Q"``/``"0"``/None for the rationals, or a prime."""
        if text is None:
            return cls(None)
        if isinstance(text, int):
            return cls(None) if text == 0 else cls(text)
        t = text.strip()
        if t.lower() in {"q", "qq", "0", "rational", "rationals"}:
            return cls(None)
        if t.upper().startswith("GF(") and t.endswith(")"):
            t = t[3:-1]
        try:
            p = int(t)
        except ValueError:
            raise InputError(f"cannot parse field {text!r}") from None
        return cls(p)

    @property
    def is_rational(self) -> bool:
        return self.p is None

    @property
    def characteristic(self) -> int:
        return 0 if self.p is None else self.p

    @property
    def name(self) -> str:
        return "Q" if self.p is None else f"GF({self.p})"

    def __str__(self) -> str:
        return self.name


GF2 = FieldSpec(2)
GF3 = FieldSpec(3)
GF5 = FieldSpec(5)
QQ = FieldSpec(None)


# --------------------------------------------------------------------------
# ranks
# --------------------------------------------------------------------------

def rank_gf2(rows: Iterable[int]) -> int:
    """Rank over GF(2) of rows packed into integers (bit ``k`` = column ``k``)."""
    pivots: dict[int, int] = {}
    for row in rows:
        while row:
            top = row.bit_length() - 1
            basis = pivots.get(top)
            if basis is None:
                pivots[top] = row
                break
            row ^= basis
    return len(pivots)


def _sparse_rank_mod(vectors: Iterable[dict[int, int]], p: int) -> int:
    pivots: dict[int, dict[int, int]] = {}
    for vec in vectors:
        w = {k: c % p for k, c in vec.items() if c % p}
        while w:
            lead = max(w)
            basis = pivots.get(lead)
            if basis is None:
                inv = pow(w[lead], -1, p)
                pivots[lead] = {k: (c * inv) % p for k, c in w.items()}
                break
            factor = w[lead]
            for k, c in basis.items():
                v = (w.get(k, 0) - factor * c) % p
                if v:
                    w[k] = v
                else:
                    w.pop(k, None)
    return len(pivots)


def _sparse_rank_rational(vectors: Iterable[dict[int, int]]) -> int:
    pivots: dict[int, dict[int, int]] = {}
    for vec in vectors:
        w = {k: c for k, c in vec.items() if c}
        while w:
            lead = max(w)
            basis = pivots.get(lead)
            if basis is None:
                pivots[lead] = w
                break
            a, b = basis[lead], w[lead]
            # w <- a*w - b*basis keeps integers and kills the lead entry
            if a != 1:
                w = {k: a * c for k, c in w.items()}
            for k, c in basis.items():
                v = w.get(k, 0) - b * c
                if v:
                    w[k] = v
                else:
                    w.pop(k, None)
            if w:
                g = 0
                for c in w.values():
                    g = gcd(g, c)
                    if g == 1:
                        break
                if g > 1:
                    w = {k: c // g for k, c in w.items()}
    return len(pivots)


def _dense_to_sparse(matrix) -> list[dict[int, int]]:
    rows = []
    for row in matrix:
        rows.append({k: int(c) for k, c in enumerate(row) if c})
    return rows


def rank_mod_p(matrix, p: int) -> int:
    """Exact rank of an integer matrix reduced modulo the prime ``p``."""
    if not _is_prime(p):
        raise InputError(f"{p} is not prime")
    if p == 2:
        packed = []
        for row in matrix:
            mask = 0
            for k, c in enumerate(row):
                if int(c) % 2:
                    mask |= 1 << k
            packed.append(mask)
        return rank_gf2(packed)
    return _sparse_rank_mod(_dense_to_sparse(matrix), p)


def rank_rational(matrix) -> int:
    """Exact rank over Q of an integer matrix, by fraction-free elimination."""
    return _sparse_rank_rational(_dense_to_sparse(matrix))


def _rank_sparse(vectors: list[dict[int, int]], f: FieldSpec) -> int:
    if f.p is None:
        return _sparse_rank_rational(vectors)
    return _sparse_rank_mod(vectors, f.p)


# --------------------------------------------------------------------------
# boundary maps and homology
# --------------------------------------------------------------------------

def boundary_matrix(cx: SimplicialComplex, r: int, f: FieldSpec = GF2) -> np.ndarray:
    """Matrix of ``∂_r`` with rows indexed by ``(r-1)``-faces and columns by ``r``-faces.

    Both bases are ordered by ascending mask value, matching
    ``cx.faces(r - 1)`` and ``cx.faces(r)``. Entries are reduced into
    ``{0, ..., p-1}`` for GF(p) and left as ``-1, 0, 1`` over Q.
    """
    if cx.is_void:
        raise InputError("the void complex has no chain complex")
    lower = cx.faces(r - 1) if r >= 0 else ()
    upper = cx.faces(r) if r >= -1 else ()
    out = np.zeros((len(lower), len(upper)), dtype=np.int64)
    if r < 0 or not lower or not upper:
        return out
    index = {face: k for k, face in enumerate(lower)}
    for col, face in enumerate(upper):
        m, pos = face, 0
        while m:
            low = m & -m
            out[index[face ^ low], col] = -1 if pos % 2 else 1
            m ^= low
            pos += 1
    if f.p is not None:
        out %= f.p
    return out


def boundary_ranks(table: Mapping[int, Sequence[int]], f: FieldSpec) -> dict[int, int]:
    """Rank of ``∂_r`` for every degree ``r >= 0`` present in ``table``."""
    ranks: dict[int, int] = {}
    top = max(table) if table else -1
    for r in range(0, top + 1):
        lower, upper = table.get(r - 1, ()), table.get(r, ())
        if not lower or not upper:
            ranks[r] = 0
            continue
        if r == 0:
            ranks[r] = 1
            continue
        index = {face: k for k, face in enumerate(lower)}
        if f.p == 2:
            cols = []
            rows = [0] * len(lower)
            for c, face in enumerate(upper):
                vec = 0
                m = face
                while m:
                    low = m & -m
                    k = index[face ^ low]
                    vec |= 1 << k
                    rows[k] |= 1 << c
                    m ^= low
                cols.append(vec)
            ranks[r] = rank_gf2(cols if len(cols) <= len(rows) else rows)
        else:
            cols_s: list[dict[int, int]] = []
            rows_s: list[dict[int, int]] = [{} for _ in lower]
            for c, face in enumerate(upper):
                vec: dict[int, int] = {}
                m, sign = face, 1
                while m:
                    low = m & -m
                    k = index[face ^ low]
                    vec[k] = sign
                    rows_s[k][c] = sign
                    m ^= low
                    sign = -sign
                cols_s.append(vec)
            ranks[r] = _rank_sparse(cols_s if len(cols_s) <= len(rows_s) else rows_s, f)
    return ranks


def homology_from_faces(table: Mapping[int, Sequence[int]], f: FieldSpec) -> dict[int, int]:
    """Nonzero reduced Betti numbers ``{r: dim H̃_r}`` of a complex given by its faces."""
    ranks = boundary_ranks(table, f)
    dims: dict[int, int] = {}
    for r, group in table.items():
        d = len(group) - ranks.get(r, 0) - ranks.get(r + 1, 0)
        if d:
            dims[r] = d
    return dims


@dataclass(frozen=True)
class HomologyProfile:
    """``dim H̃_r`` for ``-1 <= r <= dim``; absent degrees read as zero."""

    dims: Mapping[int, int] = field(default_factory=dict)
    top: int = -2  # highest degree carried explicitly (dimension of the complex)

    def __getitem__(self, r: int) -> int:
        return self.dims.get(r, 0)

    def nonzero(self) -> dict[int, int]:
        return {r: d for r, d in self.dims.items() if d}

    def euler_characteristic(self) -> int:
        return sum((-1) ** r * d for r, d in self.dims.items())

    def to_json(self) -> dict[str, int]:
        return {str(r): self[r] for r in range(-1, self.top + 1)}


def reduced_homology(cx: SimplicialComplex, f: FieldSpec = GF2) -> HomologyProfile:
    """Reduced homology of ``cx`` with coefficients in ``f``.

    The void complex has no homology at all; ``{∅}`` has ``H̃_-1 = k``.
    """
    if cx.is_void:
        return HomologyProfile({}, -2)
    table = cx.face_table()
    dims = homology_from_faces(table, f)
    top = int(cx.dimension())
    return HomologyProfile({r: dims.get(r, 0) for r in range(-1, top + 1)}, top)
