"""Independent reference computations used by the tests.

Nothing here imports the package. Faces are frozensets of ints, ranks come
from plain dense elimination over Fractions or integers mod p, and Betti
numbers come from the upper Koszul simplicial complex rather than from
restrictions of the independence complex.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from math import comb


def all_subsets(vertices):
    vs = sorted(vertices)
    for k in range(len(vs) + 1):
        for c in combinations(vs, k):
            yield frozenset(c)


def dense_rank(rows, p=0):
    """Rank of a list of integer rows over GF(p), or over Q when p == 0."""
    if p:
        m = [[x % p for x in r] for r in rows]
    else:
        m = [[Fraction(x) for x in r] for r in rows]
    rank = 0
    ncols = len(m[0]) if m else 0
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(m)) if m[r][col]), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        inv = pow(m[rank][col], -1, p) if p else 1 / m[rank][col]
        m[rank] = [(x * inv) % p if p else x * inv for x in m[rank]]
        for r in range(len(m)):
            if r != rank and m[r][col]:
                c = m[r][col]
                m[r] = [((a - c * b) % p) if p else a - c * b for a, b in zip(m[r], m[rank])]
        rank += 1
    return rank


def reduced_homology_dims(faces, p=0):
    """``{r: dim H̃_r}`` for a complex given by its full face set (must contain ∅)."""
    by_dim = {}
    for f in faces:
        by_dim.setdefault(len(f) - 1, []).append(tuple(sorted(f)))
    for r in by_dim:
        by_dim[r].sort()
    top = max(by_dim)

    def rank_of(r):
        lower, upper = by_dim.get(r - 1, []), by_dim.get(r, [])
        if not lower or not upper:
            return 0
        index = {f: k for k, f in enumerate(lower)}
        rows = [[0] * len(upper) for _ in lower]
        for c, face in enumerate(upper):
            for pos in range(len(face)):
                rows[index[face[:pos] + face[pos + 1:]]][c] = (-1) ** pos
        return dense_rank(rows, p)

    ranks = {r: rank_of(r) for r in range(0, top + 2)}
    out = {}
    for r in range(-1, top + 1):
        d = len(by_dim.get(r, [])) - ranks.get(r, 0) - ranks.get(r + 1, 0)
        if d:
            out[r] = d
    return out


def independent_sets(edges, n):
    edges = [frozenset(e) for e in edges]
    return {f for f in all_subsets(range(n)) if not any(e <= f for e in edges)}


def koszul_betti(edges, n, p=0):
    """Graded Betti numbers ``{(i, j): β}`` of ``R/I`` for the squarefree ideal on ``edges``.

    Uses ``β_{i,V} = dim H̃_{i-2}(K^V)`` with ``K^V = {F ⊆ V : V \\ F contains an edge}``.
    """
    edges = [frozenset(e) for e in edges]
    out = {(0, 0): 1}
    for v in all_subsets(range(n)):
        if not any(e <= v for e in edges):
            continue
        faces = [f for f in all_subsets(v) if any(e <= v - f for e in edges)]
        for r, d in reduced_homology_dims(faces, p).items():
            key = (r + 2, len(v))
            out[key] = out.get(key, 0) + d
    return out


def totals(table):
    top = max(i for i, _ in table)
    return [sum(b for (i, _), b in table.items() if i == k) for k in range(top + 1)]


def alexander_dual_faces(faces, n):
    ground = frozenset(range(n))
    return {ground - f for f in all_subsets(range(n)) if f not in faces}


def join_faces(a, b, shift):
    return {f | frozenset(x + shift for x in g) for f in a for g in b}


def knd_betti(n, d):
    return {(0, 0): 1} | {
        (j - d + 1, j): comb(n, j) * comb(j - 1, d - 1) for j in range(d, n + 1)
    }


def graph_cycle_rank(vertices, edges):
    """``|E| - |V| + #components`` by union-find."""
    parent = {v: v for v in vertices}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    comps = len(parent)
    for a, b in edges:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb
            comps -= 1
    return len(edges) - len(parent) + comps, comps
