"""Betti numbers of edge ideals of complete hypergraphs.

Builds the complete, complete multipartite and interval-constrained
hypergraph families, computes graded and multigraded Betti numbers by
Hochster's formula over GF(p) or Q, and compares them with closed forms.
"""

from __future__ import annotations

from .betti import (
    BettiTable,
    HilbertSeries,
    MultigradedBettiTable,
    betti_from_fvector_linear,
    hilbert_from_fvector,
    hilbert_numerator_from_betti,
    hochster_graded,
    hochster_multigraded,
    is_cohen_macaulay,
    krull_dimension,
)
from .exceptions import HyperBettiError, InputError, ResourceLimitError
from .families import (
    FamilySpec,
    IntervalSpec,
    closed_betti_da,
    closed_betti_knd,
    closed_betti_multipartite,
    closed_betti_product,
    make_da,
    make_dI,
    make_knd,
    make_multipartite,
    normalize_intervals,
)
from .homology import GF2, GF3, GF5, QQ, FieldSpec, reduced_homology
from .hypergraph import Hypergraph
from .simplicial import SimplicialComplex, VertexUniverse

__version__ = "0.1.0"

__all__ = [
    "BettiTable", "HilbertSeries", "MultigradedBettiTable", "betti_from_fvector_linear",
    "hilbert_from_fvector", "hilbert_numerator_from_betti", "hochster_graded", "hochster_multigraded",
    "is_cohen_macaulay", "krull_dimension", "HyperBettiError", "InputError", "ResourceLimitError",
    "FamilySpec", "IntervalSpec", "closed_betti_da", "closed_betti_knd", "closed_betti_multipartite",
    "closed_betti_product", "make_da", "make_dI", "make_knd", "make_multipartite", "normalize_intervals",
    "GF2", "GF3", "GF5", "QQ", "FieldSpec", "reduced_homology", "Hypergraph", "SimplicialComplex",
    "VertexUniverse",
]
