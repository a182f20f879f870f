"""Exact integer linear algebra and real algebraic numbers."""

from .algebraic import AlgebraicNumber, Ordering, as_algebraic, compare, count_roots, root_multiplicity, sturm_chain
from .linalg import (
    charpoly,
    charpoly_mod2,
    eigen_multiplicity,
    is_totally_real_algebraic_integer,
    rank_exact,
    rank_shifted,
)
from .poly import GF2Poly, IntPoly

__all__ = [
    "AlgebraicNumber",
    "GF2Poly",
    "IntPoly",
    "Ordering",
    "as_algebraic",
    "charpoly",
    "charpoly_mod2",
    "compare",
    "count_roots",
    "eigen_multiplicity",
    "is_totally_real_algebraic_integer",
    "rank_exact",
    "rank_shifted",
    "root_multiplicity",
    "sturm_chain",
]
