"""
pystirling - exact binomial, Stirling and Lah triangles, their products,
and the identities that connect them
Version: 0.1.0
"""

__version__ = "0.1.0"

from .triangle import Triangle, identity_triangle, sign_twist, truncate
from .base import SequenceKind, TriangleKind, base_triangle, lah_closed, sequence
from .algebra import inverse, is_identity, multiply
from .composites import (
    PairKind, absorption_residual, closed_form, composite, composite_product,
    composite_recurrence, inverse_pair, row_sum,
)
from .oracles import StructureKind, oracle_count, wrook_placements
from .polybasis import BasisFamily, Polynomial, change_matrix, to_falling_basis

__all__ = [
    "Triangle", "identity_triangle", "sign_twist", "truncate",
    "TriangleKind", "SequenceKind", "base_triangle", "lah_closed", "sequence",
    "multiply", "inverse", "is_identity",
    "PairKind", "composite", "composite_product", "composite_recurrence",
    "closed_form", "absorption_residual", "row_sum", "inverse_pair",
    "StructureKind", "oracle_count", "wrook_placements",
    "BasisFamily", "Polynomial", "change_matrix", "to_falling_basis",
    "__version__",
]
