"""Borel orbits of 2-nilpotent matrices, their degenerations, and generic normal forms of nilpotent matrices."""

from .classify import classify, classify_parabolic, profile_of
from .degeneration import apply_moves, closure_set, covers, leq_deg, move_closure, profile
from .errors import DomainError, InternalError
from .exactlinalg import Mat, det, intersection_dim, kernel_dim, mat_poly, rank, submatrix_corner
from .olp import EnhancedOLP, OrientedLinkPattern, count_patterns, enumerate_patterns, from_involution
from .normalform import SemiinvariantDatum, entry_datum, genericity, normal_form, semiinvariant, weight

__all__ = [
    "DomainError", "EnhancedOLP", "InternalError", "Mat", "OrientedLinkPattern", "SemiinvariantDatum",
    "apply_moves", "classify", "classify_parabolic", "closure_set", "count_patterns", "covers", "det",
    "entry_datum", "enumerate_patterns", "from_involution", "genericity", "intersection_dim", "kernel_dim",
    "leq_deg", "mat_poly", "move_closure", "normal_form", "profile", "profile_of", "rank", "semiinvariant",
    "submatrix_corner", "weight",
]
