"""Skew, quotient, resolving and transversal categories built from a G-action."""

from .grading import Grading, validate_grading
from .matrix_algebra import MatrixSkewAlgebra, matrix_skew_algebra
from .quotient import QuotientCategory, grading_from_transversal, quotient_category
from .resolving import ResolvingCategory, resolving_category
from .skew import OrbitIsomorphism, SkewCategory, check_orbit_isomorphisms, orbit_isomorphisms, skew_category
from .tensor import tensor_action, trivial_category
from .transversal import TransversalSubcategory, check_homogeneous_isomorphism, transversal_subcategory

__all__ = [
    "Grading",
    "MatrixSkewAlgebra",
    "OrbitIsomorphism",
    "QuotientCategory",
    "ResolvingCategory",
    "SkewCategory",
    "TransversalSubcategory",
    "check_homogeneous_isomorphism",
    "check_orbit_isomorphisms",
    "grading_from_transversal",
    "matrix_skew_algebra",
    "orbit_isomorphisms",
    "quotient_category",
    "resolving_category",
    "skew_category",
    "tensor_action",
    "transversal_subcategory",
    "trivial_category",
    "validate_grading",
]
