"""Finite k-linear categories, functors and total algebras over exact fields."""

from .algebra import (
    AlgebraView,
    field_algebra,
    full_subcategory,
    matrix_algebra,
    single_object_category,
    tensor_product,
    total_algebra,
    truncated_polynomial,
    validate_algebra,
)
from .category import BasisMorphism, LinCat
from .functor import IsoWitness, LinFunctor, compose_functors, identity_functor, validate_functor
from .scalars import Field
from .validation import ValidationReport, Violation, validate_category

__all__ = [
    "AlgebraView",
    "BasisMorphism",
    "Field",
    "IsoWitness",
    "LinCat",
    "LinFunctor",
    "ValidationReport",
    "Violation",
    "compose_functors",
    "field_algebra",
    "full_subcategory",
    "identity_functor",
    "matrix_algebra",
    "single_object_category",
    "tensor_product",
    "total_algebra",
    "truncated_polynomial",
    "validate_algebra",
    "validate_category",
    "validate_functor",
]
