"""Splitting the cochain complex of a graded category by conjugacy classes."""

import logging

from sympy.polys.matrices import DomainMatrix

from ..constructions.grading import Grading
from ..errors import ComplexError, GradingError
from ..group.finite_group import ConjClasses, conjugacy_classes
from ..homology.classes import ClassDecomposition
from ..lincat.matrices import DEFAULT_DENSE_THRESHOLD
from .cochains import CochainComplex, cochain_type, restrict_cochains
from .ranks import CohomologyResult, cohomology

logger = logging.getLogger(__name__)


def cochain_classes(cx: CochainComplex, grading: Grading, classes: ConjClasses) -> tuple[tuple[int, ...], ...]:
    if cx.keys is None or cx.category is not grading.base:
        raise GradingError("Complex was not built from the graded category")
    return tuple(tuple(classes.class_of[cochain_type(cx.category, grading, key)] for key in keys) for keys in cx.keys)


def cross_class_cochain_entries(cx: CochainComplex, class_of: tuple[tuple[int, ...], ...]) -> list[tuple[int, int, int]]:
    """(degree, class of cochain, class of a coboundary term) for every leak."""
    leaks = set()
    for n in range(cx.top):
        for i, row in cx.coboundaries[n].to_sparse().to_dod().items():
            for j in row:
                if class_of[n + 1][i] != class_of[n][j]:
                    leaks.add((n, class_of[n][j], class_of[n + 1][i]))
    return sorted(leaks)


def class_decomposition_cochains(
    cx: CochainComplex, grading: Grading, classes: ConjClasses | None = None, check: bool = True
) -> ClassDecomposition:
    """C^•(B) = ⊕_D C^•_D(B) with D the class of deg(f_n)⋯deg(f_1)·deg(h)⁻¹."""
    classes = classes or conjugacy_classes(grading.group)
    class_of = cx.class_of if cx.class_of is not None else cochain_classes(cx, grading, classes)
    leaks = cross_class_cochain_entries(cx, class_of)
    if leaks:
        logger.warning(f"{len(leaks)} cross-class coboundary blocks in {cx.name}")
        if check:
            n, src, dst = leaks[0]
            raise ComplexError(
                f"d_{n} maps class {classes.label(grading.group, src)} into {classes.label(grading.group, dst)}"
            )
        return ClassDecomposition(classes, {}, leaks)
    blocks = {}
    for k in range(len(classes)):
        keep = [[i for i, c in enumerate(per_degree) if c == k] for per_degree in class_of]
        blocks[k] = restrict_cochains(cx, keep, name=f"{cx.name}_{classes.label(grading.group, k)}", check=check)
    return ClassDecomposition(classes, blocks, leaks)


def class_projection(decomposition: ClassDecomposition, k: int) -> tuple[DomainMatrix, ...]:
    """C^n → C^n_D per degree: restriction of a cochain to the paths of class D."""
    return decomposition.blocks[k].from_parent


def class_inclusion(decomposition: ClassDecomposition, k: int) -> tuple[DomainMatrix, ...]:
    """C^n_D → C^n per degree: extension by zero."""
    return decomposition.blocks[k].to_parent


def class_cohomology(
    decomposition: ClassDecomposition, grading: Grading, dense_threshold: int = DEFAULT_DENSE_THRESHOLD
) -> dict[str, CohomologyResult]:
    return {
        decomposition.classes.label(grading.group, k): cohomology(block, dense_threshold)
        for k, block in decomposition.blocks.items()
    }
