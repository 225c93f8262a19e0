"""Splitting the chain complex of a graded category by conjugacy classes."""

import logging
from dataclasses import dataclass, field

from ..constructions.grading import Grading
from ..errors import ComplexError, GradingError
from ..group.finite_group import ConjClasses, conjugacy_classes
from ..lincat.matrices import DEFAULT_DENSE_THRESHOLD
from .chains import ChainComplex, restrict_complex
from .ranks import HomologyResult, homology

logger = logging.getLogger(__name__)


@dataclass
class ClassDecomposition:
    """One subcomplex per conjugacy class D of G.

    ``leaks`` lists (degree, class of chain, class of a boundary term) for
    every nonzero boundary entry joining two different classes.
    """

    classes: ConjClasses
    blocks: dict[int, ChainComplex]
    leaks: list[tuple[int, int, int]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.leaks

    def total_dimensions(self) -> tuple[int, ...]:
        blocks = list(self.blocks.values())
        if not blocks:
            return ()
        return tuple(sum(b.dimensions[n] for b in blocks) for n in range(len(blocks[0].dimensions)))


def chain_classes(cx: ChainComplex, grading: Grading, classes: ConjClasses) -> tuple[tuple[int, ...], ...]:
    if cx.chains is None or cx.category is not grading.base:
        raise GradingError("Complex was not built from the graded category")
    return tuple(tuple(classes.class_of[grading.product(p)] for p in chains) for chains in cx.chains)


def cross_class_entries(cx: ChainComplex, class_of: tuple[tuple[int, ...], ...]) -> list[tuple[int, int, int]]:
    leaks = set()
    for n in range(1, cx.top + 1):
        for i, row in cx.boundaries[n].to_sparse().to_dod().items():
            for j in row:
                if class_of[n - 1][i] != class_of[n][j]:
                    leaks.add((n, class_of[n][j], class_of[n - 1][i]))
    return sorted(leaks)


def class_decomposition(
    cx: ChainComplex, grading: Grading, classes: ConjClasses | None = None, check: bool = True
) -> ClassDecomposition:
    """C_•(B) = ⊕_D C^D_•(B) with D the class of deg(f_n)⋯deg(f_0)."""
    classes = classes or conjugacy_classes(grading.group)
    class_of = cx.class_of if cx.class_of is not None else chain_classes(cx, grading, classes)
    leaks = cross_class_entries(cx, class_of)
    if leaks:
        logger.warning(f"{len(leaks)} cross-class boundary blocks in {cx.name}")
        if check:
            n, src, dst = leaks[0]
            raise ComplexError(
                f"d_{n} maps class {classes.label(grading.group, src)} into {classes.label(grading.group, dst)}"
            )
        return ClassDecomposition(classes, {}, leaks)
    blocks = {}
    for k in range(len(classes)):
        keep = [[i for i, c in enumerate(per_degree) if c == k] for per_degree in class_of]
        blocks[k] = restrict_complex(
            cx, keep, name=f"{cx.name}^{classes.label(grading.group, k)}", check=check
        )
    return ClassDecomposition(classes, blocks, leaks)


def class_homology(
    decomposition: ClassDecomposition, grading: Grading, dense_threshold: int = DEFAULT_DENSE_THRESHOLD
) -> dict[str, HomologyResult]:
    """Homology of every class block, keyed by class label."""
    return {
        decomposition.classes.label(grading.group, k): homology(block, dense_threshold)
        for k, block in decomposition.blocks.items()
    }


def check_class_sum(total: HomologyResult, per_class: dict[str, HomologyResult]) -> list[int]:
    """Degrees where Σ_D dim H^D_n ≠ dim H_n."""
    bad = []
    for n, dim in enumerate(total.dimensions):
        if sum(r.dimensions[n] for r in per_class.values()) != dim:
            bad.append(n)
    return bad
