"""Bar chain complexes, coinvariants, class decompositions and homology transfer maps."""

from .chains import (
    ChainComplex,
    attach_g_action,
    bar_complex,
    boundary_failures,
    check_boundaries,
    count_cycles,
    iter_cycles,
    restrict_complex,
)
from .classes import ClassDecomposition, check_class_sum, class_decomposition, class_homology
from .coinvariants import coinvariant_complex
from .ranks import HomologyResult, homology, homology_basis, homology_representation, homology_space
from .transfer import HomologyTransfer, transfer_maps_homology

__all__ = [
    "ChainComplex",
    "ClassDecomposition",
    "HomologyResult",
    "HomologyTransfer",
    "attach_g_action",
    "bar_complex",
    "boundary_failures",
    "check_boundaries",
    "check_class_sum",
    "class_decomposition",
    "class_homology",
    "coinvariant_complex",
    "count_cycles",
    "homology",
    "homology_basis",
    "homology_representation",
    "homology_space",
    "iter_cycles",
    "restrict_complex",
    "transfer_maps_homology",
]
