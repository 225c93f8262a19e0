"""Cochain complexes, cup products, invariants, class blocks, transport and cohomology transfer maps."""

from .center import Center, center, check_center_matches_h0
from .classes import class_cohomology, class_decomposition_cochains, class_inclusion, class_projection
from .cochains import (
    CoboundarySign,
    CochainComplex,
    check_coboundaries,
    coboundary_failures,
    cochain_complex,
    cochain_type,
    count_cochains,
    restrict_cochains,
)
from .cup import associativity_failures, cup, leibniz_failures, unit, unit_failures
from .invariants import attach_g_action_cochains, invariant_complex
from .ranks import CohomologyResult, cocycle_basis, cohomology, cohomology_representation, cohomology_space
from .transfer import CohomologyTransfer, transfer_maps_cohomology
from .transport import CochainTransport, transport_cochains

__all__ = [
    "Center",
    "CoboundarySign",
    "CochainComplex",
    "CochainTransport",
    "CohomologyResult",
    "CohomologyTransfer",
    "associativity_failures",
    "attach_g_action_cochains",
    "center",
    "check_center_matches_h0",
    "check_coboundaries",
    "class_cohomology",
    "class_decomposition_cochains",
    "class_inclusion",
    "class_projection",
    "coboundary_failures",
    "cochain_complex",
    "cochain_type",
    "cocycle_basis",
    "cohomology",
    "cohomology_representation",
    "cohomology_space",
    "count_cochains",
    "cup",
    "invariant_complex",
    "leibniz_failures",
    "restrict_cochains",
    "transfer_maps_cohomology",
    "transport_cochains",
    "unit",
    "unit_failures",
]
