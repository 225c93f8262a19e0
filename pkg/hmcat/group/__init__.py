"""Finite groups, their actions on categories, orbits and (co)invariants."""

from .action import AlgebraAction, GroupAction, induced_algebra_action, validate_action, validate_algebra_action
from .finite_group import (
    ConjClasses,
    FiniteGroup,
    conjugacy_classes,
    cyclic_group,
    direct_product,
    group_algebra,
    symmetric_group,
    trivial_group,
)
from .orbits import OrbitData, check_transversal, orbits_transversal
from .representations import (
    CoinvariantQuotient,
    InvariantSubspace,
    Representation,
    averaging_check,
    coinvariants,
    invariants,
)

__all__ = [
    "AlgebraAction",
    "CoinvariantQuotient",
    "ConjClasses",
    "FiniteGroup",
    "GroupAction",
    "InvariantSubspace",
    "OrbitData",
    "Representation",
    "averaging_check",
    "check_transversal",
    "coinvariants",
    "conjugacy_classes",
    "cyclic_group",
    "direct_product",
    "group_algebra",
    "induced_algebra_action",
    "invariants",
    "orbits_transversal",
    "symmetric_group",
    "trivial_group",
    "validate_action",
    "validate_algebra_action",
]
