"""Exception types for hmcat.

Axiom failures of categories, actions and gradings are collected in
validation reports. The errors below are for inputs that cannot be
processed at all.
"""


class HmcatError(Exception):
    """Base class for all hmcat errors."""


class StructureError(HmcatError):
    """Input references objects, bases or labels that do not exist."""


class FieldMismatchError(HmcatError):
    def __init__(self, left: str, right: str):
        super().__init__(f"Field mismatch: {left} vs {right}")
        self.left = left
        self.right = right


class AlgebraError(HmcatError):
    """Multiplication table is not associative or not unital."""


class ActionError(HmcatError):
    """Group action data is inconsistent with its category."""


class RepresentationError(HmcatError):
    """Per-element matrices do not form a linear representation."""


class GradingError(HmcatError):
    """Grading does not match its category or is not multiplicative."""


class FunctorError(HmcatError):
    """Functor data is inconsistent, or a required inverse does not exist."""


class TransversalError(HmcatError):
    """Chosen objects do not meet every orbit exactly once."""


class NonFreeActionError(HmcatError):
    def __init__(self, orbit: tuple[str, ...]):
        super().__init__(
            f"Action is not free on objects (orbit {', '.join(orbit)} has a "
            "nontrivial stabilizer); build resolving_category first and use "
            "its free action"
        )
        self.orbit = orbit


class ComplexError(HmcatError):
    """A build-time identity (d∘d = 0, chain map, inverse) failed."""


class ResourceBudgetError(HmcatError):
    def __init__(self, degree: int, dimension: int, budget: int):
        super().__init__(
            f"Degree {degree} space has dimension {dimension}, "
            f"over the configured budget of {budget}"
        )
        self.degree = degree
        self.dimension = dimension
        self.budget = budget


class GroupError(HmcatError):
    """Multiplication table is not a group."""
