"""Shared exception types."""


class FqzetaError(Exception):
    """Base class for package-specific failures."""


class PreconditionError(FqzetaError, ValueError):
    """An operation was called on inputs outside its stated domain."""


class DegenerateCoverError(PreconditionError):
    """No covering vector with the required surplus exists for this input.

    Raised by ``digitlab.extend_to_cover`` when the cover construction would
    collapse onto the upper bound itself (zero surplus), which happens exactly
    when the slack is 0 and the upper bound lies on the even-class lattice.
    """


class EmptySetError(FqzetaError, ValueError):
    """A selection (greedy, modest, optimal) was requested from an empty set."""


class ResourceLimitError(FqzetaError, RuntimeError):
    """An enumeration or summation would exceed the configured resource guard."""


class VanishingMismatchError(FqzetaError, ArithmeticError):
    """Exact evaluation contradicts the structural vanishing classification.

    This signals either an arithmetic bug or a genuine counterexample to the
    vanishing criterion, so it is raised loudly instead of being classified.
    """
