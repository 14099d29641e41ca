"""Exception hierarchy shared by all falaudit modules."""


class FalauditError(Exception):
    """Base class for every error raised by this package."""


class PoleError(FalauditError):
    """Gamma function evaluated at a non-positive integer."""


class SingularInput(FalauditError):
    """An operand sits on a singularity of the requested operation
    (zero base with a negative power, fractional derivative at s=0, ...)."""


class DomainError(FalauditError):
    """Input outside the domain an operation is defined on."""


class InvalidConfig(FalauditError):
    """A parameter bundle violates its invariants."""


class DegenerateInput(FalauditError):
    """Degenerate configuration, e.g. s0 equal to the sought minimizer."""


class BracketError(FalauditError):
    """A root finder could not establish a sign change on its bracket."""
