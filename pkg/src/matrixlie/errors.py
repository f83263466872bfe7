"""Exception hierarchy shared by all modules."""


class LieError(Exception):
    """Base class for all errors raised by this package."""


class ShapeError(LieError):
    """Matrix dimensions do not match what the operation requires."""


class DomainError(LieError):
    """Input is outside the mathematical domain of the operation."""


class OutOfDomainError(DomainError):
    """Input violates a convergence-domain precondition (e.g. ||A - I|| >= 1)."""


class ConvergenceError(LieError):
    """An iteration or series failed to converge within its budget."""


class ClosureError(LieError):
    """A bracket left the span of the supplied basis."""


class InconsistentSamplesError(DomainError):
    """One-parameter samples are not generated by a single matrix."""


class DecompositionError(LieError):
    """Eigenspace extraction could not exhaust the representation space."""
