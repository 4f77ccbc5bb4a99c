"""Exception hierarchy shared across the package."""


class LieAbelianError(Exception):
    """Base class for all errors raised by this package."""


class InvalidScalar(LieAbelianError):
    """Malformed scalar or division by zero in exact arithmetic."""


class BudgetExceeded(LieAbelianError):
    """A Groebner computation ran past its reduction-step budget."""

    def __init__(self, message="reduction budget exhausted", used=None):
        super().__init__(message)
        self.used = used


class AmbientMismatch(LieAbelianError):
    """Operands live in vector spaces of different dimensions or fields."""


class NotSubalgebra(LieAbelianError):
    """A subspace expected to be closed under the bracket is not."""


class SingularTransform(LieAbelianError):
    """A change-of-basis matrix is not invertible."""


class JacobiViolation(LieAbelianError):
    """Structure constants that fail the Jacobi identity.

    Carries the violating basis triple (1-based) and the nonzero Jacobi sum.
    """

    def __init__(self, triple, residual):
        i, j, k = triple
        super().__init__(f"Jacobi identity fails on basis triple ({i},{j},{k})")
        self.triple = triple
        self.residual = residual


class CorpusError(LieAbelianError):
    """Syntax or consistency error in an algebra file."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class UnknownFamily(LieAbelianError):
    """Unknown generator-family name or bad family parameter."""


class UnknownType(LieAbelianError):
    """Invalid (type, rank) pair for a simple Lie algebra."""


class PreconditionFailed(LieAbelianError):
    """Caller-supplied data violates a documented precondition."""


class MaximalityViolated(PreconditionFailed):
    """A constructive run contradicted the caller's maximality assertion.

    Raised when an internal step or the final verification of a
    constructed ideal fails; this diagnoses that the input subalgebra was
    not of maximal abelian dimension.
    """


class Undecided(LieAbelianError):
    """A decision could not be completed within the configured budgets."""


class SoundnessViolation(LieAbelianError):
    """Internal cross-check failure (e.g. beta > alpha).  Always a bug."""
