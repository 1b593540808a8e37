"""Exception types shared across the package."""


class BpvdError(Exception):
    """Base class for all package-specific errors."""


class ParseError(BpvdError):
    """Malformed graph text.  Carries the 1-based line number when known."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class ContractViolation(BpvdError):
    """An operation was called outside its documented precondition."""


class StructureViolation(ContractViolation):
    """The hole-structure invariants do not hold for the given input.

    Raised when classification or ordering around a hole fails; this signals
    that the input was not a connected almost bipartite permutation graph
    with a shortest hole, not a recoverable condition.
    """


class DiagnosticFailure(BpvdError):
    """An internal self-check failed; indicates a bug or precondition breach."""


class GenerationError(BpvdError):
    """An instance generator exhausted its resampling budget."""
