"""
Exceptions raised by the c.s.c. toolkit.

Every exception carries the process exit code the command line reports for it,
so runners never need a translation table.
"""

from enums.exit_code import ExitCode


class CscError(Exception):
    """Base class of all toolkit errors."""

    exit_code: ExitCode = ExitCode.INPUT_ERROR


class InvalidPointSetError(CscError, ValueError):
    """The point set violates a structural requirement."""


class CollinearInputError(InvalidPointSetError):
    """Three points that must span a triangle are collinear."""


class NotStrictlyConvexError(InvalidPointSetError):
    """A region construction received a set that is not in strict convex position."""


class TooFewPointsError(InvalidPointSetError):
    """The operation needs more points than it was given."""


class MissingLabelsError(InvalidPointSetError):
    """The nine-gon verification needs the labels a1, b1, c1, ..., c3."""


class NotParallelogramError(InvalidPointSetError):
    """Four points do not form a nondegenerate parallelogram."""


class RejectedSubsetError(CscError):
    """A subset examined by the k-subset check was rejected by the decision procedure."""

    def __init__(self, message: str, subset) -> None:
        super().__init__(message)
        self.subset = subset


class ParseError(CscError, ValueError):
    """A number or file could not be parsed."""


class WitnessVerificationError(CscError, RuntimeError):
    """A computed witness center failed the direct admissibility check."""

    exit_code = ExitCode.VERIFICATION_FAILED
