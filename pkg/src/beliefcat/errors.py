"""Exception hierarchy.

Two families matter to callers: :class:`ValidationError` for malformed input
(bad names, masses that do not sum to one, unparseable files) and
:class:`Refusal` for well-formed input on which a mathematical operation is
undefined (total conflict, non-separable masses, frames too large for an
exact decision).
"""


class BeliefError(Exception):
    """Base class for every error raised by beliefcat."""


class ValidationError(BeliefError, ValueError):
    pass


class Refusal(BeliefError, ArithmeticError):
    pass


class DuplicateElement(ValidationError):
    pass


class TooManyElements(ValidationError):
    pass


class BadName(ValidationError):
    pass


class FrameMismatch(ValidationError):
    pass


class DuplicateEntry(ValidationError):
    pass


class OutOfRange(ValidationError):
    pass


class SumNotOne(ValidationError):
    pass


class NotAValidTransform(ValidationError):
    pass


class NotNormalizedInput(ValidationError):
    pass


class EndpointMismatch(ValidationError):
    pass


class KindMismatch(ValidationError):
    pass


class ParseError(ValidationError):
    def __init__(self, message, path=None, line=None):
        self.path = path
        self.line = line
        where = ""
        if path is not None:
            where = f"{path}:"
        if line is not None:
            where += f"{line}:"
        super().__init__(f"{where} {message}" if where else message)


class TotalConflict(Refusal):
    """Normalized combination of evidence whose conflict mass is exactly one."""


class NotDecomposable(Refusal):
    """The mass gives nothing to the whole frame, so canonical weights do not exist."""


class NotSeparable(Refusal):
    """Canonical weights exist but at least one falls outside [0, 1]."""

    def __init__(self, message, weights=None):
        super().__init__(message)
        self.weights = weights


class FrameTooLarge(Refusal):
    pass


class ZeroProbabilityEvidence(Refusal):
    pass
