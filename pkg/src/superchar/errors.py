"""Exception hierarchy; every error carries a machine-readable code."""


class SupercharError(Exception):
    """Base class for domain errors raised by the library."""

    code = "E_DOMAIN"

    def __init__(self, message, **details):
        super().__init__(message)
        self.details = details

    def to_dict(self):
        return {"code": self.code, "message": str(self), "details": self.details}


class ContextError(SupercharError):
    code = "E_CONTEXT"


class BadPrimeError(ContextError):
    code = "E_BAD_PRIME"


class RangeError(SupercharError):
    code = "E_RANGE"


class NotDominantError(SupercharError):
    code = "E_NOT_DOMINANT"


class AtypicalError(SupercharError):
    """Raised for atypical input; ``details['steinberg']`` holds a reduction hint when one exists."""

    code = "E_ATYPICAL"


class AlreadyTypicalError(SupercharError):
    code = "E_TYPICAL"


class InvalidRootError(SupercharError):
    code = "E_BAD_ROOT"


class InvalidReflectionError(SupercharError):
    code = "E_BAD_REFLECTION"


class ReductionUnavailableError(SupercharError):
    code = "E_NO_REDUCTION"


class SkippedTermError(SupercharError):
    """The requested odd index does not contribute (pairing not divisible by p)."""

    code = "E_SKIPPED"


class SingularMatrixError(SupercharError):
    code = "E_SINGULAR"


class WeightSyntaxError(SupercharError, ValueError):
    code = "E_SYNTAX"


class NonDominantWarning(UserWarning):
    pass
