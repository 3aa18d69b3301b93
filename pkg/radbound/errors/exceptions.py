from typing import Any

from radbound.core.constants import BoundSide
from radbound.errors.types import ErrorType

# Process exit codes used by the command line runner
EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VERIFICATION = 2


class RadboundError(Exception):
    """Base exception class for all radbound errors"""

    default_message = "An error occurred"
    error_type = ErrorType.INVALID_PARAMETER
    exit_code = EXIT_USAGE

    def __init__(
        self,
        message: str | None = None,
        details: Any | None = None,
    ):
        self.message = message or self.default_message
        self.details = details
        super().__init__(self.message)

    def to_dict(self) -> dict[str, Any]:
        """Convert to a machine-readable error record"""
        error_dict = {
            "error": {
                "type": self.error_type.value,
                "message": self.message,
                "exit_code": self.exit_code,
            }
        }
        if self.details:
            error_dict["error"]["details"] = self.details
        return error_dict

    @classmethod
    def from_exception(
        cls,
        exc: Exception,
        mapper: dict[type[Exception], type["RadboundError"]] | None = None,
    ) -> "RadboundError":
        """Convert any exception to a radbound error"""
        if isinstance(exc, RadboundError):
            return exc

        mapper = mapper or {}
        for exc_type in type(exc).__mro__:
            entry = mapper.get(exc_type)
            if entry:
                return entry(str(exc))

        return RadboundError(message=str(exc) or type(exc).__name__)


class InvalidParameterError(RadboundError):
    default_message = "Invalid parameter"
    error_type = ErrorType.INVALID_PARAMETER


class InvalidDimensionError(InvalidParameterError):
    default_message = "Dimension must be a positive integer"
    error_type = ErrorType.INVALID_DIMENSION


class InvalidPerturbationError(InvalidParameterError):
    default_message = "Invalid perturbation"
    error_type = ErrorType.INVALID_PERTURBATION


class NotSubmodularError(InvalidParameterError):
    """Raised when a pairwise energy cannot be expressed as a graph cut"""

    default_message = "Negative coupling makes the energy non-submodular"
    error_type = ErrorType.NOT_SUBMODULAR


class SizeLimitError(InvalidParameterError):
    default_message = "Problem exceeds the enumeration size limit"
    error_type = ErrorType.SIZE_LIMIT


class ZeroWeightError(RadboundError):
    """Raised when every weight is zero, so log Z has no finite bound"""

    default_message = "All weights are zero"
    error_type = ErrorType.ZERO_WEIGHT


class UnsatisfiableError(ZeroWeightError):
    default_message = "Formula is unsatisfiable"
    error_type = ErrorType.UNSATISFIABLE


class ResampleRequiredError(RadboundError):
    """Raised when a draw violated its slack bound and must be redrawn"""

    default_message = "Degenerate perturbation draw"
    error_type = ErrorType.RESAMPLE_REQUIRED

    def __init__(
        self,
        message: str | None = None,
        details: Any | None = None,
        side: BoundSide = BoundSide.BOTH,
    ):
        super().__init__(message, details)
        self.side = side


class ParseError(RadboundError):
    default_message = "Malformed input"
    error_type = ErrorType.PARSE_ERROR

    def __init__(
        self,
        message: str | None = None,
        details: Any | None = None,
        line_number: int | None = None,
    ):
        if line_number is not None:
            message = f"line {line_number}: {message or self.default_message}"
        super().__init__(message, details)
        self.line_number = line_number


class UnknownResultError(RadboundError):
    default_message = "Solver output has no optimum status line"
    error_type = ErrorType.UNKNOWN_RESULT


class ExternalSolverError(RadboundError):
    default_message = "External solver failed"
    error_type = ErrorType.EXTERNAL_SOLVER


class UsageError(RadboundError):
    default_message = "Invalid usage"
    error_type = ErrorType.USAGE_ERROR


class VerificationError(RadboundError):
    default_message = "Verification failed"
    error_type = ErrorType.VERIFICATION_FAILED
    exit_code = EXIT_VERIFICATION
