from radbound.errors.exceptions import (
    EXIT_OK,
    EXIT_USAGE,
    EXIT_VERIFICATION,
    ExternalSolverError,
    InvalidDimensionError,
    InvalidParameterError,
    InvalidPerturbationError,
    NotSubmodularError,
    ParseError,
    RadboundError,
    ResampleRequiredError,
    SizeLimitError,
    UnknownResultError,
    UnsatisfiableError,
    UsageError,
    VerificationError,
    ZeroWeightError,
)
from radbound.errors.types import ErrorType

__all__ = [
    "ErrorType",
    "EXIT_OK",
    "EXIT_USAGE",
    "EXIT_VERIFICATION",
    "RadboundError",
    "InvalidParameterError",
    "InvalidDimensionError",
    "InvalidPerturbationError",
    "NotSubmodularError",
    "SizeLimitError",
    "ZeroWeightError",
    "UnsatisfiableError",
    "ResampleRequiredError",
    "ParseError",
    "UnknownResultError",
    "ExternalSolverError",
    "UsageError",
    "VerificationError",
]
