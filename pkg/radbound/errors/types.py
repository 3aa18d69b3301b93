from enum import Enum


class ErrorType(str, Enum):
    """Enum defining stable error identifiers for reports and exit codes"""

    INVALID_PARAMETER = "invalid_parameter"
    INVALID_DIMENSION = "invalid_dimension"
    INVALID_PERTURBATION = "invalid_perturbation"
    ZERO_WEIGHT = "zero_weight"
    UNSATISFIABLE = "unsatisfiable"
    RESAMPLE_REQUIRED = "resample_required"
    SIZE_LIMIT = "size_limit"
    NOT_SUBMODULAR = "not_submodular"
    PARSE_ERROR = "parse_error"
    UNKNOWN_RESULT = "unknown_result"
    EXTERNAL_SOLVER = "external_solver"
    USAGE_ERROR = "usage_error"
    VERIFICATION_FAILED = "verification_failed"
