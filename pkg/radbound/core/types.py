import math
from collections.abc import Sequence
from dataclasses import dataclass
from typing import Any

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, computed_field, model_validator

from radbound.core.constants import (
    CONFIDENCE,
    DEFAULT_RESAMPLE_LIMIT,
    LN2,
    SLACK_FACTOR,
    LambdaRegime,
    WStarChoice,
)
from radbound.errors.exceptions import (
    InvalidDimensionError,
    InvalidPerturbationError,
)


def _readonly(array: np.ndarray) -> np.ndarray:
    array.setflags(write=False)
    return array


def as_state(x: Any, n: int | None = None) -> np.ndarray:
    """Validate a state of {-1,1}^n and return it as a read-only int8 array"""
    state = np.asarray(x)
    if state.ndim != 1 or state.size == 0:
        raise InvalidDimensionError("State must be a non-empty 1-d sequence")
    if n is not None and state.size != n:
        raise InvalidDimensionError(
            f"State has length {state.size}, model dimension is {n}"
        )
    if not np.all((state == 1) | (state == -1)):
        raise InvalidPerturbationError("State entries must be -1 or +1")
    return _readonly(state.astype(np.int8))


@dataclass(slots=True, frozen=True, eq=False)
class PerturbationVector:
    """A Rademacher vector c in {-1,1}^n"""

    entries: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "entries", as_state(self.entries))

    @property
    def n(self) -> int:
        return int(self.entries.size)

    def dot(self, x: Sequence[int] | np.ndarray) -> int:
        """Inner product <c, x>"""
        state = as_state(x, self.n)
        return int(np.dot(self.entries.astype(np.int64), state))

    def __len__(self) -> int:
        return self.n

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PerturbationVector):
            return NotImplemented
        return bool(np.array_equal(self.entries, other.entries))

    def __hash__(self) -> int:
        return hash(self.entries.tobytes())

    def __repr__(self) -> str:
        return f"PerturbationVector({self.entries.tolist()})"


@dataclass(slots=True, frozen=True, eq=False)
class RealUnaryPerturbation:
    """
    Per-variable unary tables u_i(x_i).

    Row i holds (u_i(-1), u_i(+1)); units are whatever the consumer expects
    (log2 units at the oracle boundary).
    """

    values: np.ndarray

    def __post_init__(self):
        values = np.array(self.values, dtype=np.float64)
        if values.ndim != 2 or values.shape[1] != 2 or values.shape[0] == 0:
            raise InvalidDimensionError("Unaries must have shape (n, 2) with n >= 1")
        if not np.all(np.isfinite(values)):
            raise InvalidPerturbationError("Unary values must be finite")
        object.__setattr__(self, "values", _readonly(values))

    @classmethod
    def zeros(cls, n: int) -> "RealUnaryPerturbation":
        if n < 1:
            raise InvalidDimensionError()
        return cls(np.zeros((n, 2)))

    @property
    def n(self) -> int:
        return int(self.values.shape[0])

    @property
    def minus(self) -> np.ndarray:
        return self.values[:, 0]

    @property
    def plus(self) -> np.ndarray:
        return self.values[:, 1]

    def evaluate(self, x: Sequence[int] | np.ndarray) -> float:
        """Sum of u_i(x_i) over all variables"""
        state = as_state(x, self.n)
        return float(np.where(state > 0, self.plus, self.minus).sum())

    def scaled(self, factor: float) -> "RealUnaryPerturbation":
        return RealUnaryPerturbation(self.values * factor)

    def __len__(self) -> int:
        return self.n

    def __repr__(self) -> str:
        return f"RealUnaryPerturbation(n={self.n})"


@dataclass(slots=True, frozen=True, eq=False)
class OracleResult:
    """Optimal value of a perturbed maximization and an attaining state"""

    value: float
    state: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "state", as_state(self.state))
        object.__setattr__(self, "value", float(self.value))


class BoundConfig(BaseModel):
    """Inputs of the Rademacher estimator and bounds"""

    model_config = ConfigDict(frozen=True)

    k: int = Field(default=1, ge=1, description="Number of oracle samples")
    seed: int = Field(default=0, ge=0, lt=2**64)
    resample_limit: int = Field(default=DEFAULT_RESAMPLE_LIMIT, ge=0)
    oracle_gap: float = Field(
        default=0.0,
        ge=0.0,
        allow_inf_nan=False,
        description="Known gap between the oracle value and the true maximum",
    )

    @property
    def confidence(self) -> float:
        return CONFIDENCE


class BoundReport(BaseModel):
    """High-probability bounds on log2 Z(w) from one estimator run"""

    model_config = ConfigDict(frozen=True)

    n: int = Field(ge=1)
    k: int = Field(ge=1)
    delta_bar: float
    slack: float
    psi_lb: float
    psi_ub: float
    lambda_used: float | None = None
    beta_opt: float | None = Field(default=None, gt=0.0, le=0.5)
    lambda_regime: LambdaRegime
    w_star_choice: WStarChoice
    resamples_used: int = Field(default=0, ge=0)
    lower_fallback: bool = False
    upper_fallback: bool = False
    confidence: float = CONFIDENCE

    @model_validator(mode="after")
    def _check_slack(self) -> "BoundReport":
        if self.slack != math.sqrt(SLACK_FACTOR * self.n / self.k):
            raise ValueError("slack must equal sqrt(6n/k)")
        return self

    @computed_field  # type: ignore[prop-decorator]
    @property
    def log_base_e_view(self) -> tuple[float, float, float]:
        """(delta_bar, psi_lb, psi_ub) converted to natural-log units"""
        return (self.delta_bar * LN2, self.psi_lb * LN2, self.psi_ub * LN2)

    @property
    def crossed(self) -> bool:
        return (
            math.isfinite(self.psi_lb)
            and math.isfinite(self.psi_ub)
            and self.psi_lb > self.psi_ub
        )
