import math
from dataclasses import dataclass, field

import numpy as np

from radbound.core.constants import LambdaRegime, WStarChoice
from radbound.core.types import PerturbationVector
from radbound.errors.exceptions import InvalidParameterError


@dataclass(slots=True, frozen=True)
class EstimatorResult:
    """Per-sample oracle values and their mean"""

    n: int
    deltas: tuple[float, ...]
    witnesses: tuple[np.ndarray, ...]
    perturbations: tuple[PerturbationVector, ...] = ()
    delta_bar: float = field(init=False)

    def __post_init__(self):
        if not self.deltas:
            raise InvalidParameterError("EstimatorResult needs at least one sample")
        object.__setattr__(self, "delta_bar", math.fsum(self.deltas) / len(self.deltas))

    @property
    def k(self) -> int:
        return len(self.deltas)


@dataclass(slots=True, frozen=True)
class LambdaDiagnostics:
    """How the lower bound was chosen"""

    regime: LambdaRegime
    lam: float | None = None
    a_value: float | None = None
    note: str | None = None


@dataclass(slots=True, frozen=True)
class BetaDiagnostics:
    """How the upper bound was chosen"""

    beta_opt: float
    w_star_choice: WStarChoice
    beta_min: float | None = None
    beta_max: float | None = None
    note: str | None = None
