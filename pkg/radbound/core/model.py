from abc import ABC, abstractmethod
from collections.abc import Sequence

import numpy as np

from radbound.core.sampling import to_unary
from radbound.core.types import (
    OracleResult,
    PerturbationVector,
    RealUnaryPerturbation,
)
from radbound.errors.exceptions import InvalidDimensionError


class WeightModel(ABC):
    """
    Weight function w over {-1,1}^n with an exact optimization oracle.

    Implementations provide:
    - maximize(u): max_x { sum_i u_i(x_i) + log2 w(x) } with an attaining x
    - log2_weight(x): log2 w(x), -inf for zero weight
    - optionally log2_w_min / log2_w_max (exact values or valid bounds)

    When several states attain the maximum the oracle returns the
    lexicographically smallest one, ordering -1 before +1.
    """

    @property
    @abstractmethod
    def n(self) -> int:
        """Dimension of the state space"""

    @abstractmethod
    def maximize(self, unaries: RealUnaryPerturbation) -> OracleResult:
        """Solve the unary-perturbed maximization in log2 units"""

    @abstractmethod
    def log2_weight(self, x: Sequence[int] | np.ndarray) -> float:
        """log2 w(x)"""

    @property
    def log2_w_min(self) -> float | None:
        """log2 of the smallest positive weight, or a lower bound on it"""
        return None

    @property
    def log2_w_max(self) -> float | None:
        """log2 of the largest weight, or an upper bound on it"""
        return None

    def delta(self, c: PerturbationVector) -> OracleResult:
        """delta(c, w) = max_x { <c, x> + log2 w(x) }"""
        self.check_dimension(c.n)
        return self.maximize(to_unary(c))

    def check_dimension(self, n: int) -> None:
        if n != self.n:
            raise InvalidDimensionError(
                f"Perturbation has dimension {n}, model has {self.n}"
            )

    def log2_weights(self, states: np.ndarray) -> np.ndarray:
        """log2 w for each row of a (m, n) array of states"""
        return np.array([self.log2_weight(state) for state in states], dtype=float)
