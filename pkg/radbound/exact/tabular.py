import logging
from collections.abc import Iterable, Sequence

import numpy as np
from scipy.special import logsumexp

from radbound.core.constants import EXACT_RADEMACHER_MAX_N, LN2, TABULAR_MAX_N
from radbound.core.model import WeightModel
from radbound.core.types import (
    OracleResult,
    PerturbationVector,
    RealUnaryPerturbation,
    as_state,
)
from radbound.errors.exceptions import (
    InvalidDimensionError,
    InvalidParameterError,
    SizeLimitError,
    ZeroWeightError,
)

logger = logging.getLogger(__name__)

# States per vectorized block when enumerating the full table
_CHUNK = 1 << 18


def state_from_index(index: int, n: int) -> np.ndarray:
    """
    State with table position `index`.

    Variable 0 is the most significant bit and bit value 1 means +1, so the
    table order is the lexicographic order of states with -1 before +1.
    """
    bits = (index >> np.arange(n - 1, -1, -1)) & 1
    return as_state(2 * bits - 1)


def index_from_state(x: Sequence[int] | np.ndarray) -> int:
    state = as_state(x)
    index = 0
    for value in state:
        index = (index << 1) | int(value > 0)
    return index


def all_states(n: int) -> np.ndarray:
    """All 2^n states as rows, in table order"""
    if n < 1:
        raise InvalidDimensionError()
    if n > TABULAR_MAX_N:
        raise SizeLimitError(f"Cannot enumerate 2^{n} states")
    indices = np.arange(1 << n, dtype=np.int64)
    bits = (indices[:, None] >> np.arange(n - 1, -1, -1)) & 1
    return (2 * bits - 1).astype(np.int8)


def _unary_sums(unaries: RealUnaryPerturbation, start: int, stop: int) -> np.ndarray:
    n = unaries.n
    indices = np.arange(start, stop, dtype=np.int64)
    total = np.zeros(stop - start)
    for i in range(n):
        bit = (indices >> (n - 1 - i)) & 1
        total += np.where(bit == 1, unaries.plus[i], unaries.minus[i])
    return total


class TabularWeightModel(WeightModel):
    """Weight function stored as a dense table of 2^n entries"""

    def __init__(
        self,
        weights: Iterable[float] | np.ndarray | None = None,
        *,
        log2_weights: Iterable[float] | np.ndarray | None = None,
    ):
        if (weights is None) == (log2_weights is None):
            raise InvalidParameterError(
                "Provide exactly one of weights or log2_weights"
            )
        if weights is not None:
            table = np.asarray(weights, dtype=np.float64).ravel()
            if np.any(~np.isfinite(table)) or np.any(table < 0):
                raise InvalidParameterError("Weights must be finite and >= 0")
            with np.errstate(divide="ignore"):
                log_table = np.log2(table)
        else:
            log_table = np.asarray(log2_weights, dtype=np.float64).ravel()
            if np.any(np.isnan(log_table)) or np.any(np.isposinf(log_table)):
                raise InvalidParameterError("log2 weights must be < +inf")

        size = log_table.size
        n = size.bit_length() - 1
        if size < 2 or (1 << n) != size:
            raise InvalidDimensionError(
                f"Table size must be 2^n with n >= 1, got {size}"
            )
        if n > TABULAR_MAX_N:
            raise SizeLimitError(f"Tabular models support n <= {TABULAR_MAX_N}")
        if not np.any(np.isfinite(log_table)):
            raise ZeroWeightError()

        log_table.setflags(write=False)
        self._n = n
        self._log2 = log_table

    @classmethod
    def from_log2_weights(
        cls, log2_weights: Iterable[float] | np.ndarray
    ) -> "TabularWeightModel":
        return cls(log2_weights=log2_weights)

    @classmethod
    def indicator(
        cls, n: int, members: Iterable[Sequence[int] | np.ndarray]
    ) -> "TabularWeightModel":
        """Indicator weight of a set A of states"""
        if n < 1:
            raise InvalidDimensionError()
        if n > TABULAR_MAX_N:
            raise SizeLimitError(f"Tabular models support n <= {TABULAR_MAX_N}")
        table = np.zeros(1 << n)
        for member in members:
            table[index_from_state(as_state(member, n))] = 1.0
        return cls(table)

    @classmethod
    def from_model(cls, model: WeightModel) -> "TabularWeightModel":
        """Enumerate any small model into a table"""
        return cls(log2_weights=model.log2_weights(all_states(model.n)))

    @property
    def n(self) -> int:
        return self._n

    @property
    def log2_table(self) -> np.ndarray:
        return self._log2

    @property
    def log2_w_min(self) -> float:
        return float(self._log2[np.isfinite(self._log2)].min())

    @property
    def log2_w_max(self) -> float:
        return float(self._log2.max())

    def scaled(self, factor: float) -> "TabularWeightModel":
        """The model a * w"""
        if not factor > 0:
            raise InvalidParameterError("Scale factor must be positive")
        return TabularWeightModel(log2_weights=self._log2 + np.log2(factor))

    def log2_weight(self, x: Sequence[int] | np.ndarray) -> float:
        return float(self._log2[index_from_state(as_state(x, self._n))])

    def log2_weights(self, states: np.ndarray) -> np.ndarray:
        states = np.asarray(states)
        weights = (states > 0).astype(np.int64) << np.arange(self._n - 1, -1, -1)
        return self._log2[weights.sum(axis=1)]

    def maximize(self, unaries: RealUnaryPerturbation) -> OracleResult:
        self.check_dimension(unaries.n)
        size = self._log2.size
        best_value = -np.inf
        best_index = -1
        for start in range(0, size, _CHUNK):
            stop = min(start + _CHUNK, size)
            objective = self._log2[start:stop] + _unary_sums(unaries, start, stop)
            position = int(np.argmax(objective))
            # strict comparison keeps the earliest (lexicographically smallest) state
            if objective[position] > best_value:
                best_value = float(objective[position])
                best_index = start + position
        if best_index < 0:
            raise ZeroWeightError()
        return OracleResult(best_value, state_from_index(best_index, self._n))


def brute_force_log2_Z(model: TabularWeightModel) -> float:
    """log2 of the exact total weight, accumulated in log space"""
    return float(logsumexp(model.log2_table * LN2) / LN2)


def brute_force_delta(
    model: TabularWeightModel, c: PerturbationVector
) -> tuple[float, np.ndarray]:
    """Exact delta(c, w) and the lexicographically smallest maximizer"""
    result = model.delta(c)
    return result.value, result.state


def exact_weighted_rademacher(model: TabularWeightModel) -> float:
    """Average of delta(c, w) over all 2^n perturbation vectors"""
    n = model.n
    if n > EXACT_RADEMACHER_MAX_N:
        raise SizeLimitError(
            f"Exhaustive Rademacher complexity supports n <= {EXACT_RADEMACHER_MAX_N}"
        )
    states = all_states(n).astype(np.float64)
    log_table = model.log2_table
    total = 0.0
    block = max(1, _CHUNK >> n)
    for start in range(0, states.shape[0], block):
        directions = states[start : start + block]
        total += float(np.max(directions @ states.T + log_table, axis=1).sum())
    value = total / states.shape[0]
    logger.debug("Exact weighted Rademacher complexity n=%d: %.6f", n, value)
    return value
