import logging
import math
from collections.abc import Sequence
from functools import cached_property

import numpy as np

from radbound.core.constants import LN2, StreamTag
from radbound.core.model import WeightModel
from radbound.core.sampling import substream
from radbound.core.types import OracleResult, RealUnaryPerturbation, as_state
from radbound.errors.exceptions import (
    InvalidDimensionError,
    InvalidParameterError,
    NotSubmodularError,
)
from radbound.spinglass.oracle import grid_edges, minimum_cut_state

logger = logging.getLogger(__name__)


def _frozen(values, shape: tuple[int, int], name: str) -> np.ndarray:
    array = np.array(values, dtype=np.float64)
    if array.size == 0:
        array = array.reshape(shape)
    if array.shape != shape:
        raise InvalidDimensionError(
            f"{name} must have shape {shape}, got {array.shape}"
        )
    if not np.all(np.isfinite(array)):
        raise InvalidParameterError(f"{name} must be finite")
    array.setflags(write=False)
    return array


class GridIsingModel(WeightModel):
    """
    Spin glass on a rows x cols 4-neighbor grid.

    w(x) = exp(sum_i theta_i x_i + sum_(i,j) theta_ij x_i x_j), nodes indexed
    row-major. Potentials are kept in natural-log units; couplings must be
    non-negative so that the perturbed MAP problem is a minimum cut.
    """

    def __init__(self, fields, horizontal=None, vertical=None):
        fields = np.array(fields, dtype=np.float64)
        if fields.ndim != 2 or fields.size == 0:
            raise InvalidDimensionError("fields must be a non-empty 2-d array")
        rows, cols = fields.shape
        if horizontal is None:
            horizontal = np.zeros((rows, cols - 1))
        if vertical is None:
            vertical = np.zeros((rows - 1, cols))
        self._fields = _frozen(fields, (rows, cols), "fields")
        self._horizontal = _frozen(horizontal, (rows, cols - 1), "horizontal")
        self._vertical = _frozen(vertical, (rows - 1, cols), "vertical")
        if np.any(self._horizontal < 0) or np.any(self._vertical < 0):
            raise NotSubmodularError("Couplings must be non-negative")

    @property
    def rows(self) -> int:
        return self._fields.shape[0]

    @property
    def cols(self) -> int:
        return self._fields.shape[1]

    @property
    def n(self) -> int:
        return self.rows * self.cols

    @property
    def fields(self) -> np.ndarray:
        """Local fields theta_i as a (rows, cols) array"""
        return self._fields

    @property
    def horizontal(self) -> np.ndarray:
        """Couplings between (r, c) and (r, c+1)"""
        return self._horizontal

    @property
    def vertical(self) -> np.ndarray:
        """Couplings between (r, c) and (r+1, c)"""
        return self._vertical

    @property
    def has_couplings(self) -> bool:
        return bool(np.any(self._horizontal > 0) or np.any(self._vertical > 0))

    def node(self, row: int, col: int) -> int:
        return row * self.cols + col

    def edges(self) -> list[tuple[int, int, float]]:
        """All grid edges as (i, j, theta_ij) with i < j"""
        return grid_edges(self._horizontal, self._vertical)

    def potential(self, x: Sequence[int] | np.ndarray) -> float:
        """theta(x) in natural-log units"""
        return float(self.potentials(as_state(x, self.n)[None, :])[0])

    def potentials(self, states: np.ndarray) -> np.ndarray:
        grid = np.asarray(states, dtype=np.float64).reshape(-1, self.rows, self.cols)
        total = (grid * self._fields).sum(axis=(1, 2))
        total += (grid[:, :, :-1] * grid[:, :, 1:] * self._horizontal).sum(axis=(1, 2))
        total += (grid[:, :-1, :] * grid[:, 1:, :] * self._vertical).sum(axis=(1, 2))
        return total

    def log2_weight(self, x: Sequence[int] | np.ndarray) -> float:
        return self.potential(x) / LN2

    def log2_weights(self, states: np.ndarray) -> np.ndarray:
        return self.potentials(states) / LN2

    def maximize(self, unaries: RealUnaryPerturbation) -> OracleResult:
        state = minimum_cut_state(
            self._fields, self._horizontal, self._vertical, unaries
        )
        value = unaries.evaluate(state) + self.log2_weight(state)
        logger.debug("map_oracle: n=%d value=%.12g", self.n, value)
        return OracleResult(value=value, state=state)

    @cached_property
    def log2_w_max(self) -> float:
        return log2_w_max(self)

    @property
    def log2_w_min(self) -> float:
        return log2_w_min_lower_bound(self)

    def __repr__(self) -> str:
        return f"GridIsingModel(rows={self.rows}, cols={self.cols})"


def generate(
    rows: int, cols: int, coupling_max: float, seed: int
) -> GridIsingModel:
    """Fields uniform on [-1, 1], couplings uniform on [0, coupling_max)"""
    if rows < 1 or cols < 1:
        raise InvalidDimensionError(f"Grid must be at least 1x1, got {rows}x{cols}")
    if not math.isfinite(coupling_max) or coupling_max < 0:
        raise InvalidParameterError(
            f"coupling_max must be finite and >= 0, got {coupling_max}"
        )
    rng = substream(seed, StreamTag.SPINGLASS)
    fields = rng.uniform(-1.0, 1.0, size=(rows, cols))
    horizontal = rng.uniform(0.0, 1.0, size=(rows, cols - 1)) * coupling_max
    vertical = rng.uniform(0.0, 1.0, size=(rows - 1, cols)) * coupling_max
    return GridIsingModel(fields, horizontal, vertical)


def map_oracle(model: GridIsingModel, unaries: RealUnaryPerturbation) -> OracleResult:
    """
    max_x { sum_i u_i(x_i) + log2 w(x) } by a single minimum cut.

    Returns the maximizer with the fewest +1 spins, which is the
    lexicographically smallest one. The value is recomputed from the state.
    """
    return model.maximize(unaries)


def potential(model: GridIsingModel, x: Sequence[int] | np.ndarray) -> float:
    return model.potential(x)


def log2_weight(model: GridIsingModel, x: Sequence[int] | np.ndarray) -> float:
    return model.log2_weight(x)


def log2_w_max(model: GridIsingModel) -> float:
    """Exact log2 of the largest weight (MAP with zero perturbation)"""
    return model.maximize(RealUnaryPerturbation.zeros(model.n)).value


def log2_w_min_lower_bound(model: GridIsingModel) -> float:
    """(-sum |theta_i| - sum theta_ij) / ln 2, never above log2 of the least weight"""
    total = np.abs(model.fields).sum() + model.horizontal.sum() + model.vertical.sum()
    return float(-total / LN2)


def separable_ln_z(model: GridIsingModel) -> float:
    """ln Z = sum_i ln(2 cosh theta_i) for a model without couplings"""
    if model.has_couplings:
        raise InvalidParameterError("Closed form needs all couplings equal to 0")
    return float(np.logaddexp(model.fields, -model.fields).sum())
