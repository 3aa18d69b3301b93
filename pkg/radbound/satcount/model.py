import logging
import os
from collections.abc import Sequence

import numpy as np

from radbound.core.constants import MAXSAT_CMD_ENV
from radbound.core.model import WeightModel
from radbound.core.sampling import to_unary
from radbound.core.types import (
    OracleResult,
    PerturbationVector,
    RealUnaryPerturbation,
    as_state,
)
from radbound.errors.exceptions import ExternalSolverError, UnknownResultError
from radbound.satcount.cnf import CnfFormula
from radbound.satcount.solver import first_attaining, maximize_satisfying
from radbound.satcount.wcnf import (
    invoke_solver,
    parse_maxsat_assignment,
    parse_maxsat_result,
)

logger = logging.getLogger(__name__)


class SatWeightModel(WeightModel):
    """
    Indicator weight of a CNF formula: w(x) = 1 if x satisfies it, else 0.

    Rademacher perturbations go to the external MaxSAT command when one is
    configured; real unaries (and everything else) use the built-in solver.
    """

    def __init__(self, formula: CnfFormula, maxsat_command: str | None = None):
        self.formula = formula
        self.maxsat_command = maxsat_command

    @classmethod
    def from_env(cls, formula: CnfFormula) -> "SatWeightModel":
        return cls(formula, os.environ.get(MAXSAT_CMD_ENV) or None)

    @property
    def n(self) -> int:
        return self.formula.num_vars

    @property
    def log2_w_min(self) -> float:
        return 0.0

    @property
    def log2_w_max(self) -> float:
        return 0.0

    def log2_weight(self, x: Sequence[int] | np.ndarray) -> float:
        return 0.0 if self.formula.satisfied_by(x) else -np.inf

    def log2_weights(self, states: np.ndarray) -> np.ndarray:
        return np.where(self.formula.satisfied_mask(states), 0.0, -np.inf)

    def maximize(self, unaries: RealUnaryPerturbation) -> OracleResult:
        return maximize_satisfying(self.formula, unaries)

    def delta(self, c: PerturbationVector) -> OracleResult:
        if self.maxsat_command is None:
            return super().delta(c)
        self.check_dimension(c.n)
        output = invoke_solver(self.formula, c, self.maxsat_command)
        value = self.n - 2 * parse_maxsat_result(output)
        state = parse_maxsat_assignment(output, self.n)
        if state is None:
            raise UnknownResultError("Solver output has no assignment line")
        state = as_state(state, self.n)
        if not self.formula.satisfied_by(state) or c.dot(state) != value:
            raise ExternalSolverError(
                "Solver assignment does not attain the reported optimum"
            )
        # solvers may report any optimal model; keep the canonical one
        state = first_attaining(self.formula, to_unary(c), value)
        return OracleResult(value=float(value), state=state)
