import shutil

import numpy as np
import pytest

from radbound.core.constants import MAXSAT_CMD_ENV
from radbound.core.sampling import sample_rademacher, substream
from radbound.core.types import PerturbationVector
from radbound.errors import ExternalSolverError, UnknownResultError
from radbound.exact.tabular import all_states
from radbound.satcount import CnfFormula, SatWeightModel, delta_sat

needs_sh = pytest.mark.skipif(shutil.which("sh") is None, reason="needs a POSIX shell")


def canned(*lines: str) -> str:
    body = "; ".join(f"echo '{line}'" for line in lines)
    return f'sh -c "{body}" {{path}}'


class TestSatWeightModel:

    def setup_method(self):
        self.formula = CnfFormula.from_clauses(3, [[1, 2], [-2, 3]])
        self.model = SatWeightModel(self.formula)

    def test_extremes(self):
        """Test the indicator weight has w_min = w_max = 1"""
        assert self.model.n == 3
        assert self.model.log2_w_min == 0.0
        assert self.model.log2_w_max == 0.0

    def test_weights(self):
        """Test satisfying states weigh 1, others 0"""
        states = all_states(3)

        weights = self.model.log2_weights(states)

        for state, weight in zip(states, weights):
            assert weight == self.model.log2_weight(state)
            assert (weight == 0.0) == self.formula.satisfied_by(state)
        assert np.isneginf(weights).sum() == 8 - 4

    def test_internal_delta(self):
        """Test delta without a MaxSAT command"""
        rng = substream(5)
        for _ in range(5):
            c = sample_rademacher(3, rng)

            assert self.model.delta(c).value == delta_sat(self.formula, c)[0]

    def test_from_env(self, monkeypatch):
        """Test the command comes from the environment"""
        monkeypatch.setenv(MAXSAT_CMD_ENV, "solver {path}")
        assert SatWeightModel.from_env(self.formula).maxsat_command == "solver {path}"

        monkeypatch.delenv(MAXSAT_CMD_ENV)
        assert SatWeightModel.from_env(self.formula).maxsat_command is None


@needs_sh
class TestExternalDelta:

    def test_accepts_consistent_answer(self):
        """Test value and witness from solver output"""
        model = SatWeightModel(
            CnfFormula(2), canned("o 0", "s OPTIMUM FOUND", "v 1 2")
        )

        result = model.delta(PerturbationVector([1, 1]))

        assert result.value == 2.0
        assert result.state.tolist() == [1, 1]

    def test_rejects_inconsistent_answer(self):
        """Test a witness that does not attain the reported value"""
        model = SatWeightModel(
            CnfFormula(2), canned("o 0", "s OPTIMUM FOUND", "v -1 2")
        )

        with pytest.raises(ExternalSolverError):
            model.delta(PerturbationVector([1, 1]))

    def test_canonicalizes_tied_witness(self):
        """Test a valid but non-canonical optimum is replaced by the -1-first one"""
        formula = CnfFormula.from_clauses(2, [[1, 2]])
        model = SatWeightModel(
            formula, canned("o 1", "s OPTIMUM FOUND", "v 1 -2")
        )
        c = PerturbationVector([-1, -1])

        result = model.delta(c)

        assert result.value == 0.0
        assert result.state.tolist() == [-1, 1]
        assert result.state.tolist() == delta_sat(formula, c)[1].tolist()

    def test_requires_assignment(self):
        """Test output without a 'v' line"""
        model = SatWeightModel(CnfFormula(2), canned("o 0", "s OPTIMUM FOUND"))

        with pytest.raises(UnknownResultError):
            model.delta(PerturbationVector([1, 1]))
