import importlib
import math

import pytest

from radbound.cli.verify import CheckResult, VerificationSuite, suite
from radbound.errors import ZeroWeightError


class TestVerificationSuite:

    def setup_method(self):
        self.suite = VerificationSuite()

        @self.suite.check("passes")
        def passes(seed):
            return True, f"seed {seed}"

        @self.suite.check("raises")
        def raises(seed):
            raise ZeroWeightError()

    def test_names_in_order(self):
        """Test registration order is kept"""
        assert self.suite.names == ["passes", "raises"]

    def test_duplicate(self):
        """Test names are unique"""
        with pytest.raises(ValueError):
            self.suite.check("passes")(lambda seed: (True, ""))

    def test_run(self):
        """Test library errors become failed checks"""
        results = self.suite.run(7)

        assert results[0] == CheckResult("passes", True, "seed 7")
        assert not results[1].passed
        assert results[1].detail == "ZeroWeightError: All weights are zero"

    def test_run_subset(self):
        """Test running selected checks"""
        assert [r.name for r in self.suite.run(0, ["raises"])] == ["raises"]


class TestBuiltinChecks:

    def test_registered(self):
        """Test the built-in battery"""
        assert suite.names == [
            "closed-forms",
            "sandwich",
            "concentration",
            "massart",
            "graph-cut",
            "sat-delta",
            "gumbel-soundness",
            "grid-exact",
            "scale-equivariance",
        ]

    @pytest.mark.parametrize(
        "name", ["closed-forms", "grid-exact", "scale-equivariance", "sat-delta"]
    )
    def test_fast_checks_pass(self, name):
        """Test the quick checks on the default seed"""
        (result,) = suite.run(0, [name])

        assert result.passed, result.detail

    def test_concentration_rejects_wide_slack(self, monkeypatch):
        """Test a slack missing the 1/k factor fails the concentration check"""
        verify_module = importlib.import_module("radbound.cli.verify")
        monkeypatch.setattr(verify_module, "slack", lambda n, k: math.sqrt(6 * n))

        (result,) = suite.run(0, ["concentration"])

        assert not result.passed
        assert result.detail.startswith("slack(8, 25)=")
