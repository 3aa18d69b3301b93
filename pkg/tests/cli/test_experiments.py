import math

import pytest

from radbound.cli.experiments import fan_out, run_sat_bounds, run_spinglass_sweep
from radbound.cli.spec import ExperimentSpec
from radbound.core.constants import StreamTag
from radbound.core.sampling import derive_seed
from radbound.spinglass import generate, separable_ln_z


class TestFanOut:

    def test_order(self):
        """Test results keep input order with and without threads"""
        items = list(range(20))

        assert fan_out(lambda x: x * x, items, 1) == [x * x for x in items]
        assert fan_out(lambda x: x * x, items, 4) == [x * x for x in items]


class TestSpinglassSweep:

    def setup_method(self):
        self.spec = ExperimentSpec(
            mode="spinglass-sweep",
            seed=3,
            k=2,
            trials=3,
            grid_rows=2,
            grid_cols=3,
            couplings=(0.0, 1.0),
        )

    def test_row_layout(self):
        """Test trial rows, a mean row per coupling and a summary"""
        rows = run_spinglass_sweep(self.spec)

        kinds = [row.kind for row in rows]
        assert kinds == ["trial"] * 3 + ["mean"] + ["trial"] * 3 + ["mean", "summary"]
        assert [row.coupling for row in rows[:4]] == [0.0] * 4
        assert all(row.n == 6 and row.k == 2 for row in rows)
        assert 0.0 <= rows[-1].sandwich_rate <= 1.0

    def test_exact_column(self):
        """Test ln Z at zero coupling is the separable closed form"""
        rows = run_spinglass_sweep(self.spec)

        for trial, row in enumerate(rows[:3]):
            seed = derive_seed(3, StreamTag.EXPERIMENT, 0, trial)
            expected = separable_ln_z(generate(2, 3, 0.0, seed))
            assert row.ln_z == pytest.approx(expected)
            assert row.sandwiched == (row.psi_lb <= row.ln_z <= row.psi_ub)

    def test_mean_row(self):
        """Test the mean row averages its trials"""
        rows = run_spinglass_sweep(self.spec)

        assert rows[3].psi_ub == pytest.approx(
            sum(row.psi_ub for row in rows[:3]) / 3
        )

    def test_workers_deterministic(self):
        """Test threads give the same table"""
        threaded = self.spec.model_copy(update={"workers": 3})

        assert run_spinglass_sweep(threaded) == run_spinglass_sweep(self.spec)


class TestSatBounds:

    def write(self, tmp_path, name: str, text: str):
        path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        return path

    def test_rows(self, tmp_path):
        """Test trial and mean rows for a satisfiable file"""
        path = self.write(tmp_path, "small.cnf", "p cnf 4 2\n1 2 0\n-3 4 0\n")
        spec = ExperimentSpec(mode="sat-bounds", cnf_paths=[path], trials=3)

        rows = run_sat_bounds(spec)

        assert [row.kind for row in rows] == ["trial"] * 3 + ["mean"]
        assert rows[0].instance == "small"
        assert (rows[0].num_vars, rows[0].num_clauses) == (4, 2)
        assert rows[0].ln_z == pytest.approx(math.log(9))

    def test_unsatisfiable(self, tmp_path):
        """Test an unsatisfiable file gets a single unsat row"""
        path = self.write(tmp_path, "bad.cnf", "p cnf 1 2\n1 0\n-1 0\n")
        spec = ExperimentSpec(mode="sat-bounds", cnf_paths=[path], trials=2)

        rows = run_sat_bounds(spec)

        assert [row.kind for row in rows] == ["unsat"]
        assert rows[0].psi_ub is None

    def test_no_clauses(self, tmp_path):
        """Test ln Z = n ln 2 for a formula without clauses"""
        path = self.write(tmp_path, "free.cnf", "p cnf 10 0\n")
        spec = ExperimentSpec(mode="sat-bounds", cnf_paths=[path], trials=2)

        rows = run_sat_bounds(spec)

        assert rows[0].ln_z == pytest.approx(10 * math.log(2))
        assert rows[0].delta_bar == pytest.approx(10 * math.log(2))

    def test_without_gumbel(self, tmp_path):
        """Test switching off the baseline leaves the theta columns empty"""
        path = self.write(tmp_path, "small.cnf", "p cnf 4 2\n1 2 0\n-3 4 0\n")
        spec = ExperimentSpec(
            mode="sat-bounds", cnf_paths=[path], trials=2, gumbel=False
        )

        rows = run_sat_bounds(spec)

        assert all(row.theta_ub is None and row.theta_lb is None for row in rows)
        assert all(row.psi_ub is not None for row in rows)
