import shutil

import pytest

from radbound.cli.verify import random_3cnf, wcnf_optimum_by_enumeration
from radbound.core.sampling import sample_rademacher, substream
from radbound.core.types import PerturbationVector
from radbound.errors import (
    ExternalSolverError,
    InvalidDimensionError,
    InvalidParameterError,
    ParseError,
    UnknownResultError,
    UnsatisfiableError,
)
from radbound.satcount import (
    CnfFormula,
    delta_sat,
    export_wcnf,
    format_wcnf,
    invoke_solver,
    parse_maxsat_assignment,
    parse_maxsat_result,
    run_external_maxsat,
)

needs_sh = pytest.mark.skipif(shutil.which("sh") is None, reason="needs a POSIX shell")


class TestFormatWcnf:

    def test_text(self):
        """Test hard clauses at weight top and one soft unit per variable"""
        formula = CnfFormula.from_clauses(2, [[1, -2]])

        text = format_wcnf(formula, PerturbationVector([1, -1]))

        assert text == "p wcnf 2 3 3\n3 1 -2 0\n1 1 0\n1 -2 0\n"

    def test_dimension(self):
        """Test mismatched perturbations"""
        with pytest.raises(InvalidDimensionError):
            format_wcnf(CnfFormula(3), PerturbationVector([1]))

    def test_export(self, tmp_path):
        """Test writing the instance to disk"""
        path = tmp_path / "x.wcnf"
        formula = CnfFormula(2)
        c = PerturbationVector([1, 1])

        export_wcnf(formula, c, path)

        assert path.read_text(encoding="utf-8") == format_wcnf(formula, c)

    def test_optimum_identity(self):
        """Test n - 2 * optimal soft cost equals delta"""
        rng = substream(12)
        for _ in range(10):
            formula = random_3cnf(10, 30, rng)
            c = sample_rademacher(10, rng)

            cost = wcnf_optimum_by_enumeration(format_wcnf(formula, c))

            assert 10 - 2 * cost == delta_sat(formula, c)[0]


class TestParseMaxsatResult:

    def test_last_cost_wins(self):
        """Test improving 'o' lines"""
        assert parse_maxsat_result("c hi\no 5\no 3\ns OPTIMUM FOUND\nv 1\n") == 3

    def test_unsatisfiable(self):
        """Test the UNSATISFIABLE status"""
        with pytest.raises(UnsatisfiableError):
            parse_maxsat_result("s UNSATISFIABLE\n")

    @pytest.mark.parametrize(
        "text",
        ["o 3\n", "s UNKNOWN\n", "s OPTIMUM FOUND\n", "", "o 3\ns SATISFIABLE\n"],
    )
    def test_unknown(self, text):
        """Test output without a usable optimum"""
        with pytest.raises(UnknownResultError):
            parse_maxsat_result(text)

    def test_bad_cost(self):
        """Test a non-integer cost"""
        with pytest.raises(ParseError):
            parse_maxsat_result("o many\ns OPTIMUM FOUND\n")


class TestParseMaxsatAssignment:

    def test_literals(self):
        """Test signed literal lines, possibly split"""
        state = parse_maxsat_assignment("v 1 -2\nv 3 0\n", 3)

        assert state.tolist() == [1, -1, 1]

    def test_bit_string(self):
        """Test the compact 0/1 form"""
        assert parse_maxsat_assignment("v 101\n", 3).tolist() == [1, -1, 1]

    def test_missing(self):
        """Test output without a 'v' line"""
        assert parse_maxsat_assignment("o 1\n", 3) is None

    def test_incomplete(self):
        """Test an assignment that skips a variable"""
        with pytest.raises(UnknownResultError):
            parse_maxsat_assignment("v 1 -2\n", 3)


class TestInvokeSolver:

    def test_placeholder_required(self):
        """Test templates must name the instance path"""
        with pytest.raises(InvalidParameterError):
            invoke_solver(CnfFormula(1), PerturbationVector([1]), "solver")

    def test_missing_binary(self):
        """Test an executable that does not exist"""
        with pytest.raises(ExternalSolverError):
            invoke_solver(
                CnfFormula(1), PerturbationVector([1]), "no-such-maxsat-xyz {path}"
            )

    @needs_sh
    def test_instance_file_passed(self):
        """Test the solver reads the exported instance"""
        formula = CnfFormula.from_clauses(2, [[1, 2]])

        output = invoke_solver(
            formula, PerturbationVector([1, 1]), 'sh -c "head -n 1 $0" {path}'
        )

        assert output == "p wcnf 2 3 3\n"

    @needs_sh
    def test_run_external(self):
        """Test delta = n - 2 * cost from a canned solver"""
        command = "sh -c \"echo 'o 1'; echo 's OPTIMUM FOUND'\" {path}"

        value = run_external_maxsat(CnfFormula(4), PerturbationVector([1] * 4), command)

        assert value == 2
