"""
External MaxSAT path: weighted partial CNF export, solver invocation and
the `o` / `s` / `v` output protocol.
"""

import logging
import shlex
import subprocess
import tempfile
from pathlib import Path

import numpy as np

from radbound.core.types import PerturbationVector
from radbound.errors.exceptions import (
    ExternalSolverError,
    InvalidDimensionError,
    InvalidParameterError,
    ParseError,
    UnknownResultError,
    UnsatisfiableError,
)
from radbound.satcount.cnf import CnfFormula

logger = logging.getLogger(__name__)

PATH_PLACEHOLDER = "{path}"


def format_wcnf(formula: CnfFormula, c: PerturbationVector) -> str:
    """
    Hard clauses get weight top = n + 1; one soft unit clause of weight 1
    per variable asks x_i = c_i. The optimum soft cost s gives delta = n - 2s.
    """
    n = formula.num_vars
    if c.n != n:
        raise InvalidDimensionError(
            f"Perturbation has dimension {c.n}, formula has {n} vars"
        )
    top = n + 1
    lines = [f"p wcnf {n} {formula.num_clauses + n} {top}"]
    for clause in formula.clauses:
        lines.append(" ".join(str(value) for value in (top, *clause, 0)))
    for i, sign in enumerate(c.entries.tolist(), start=1):
        lines.append(f"1 {i if sign > 0 else -i} 0")
    return "\n".join(lines) + "\n"


def export_wcnf(formula: CnfFormula, c: PerturbationVector, path: str | Path) -> None:
    Path(path).write_text(format_wcnf(formula, c), encoding="utf-8")


def parse_maxsat_result(text: str) -> int:
    """
    Optimum cost reported by a MaxSAT solver: the last `o` value before
    the `s` status line.

    Raises:
        UnsatisfiableError: status UNSATISFIABLE
        UnknownResultError: no status line, another status, or no `o` line
    """
    cost: int | None = None
    for line_number, raw in enumerate(text.splitlines(), start=1):
        tokens = raw.split()
        if not tokens:
            continue
        if tokens[0] == "o" and len(tokens) >= 2:
            try:
                cost = int(tokens[1])
            except ValueError:
                raise ParseError(f"Invalid cost {tokens[1]!r}", line_number=line_number)
        elif tokens[0] == "s":
            status = " ".join(tokens[1:])
            if status == "OPTIMUM FOUND":
                if cost is None:
                    raise UnknownResultError("Optimum reported without an 'o' line")
                return cost
            if status == "UNSATISFIABLE":
                raise UnsatisfiableError()
            raise UnknownResultError(f"Solver status {status!r}")
    raise UnknownResultError()


def parse_maxsat_assignment(text: str, num_vars: int) -> np.ndarray | None:
    """
    Assignment from `v` lines, either as signed literals or as a single 0/1
    string. None when the output has no `v` line.
    """
    tokens: list[str] = []
    for raw in text.splitlines():
        parts = raw.split()
        if parts and parts[0] == "v":
            tokens.extend(parts[1:])
    if not tokens:
        return None
    if len(tokens) == 1 and set(tokens[0]) <= {"0", "1"} and len(tokens[0]) == num_vars:
        return np.array([1 if bit == "1" else -1 for bit in tokens[0]], dtype=np.int8)
    state = np.zeros(num_vars, dtype=np.int8)
    for token in tokens:
        literal = int(token)
        if literal and abs(literal) <= num_vars:
            state[abs(literal) - 1] = 1 if literal > 0 else -1
    if np.any(state == 0):
        raise UnknownResultError("Assignment line does not cover every variable")
    return state


def invoke_solver(
    formula: CnfFormula, c: PerturbationVector, command_template: str
) -> str:
    """Write the instance to a temporary file, run the solver, return stdout"""
    if PATH_PLACEHOLDER not in command_template:
        raise InvalidParameterError(
            f"MaxSAT command template must contain {PATH_PLACEHOLDER}"
        )
    with tempfile.TemporaryDirectory(prefix="radbound-") as directory:
        path = Path(directory) / "instance.wcnf"
        export_wcnf(formula, c, path)
        args = [
            token.replace(PATH_PLACEHOLDER, str(path))
            for token in shlex.split(command_template)
        ]
        logger.debug("Running MaxSAT solver: %s", args)
        try:
            completed = subprocess.run(args, capture_output=True, text=True)
        except OSError as exc:
            raise ExternalSolverError(f"Cannot run {args[0]!r}: {exc}")
    if completed.returncode not in (0, 10, 20, 30):
        logger.warning(
            "MaxSAT solver exited with status %d: %s",
            completed.returncode,
            completed.stderr.strip()[:200],
        )
    return completed.stdout


def run_external_maxsat(
    formula: CnfFormula, c: PerturbationVector, command_template: str
) -> int:
    """delta(c, w) = n - 2 * optimum cost from the external solver"""
    output = invoke_solver(formula, c, command_template)
    return formula.num_vars - 2 * parse_maxsat_result(output)
