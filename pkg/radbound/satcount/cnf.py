import logging
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from radbound.core.constants import SAT_BRUTE_FORCE_MAX_VARS
from radbound.core.types import as_state
from radbound.errors.exceptions import (
    InvalidDimensionError,
    InvalidParameterError,
    ParseError,
    SizeLimitError,
)

logger = logging.getLogger(__name__)

_CHUNK = 1 << 18


@dataclass(slots=True, frozen=True)
class CnfFormula:
    """
    Conjunction of clauses over variables 1..num_vars.

    Literals are signed variable indices. Duplicate literals are merged and
    tautological clauses (x and not x) are dropped. Variable v maps to state
    position v - 1, with true meaning +1.
    """

    num_vars: int
    clauses: tuple[tuple[int, ...], ...] = ()

    def __post_init__(self):
        if self.num_vars < 1:
            raise InvalidDimensionError("A formula needs at least one variable")
        normalized = []
        for clause in self.clauses:
            literals = tuple(dict.fromkeys(int(literal) for literal in clause))
            if not literals:
                raise InvalidParameterError("Clauses must be non-empty")
            for literal in literals:
                if literal == 0 or abs(literal) > self.num_vars:
                    raise InvalidParameterError(
                        f"Literal {literal} is outside 1..{self.num_vars}"
                    )
            if any(-literal in literals for literal in literals):
                continue
            normalized.append(literals)
        object.__setattr__(self, "clauses", tuple(normalized))

    @classmethod
    def from_clauses(
        cls, num_vars: int, clauses: Iterable[Iterable[int]]
    ) -> "CnfFormula":
        return cls(num_vars, tuple(tuple(clause) for clause in clauses))

    @property
    def num_clauses(self) -> int:
        return len(self.clauses)

    def satisfied_by(self, x: Sequence[int] | np.ndarray) -> bool:
        state = as_state(x, self.num_vars)
        return all(
            any((state[abs(lit) - 1] > 0) == (lit > 0) for lit in clause)
            for clause in self.clauses
        )

    def satisfied_mask(self, states: np.ndarray) -> np.ndarray:
        """Boolean mask over the rows of a (m, num_vars) array of states"""
        positive = np.asarray(states) > 0
        mask = np.ones(positive.shape[0], dtype=bool)
        for clause in self.clauses:
            hit = np.zeros_like(mask)
            for literal in clause:
                column = positive[:, abs(literal) - 1]
                hit |= column if literal > 0 else ~column
            mask &= hit
        return mask


def _states(start: int, stop: int, n: int) -> np.ndarray:
    indices = np.arange(start, stop, dtype=np.int64)
    return ((indices[:, None] >> np.arange(n - 1, -1, -1)) & 1) * 2 - 1


def brute_force_model_count(formula: CnfFormula) -> int:
    """Number of satisfying assignments, by enumeration"""
    n = formula.num_vars
    if n > SAT_BRUTE_FORCE_MAX_VARS:
        raise SizeLimitError(
            f"Enumeration supports at most {SAT_BRUTE_FORCE_MAX_VARS} variables"
        )
    total = 1 << n
    count = 0
    for start in range(0, total, _CHUNK):
        stop = min(start + _CHUNK, total)
        count += int(formula.satisfied_mask(_states(start, stop, n)).sum())
    logger.debug("brute_force_model_count: %d vars, %d models", n, count)
    return count


def parse_dimacs(text: str) -> CnfFormula:
    """
    Read a DIMACS CNF file.

    'c' lines are comments and a '%' line ends the clause section. Clauses
    may span lines and end with 0.
    """
    header: tuple[int, int] | None = None
    clauses: list[tuple[int, ...]] = []
    pending: list[int] = []
    last_line = 0

    for line_number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("%"):
            break
        last_line = line_number
        tokens = line.split()
        if tokens[0] == "p":
            if header is not None:
                raise ParseError("Duplicate problem line", line_number=line_number)
            if len(tokens) != 4 or tokens[1] != "cnf":
                raise ParseError(
                    "Problem line must read 'p cnf <vars> <clauses>'",
                    line_number=line_number,
                )
            try:
                header = (int(tokens[2]), int(tokens[3]))
            except ValueError:
                raise ParseError("Non-integer problem line", line_number=line_number)
            if header[0] < 1 or header[1] < 0:
                raise ParseError("Invalid problem sizes", line_number=line_number)
            continue
        if header is None:
            raise ParseError("Clause before the problem line", line_number=line_number)
        for token in tokens:
            try:
                literal = int(token)
            except ValueError:
                raise ParseError(f"Invalid literal {token!r}", line_number=line_number)
            if literal == 0:
                if not pending:
                    raise ParseError("Empty clause", line_number=line_number)
                clauses.append(tuple(pending))
                pending = []
            elif abs(literal) > header[0]:
                raise ParseError(
                    f"Literal {literal} is outside 1..{header[0]}",
                    line_number=line_number,
                )
            else:
                pending.append(literal)

    if header is None:
        raise ParseError("Missing problem line")
    if pending:
        raise ParseError("Last clause is not terminated by 0", line_number=last_line)
    if len(clauses) != header[1]:
        raise ParseError(
            f"Header declares {header[1]} clauses, found {len(clauses)}",
            line_number=last_line,
        )
    return CnfFormula(header[0], tuple(clauses))


def load_dimacs(path: str | Path) -> CnfFormula:
    return parse_dimacs(Path(path).read_text(encoding="utf-8"))
