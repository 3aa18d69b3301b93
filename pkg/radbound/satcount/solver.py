"""
Exact maximization of separable unaries over the models of a CNF formula.

This is the weighted partial MaxSAT view: hard clauses are the formula,
soft preferences are the unary tables. The search minimizes the total
regret sum_i (best_i - u_i(x_i)) by branch and bound with unit propagation.
"""

import logging

import numpy as np

from radbound.core.constants import TIE_TOLERANCE
from radbound.core.sampling import to_unary
from radbound.core.types import OracleResult, PerturbationVector, RealUnaryPerturbation
from radbound.errors.exceptions import InvalidDimensionError, UnsatisfiableError
from radbound.satcount.cnf import CnfFormula

logger = logging.getLogger(__name__)


class _Search:
    """Shared assignment state for the optimizing and canonicalizing passes"""

    def __init__(self, formula: CnfFormula, unaries: RealUnaryPerturbation):
        n = formula.num_vars
        self.n = n
        self.clauses = [
            [(abs(literal) - 1, 1 if literal > 0 else -1) for literal in clause]
            for clause in formula.clauses
        ]
        self.occurrences: list[list[int]] = [[] for _ in range(n)]
        for index, clause in enumerate(self.clauses):
            for var, _ in clause:
                self.occurrences[var].append(index)

        best = np.maximum(unaries.minus, unaries.plus)
        # regret[var][0] for -1, regret[var][1] for +1
        self.regret = np.column_stack(
            (best - unaries.minus, best - unaries.plus)
        ).tolist()
        self.preferred = [
            1 if plus > minus else -1
            for minus, plus in zip(unaries.minus, unaries.plus)
        ]
        self.assignment = [0] * n
        self.nodes = 0

    def cost_of(self, var: int, value: int) -> float:
        return self.regret[var][1 if value > 0 else 0]

    def undo(self, trail: list[int]) -> None:
        for var in trail:
            self.assignment[var] = 0

    def assign(self, var: int, value: int) -> list[int] | None:
        """
        Set var and every literal it forces.

        Returns the assigned variables, or None on conflict with the
        assignment left unchanged.
        """
        assignment = self.assignment
        trail: list[int] = []
        queue = [(var, value)]
        while queue:
            v, val = queue.pop()
            current = assignment[v]
            if current:
                if current != val:
                    self.undo(trail)
                    return None
                continue
            assignment[v] = val
            trail.append(v)
            for index in self.occurrences[v]:
                free = None
                free_count = 0
                satisfied = False
                for u, sign in self.clauses[index]:
                    a = assignment[u]
                    if a == 0:
                        free_count += 1
                        free = (u, sign)
                    elif a == sign:
                        satisfied = True
                        break
                if satisfied:
                    continue
                if free_count == 0:
                    self.undo(trail)
                    return None
                if free_count == 1:
                    queue.append(free)
        return trail

    def branch_variable(self) -> int | None:
        """Unassigned variable occurring most often in open clauses"""
        counts = [0] * self.n
        assignment = self.assignment
        any_open = False
        for clause in self.clauses:
            if any(assignment[u] == sign for u, sign in clause):
                continue
            any_open = True
            for u, _ in clause:
                if assignment[u] == 0:
                    counts[u] += 1
        if not any_open:
            return None
        return max(range(self.n), key=lambda v: (counts[v], -v))

    def initial_units(self) -> float | None:
        """Propagate unit clauses; returns their cost or None if contradictory"""
        cost = 0.0
        for clause in self.clauses:
            if len(clause) == 1:
                var, sign = clause[0]
                trail = self.assign(var, sign)
                if trail is None:
                    return None
                cost += sum(self.cost_of(v, self.assignment[v]) for v in trail)
        return cost

    def optimize(self, start_cost: float) -> float:
        """Least total regret over satisfying completions, inf if none"""
        best = [np.inf]

        def descend(cost: float) -> None:
            self.nodes += 1
            if cost >= best[0]:
                return
            var = self.branch_variable()
            if var is None:
                best[0] = cost
                return
            first = self.preferred[var]
            for value in (first, -first):
                trail = self.assign(var, value)
                if trail is None:
                    continue
                added = sum(self.cost_of(v, self.assignment[v]) for v in trail)
                descend(cost + added)
                self.undo(trail)

        descend(start_cost)
        return best[0]

    def first_in_order(self, start_cost: float, budget: float) -> bool:
        """
        Assign variables in index order, -1 first, keeping total regret within
        budget; leaves the lexicographically smallest such model assigned.
        """

        def descend(var: int, cost: float) -> bool:
            self.nodes += 1
            while var < self.n and self.assignment[var]:
                var += 1
            if var == self.n:
                return True
            for value in (-1, 1):
                trail = self.assign(var, value)
                if trail is None:
                    continue
                added = sum(self.cost_of(v, self.assignment[v]) for v in trail)
                if cost + added <= budget and descend(var + 1, cost + added):
                    return True
                self.undo(trail)
            return False

        return descend(0, start_cost)


def maximize_satisfying(
    formula: CnfFormula, unaries: RealUnaryPerturbation
) -> OracleResult:
    """
    max_x sum_i u_i(x_i) over assignments satisfying the formula.

    The optimum is found first; a second pass returns the lexicographically
    smallest assignment (with -1 before +1) attaining it.

    Raises:
        UnsatisfiableError: the formula has no model
    """
    if unaries.n != formula.num_vars:
        raise InvalidDimensionError(
            f"Unaries have dimension {unaries.n}, formula has {formula.num_vars} vars"
        )
    search = _Search(formula, unaries)
    root_cost = search.initial_units()
    if root_cost is None:
        raise UnsatisfiableError()
    optimum = search.optimize(root_cost)
    if optimum == np.inf:
        raise UnsatisfiableError()
    if not search.first_in_order(root_cost, optimum + TIE_TOLERANCE):
        raise UnsatisfiableError("Optimal assignment could not be reconstructed")

    state = np.array(search.assignment, dtype=np.int8)
    value = unaries.evaluate(state)
    logger.debug(
        "maximize_satisfying: %d vars, %d clauses, %d nodes, value=%.12g",
        formula.num_vars,
        formula.num_clauses,
        search.nodes,
        value,
    )
    return OracleResult(value=value, state=state)


def first_attaining(
    formula: CnfFormula, unaries: RealUnaryPerturbation, value: float
) -> np.ndarray:
    """
    Lexicographically smallest model with sum_i u_i(x_i) >= value.

    Used to canonicalize an optimum found elsewhere, e.g. by an external
    MaxSAT solver.

    Raises:
        UnsatisfiableError: no model reaches the value
    """
    search = _Search(formula, unaries)
    root_cost = search.initial_units()
    if root_cost is None:
        raise UnsatisfiableError()
    budget = float(np.maximum(unaries.minus, unaries.plus).sum()) - value
    if not search.first_in_order(root_cost, budget + TIE_TOLERANCE):
        raise UnsatisfiableError(f"No model reaches value {value}")
    return np.array(search.assignment, dtype=np.int8)


def delta_sat(formula: CnfFormula, c: PerturbationVector) -> tuple[int, np.ndarray]:
    """
    delta(c, w) for the indicator weight of the formula:
    n - 2 * (least Hamming distance from c to a model), with the witness.
    """
    if c.n != formula.num_vars:
        raise InvalidDimensionError(
            f"Perturbation has dimension {c.n}, formula has {formula.num_vars} vars"
        )
    result = maximize_satisfying(formula, to_unary(c))
    return int(round(result.value)), result.state
