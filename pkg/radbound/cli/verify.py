"""
Property batteries run by `radbound --mode verify`.

Each check takes the root seed and returns (passed, detail). Checks are
registered on a suite with a decorator and run in registration order.
"""

import logging
import math
from collections.abc import Callable
from dataclasses import dataclass

import numpy as np

from radbound.bounds.gumbel import (
    GumbelConfig,
    gumbel_lower_trials,
    gumbel_slack,
    gumbel_upper_trials,
)
from radbound.bounds.lemmas import massart_bound
from radbound.bounds.rademacher import bound, estimate, lower_bound, slack, upper_bound
from radbound.bounds.types import EstimatorResult
from radbound.cli.spec import ExperimentSpec
from radbound.core.constants import LN2, StreamTag
from radbound.core.sampling import derive_seed, sample_rademacher, substream, to_unary
from radbound.core.types import BoundConfig
from radbound.errors.exceptions import RadboundError
from radbound.exact.grid import grid_exact_ln_Z
from radbound.exact.tabular import (
    TabularWeightModel,
    all_states,
    brute_force_log2_Z,
    exact_weighted_rademacher,
)
from radbound.satcount.cnf import CnfFormula, brute_force_model_count
from radbound.satcount.solver import delta_sat
from radbound.satcount.wcnf import format_wcnf, parse_maxsat_result
from radbound.spinglass.model import GridIsingModel, generate, map_oracle

logger = logging.getLogger(__name__)

CheckFunction = Callable[[int], tuple[bool, str]]


@dataclass(slots=True, frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


class VerificationSuite:
    """Ordered registry of named property checks"""

    def __init__(self):
        self._checks: dict[str, CheckFunction] = {}

    def check(self, name: str):
        """Register a check under `name`"""

        def decorator(func: CheckFunction) -> CheckFunction:
            if name in self._checks:
                raise ValueError(f"Duplicate check name {name!r}")
            self._checks[name] = func
            return func

        return decorator

    @property
    def names(self) -> list[str]:
        return list(self._checks)

    def run(self, seed: int, names: list[str] | None = None) -> list[CheckResult]:
        results = []
        for name in names or self.names:
            func = self._checks[name]
            try:
                passed, detail = func(seed)
            except RadboundError as exc:
                passed, detail = False, f"{type(exc).__name__}: {exc.message}"
            logger.info("check %s: %s", name, "pass" if passed else "FAIL")
            results.append(CheckResult(name=name, passed=passed, detail=detail))
        return results


suite = VerificationSuite()


def random_tabular(n: int, rng: np.random.Generator) -> TabularWeightModel:
    """Strictly positive random weights spanning a few orders of magnitude"""
    return TabularWeightModel.from_log2_weights(rng.uniform(-4.0, 4.0, size=1 << n))


def random_3cnf(
    num_vars: int, num_clauses: int, rng: np.random.Generator
) -> CnfFormula:
    """Random 3-CNF with distinct variables per clause, resampled until satisfiable"""
    while True:
        clauses = []
        for _ in range(num_clauses):
            variables = rng.choice(num_vars, size=3, replace=False) + 1
            signs = rng.choice((-1, 1), size=3)
            clauses.append(tuple(int(v) for v in variables * signs))
        formula = CnfFormula.from_clauses(num_vars, clauses)
        if brute_force_model_count(formula) > 0:
            return formula


def _rng(seed: int, *key: int) -> np.random.Generator:
    return substream(seed, StreamTag.EXPERIMENT, 1000, *key)


def _seed(seed: int, *key: int) -> int:
    return derive_seed(seed, StreamTag.EXPERIMENT, 1000, *key)


@suite.check("closed-forms")
def check_closed_forms(seed: int) -> tuple[bool, str]:
    def single(n: int, k: int, delta: float) -> EstimatorResult:
        return EstimatorResult(n=n, deltas=(delta,) * k, witnesses=(np.ones(n),) * k)

    small, wide = single(4, 24, 3.0), single(24, 144, 5.0)
    values = {
        "slack(6,1)": (slack(6, 1), 6.0),
        "slack(4,24)": (slack(4, 24), 1.0),
        "psi_lb quadratic": (lower_bound(small, BoundConfig(k=24), 0.0)[0], 0.5),
        "psi_lb no w_min": (
            lower_bound(single(4, 24, 10.0), BoundConfig(k=24))[0],
            7.0,
        ),
        "psi_ub beta_min": (
            upper_bound(wide, BoundConfig(k=144), 0.0)[0],
            24 * 0.25 * math.log2(3) - 24 * math.log2(0.75),
        ),
        "psi_ub one third": (
            upper_bound(wide, BoundConfig(k=144))[0],
            6 + 24 * math.log2(1.5),
        ),
        "gumbel_slack(4,2,2/e)": (gumbel_slack(4, 2, 2 / math.e), 8.0),
    }
    wrong = [
        f"{name}={got!r} expected {want!r}"
        for name, (got, want) in values.items()
        if not math.isclose(got, want, rel_tol=1e-12, abs_tol=1e-12)
    ]
    return not wrong, "; ".join(wrong) or f"{len(values)} values"


@suite.check("sandwich")
def check_sandwich(seed: int) -> tuple[bool, str]:
    trials = 200
    lower_ok = upper_ok = 0
    for trial in range(trials):
        model = random_tabular(8, _rng(seed, 1, trial))
        log2_z = brute_force_log2_Z(model)
        report = bound(model, BoundConfig(k=1, seed=_seed(seed, 1, trial)))
        lower_ok += report.psi_lb <= log2_z
        upper_ok += log2_z <= report.psi_ub
    passed = min(lower_ok, upper_ok) >= 0.93 * trials
    return passed, f"lower {lower_ok}/{trials}, upper {upper_ok}/{trials}"


@suite.check("concentration")
def check_concentration(seed: int) -> tuple[bool, str]:
    n, k, batches = 8, 25, 200
    radius = math.sqrt(6 * n / k)
    if not math.isclose(slack(n, k), radius, rel_tol=1e-12):
        return False, f"slack({n}, {k})={slack(n, k)!r}, expected {radius!r}"
    model = random_tabular(n, _rng(seed, 2))
    exact = exact_weighted_rademacher(model)
    hits = 0
    for batch in range(batches):
        est = estimate(model, BoundConfig(k=k, seed=_seed(seed, 3, batch)))
        hits += abs(est.delta_bar - exact) <= radius
    return hits >= 0.95 * batches, f"{hits}/{batches} within slack"


@suite.check("massart")
def check_massart(seed: int) -> tuple[bool, str]:
    n = 8
    rng = _rng(seed, 4)
    violations = 0
    for _ in range(50):
        size = int(rng.integers(2, 1 << n, endpoint=True))
        members = all_states(n)[rng.choice(1 << n, size=size, replace=False)]
        model = TabularWeightModel.indicator(n, members)
        if exact_weighted_rademacher(model) > massart_bound(n, size) + 1e-12:
            violations += 1
    return violations == 0, f"{violations} violations in 50 sets"


@suite.check("graph-cut")
def check_graph_cut(seed: int) -> tuple[bool, str]:
    mismatches = 0
    for trial in range(50):
        model = generate(4, 4, 2.0, seed=_seed(seed, 5, trial))
        table = TabularWeightModel.from_model(model)
        c = sample_rademacher(model.n, _rng(seed, 5, trial))
        unaries = to_unary(c)
        if abs(map_oracle(model, unaries).value - table.maximize(unaries).value) > 1e-9:
            mismatches += 1
    return mismatches == 0, f"{mismatches} mismatches in 50 models"


def wcnf_optimum_by_enumeration(text: str) -> int:
    """Least soft cost of a WCNF instance with unit-weight soft clauses"""
    lines = [line.split() for line in text.splitlines() if line and line[0] != "c"]
    _, _, num_vars, _, top = lines[0]
    hard, soft = [], []
    for tokens in lines[1:]:
        weight, literals = int(tokens[0]), [int(t) for t in tokens[1:-1]]
        (hard if weight == int(top) else soft).append(literals)
    n = int(num_vars)
    states = all_states(n)
    hard_ok = CnfFormula.from_clauses(n, hard).satisfied_mask(states)
    costs = np.zeros(states.shape[0], dtype=np.int64)
    for literals in soft:
        costs += ~CnfFormula.from_clauses(n, [literals]).satisfied_mask(states)
    return int(costs[hard_ok].min())


@suite.check("sat-delta")
def check_sat_delta(seed: int) -> tuple[bool, str]:
    n = 12
    rng = _rng(seed, 6)
    states = all_states(n)
    failures = 0
    for _ in range(50):
        formula = random_3cnf(n, 40, rng)
        c = sample_rademacher(n, rng)
        value, witness = delta_sat(formula, c)
        mask = formula.satisfied_mask(states)
        expected = int((states[mask] @ c.entries.astype(np.int64)).max())
        cost = wcnf_optimum_by_enumeration(format_wcnf(formula, c))
        reported = parse_maxsat_result(f"o {cost}\ns OPTIMUM FOUND\n")
        if (
            value != expected
            or n - 2 * reported != value
            or not formula.satisfied_by(witness)
            or c.dot(witness) != value
        ):
            failures += 1
    return failures == 0, f"{failures} failures in 50 formulas"


@suite.check("gumbel-soundness")
def check_gumbel(seed: int) -> tuple[bool, str]:
    k = 2000
    failures = []
    for index in range(5):
        model = random_tabular(10, _rng(seed, 7, index))
        ln_z = brute_force_log2_Z(model) * LN2
        cfg = GumbelConfig(k=k, seed=_seed(seed, 7, index))
        upper = gumbel_upper_trials(model, cfg)
        lower = gumbel_lower_trials(model, cfg)
        if upper.mean() < ln_z - 3 * upper.std(ddof=1) / math.sqrt(k):
            failures.append(f"upper model {index}")
        if lower.mean() > ln_z + 3 * lower.std(ddof=1) / math.sqrt(k):
            failures.append(f"lower model {index}")
    return not failures, ", ".join(failures) or "5 models"


@suite.check("grid-exact")
def check_grid_exact(seed: int) -> tuple[bool, str]:
    worst = 0.0
    for trial, (rows, cols) in enumerate([(2, 2), (3, 3), (2, 3), (3, 2)]):
        model = generate(rows, cols, 1.5, seed=_seed(seed, 9, trial))
        expected = brute_force_log2_Z(TabularWeightModel.from_model(model)) * LN2
        worst = max(worst, abs(grid_exact_ln_Z(model) - expected))
    zero = GridIsingModel(np.zeros((3, 3)))
    worst = max(worst, abs(grid_exact_ln_Z(zero) - 9 * LN2))
    return worst <= 1e-10, f"largest error {worst:.3g}"


@suite.check("scale-equivariance")
def check_scale(seed: int) -> tuple[bool, str]:
    rng = _rng(seed, 8)
    model = random_tabular(6, rng)
    failures = 0
    for factor in (0.5, 2.0, 10.0):
        scaled = model.scaled(factor)
        for _ in range(20):
            c = sample_rademacher(6, rng)
            base, moved = model.delta(c), scaled.delta(c)
            if not math.isclose(
                moved.value, base.value + math.log2(factor), abs_tol=1e-12
            ) or not np.array_equal(base.state, moved.state):
                failures += 1
    return failures == 0, f"{failures} failures"


def run_verify(spec: ExperimentSpec) -> list[CheckResult]:
    return suite.run(spec.seed)
