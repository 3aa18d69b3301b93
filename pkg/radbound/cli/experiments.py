import logging
import math
from collections.abc import Callable, Iterable, Sequence
from concurrent.futures import ThreadPoolExecutor
from typing import Literal, TypeVar

from pydantic import BaseModel, ConfigDict

from radbound.bounds.gumbel import GumbelConfig, gumbel_bound
from radbound.bounds.rademacher import bound
from radbound.cli.spec import ExperimentSpec
from radbound.core.constants import SAT_BRUTE_FORCE_MAX_VARS, StreamTag
from radbound.core.model import WeightModel
from radbound.core.sampling import derive_seed
from radbound.core.types import BoundConfig, BoundReport
from radbound.errors.exceptions import SizeLimitError, UnsatisfiableError
from radbound.exact.grid import grid_exact_ln_Z
from radbound.satcount.cnf import brute_force_model_count, load_dimacs
from radbound.satcount.model import SatWeightModel
from radbound.spinglass.model import generate

logger = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")

RowKind = Literal["trial", "mean", "summary", "unsat"]


class SweepRow(BaseModel):
    """One spin-glass trial (or an aggregate of trials), natural-log units"""

    model_config = ConfigDict(frozen=True)

    kind: RowKind
    coupling: float | None = None
    trial: int | None = None
    n: int
    k: int
    delta_bar: float | None = None
    psi_lb: float | None = None
    psi_ub: float | None = None
    theta_lb: float | None = None
    theta_ub: float | None = None
    ln_z: float | None = None
    sandwiched: bool | None = None
    sandwich_rate: float | None = None
    resamples: int | None = None
    fallback: bool | None = None


class SatRow(BaseModel):
    """One model-counting trial (or an aggregate of trials), natural-log units"""

    model_config = ConfigDict(frozen=True)

    kind: RowKind
    instance: str
    num_vars: int
    num_clauses: int
    trial: int | None = None
    k: int
    ln_z: float | None = None
    delta_bar: float | None = None
    psi_ub: float | None = None
    theta_ub: float | None = None
    psi_lb: float | None = None
    theta_lb: float | None = None
    sandwiched: bool | None = None
    sandwich_rate: float | None = None
    resamples: int | None = None
    fallback: bool | None = None


def fan_out(func: Callable[[T], R], items: Sequence[T], workers: int) -> list[R]:
    """Apply func to every item, results in input order"""
    if workers <= 1:
        return [func(item) for item in items]
    with ThreadPoolExecutor(max_workers=workers) as executor:
        return list(executor.map(func, items))


def _gumbel(
    model: WeightModel, spec: ExperimentSpec, seed: int
) -> tuple[float | None, float | None]:
    """(theta_lb, theta_ub), or Nones when the baseline is switched off"""
    if not spec.gumbel:
        return None, None
    cfg = GumbelConfig(k=spec.k, alpha=spec.alpha, seed=seed)
    report = gumbel_bound(model, cfg)
    return report.theta_lb, report.theta_ub


def _sandwiched(report: BoundReport, ln_z: float | None) -> bool | None:
    if ln_z is None:
        return None
    _, psi_lb, psi_ub = report.log_base_e_view
    return psi_lb <= ln_z <= psi_ub


def _mean(values: Iterable[float | None]) -> float | None:
    present = [value for value in values if value is not None]
    return math.fsum(present) / len(present) if present else None


def _rate(flags: Iterable[bool | None]) -> float | None:
    present = [flag for flag in flags if flag is not None]
    return sum(present) / len(present) if present else None


def run_spinglass_sweep(spec: ExperimentSpec) -> list[SweepRow]:
    """
    Rademacher and Gumbel bounds on random grids, one row per
    (coupling, trial), a mean row per coupling and an overall summary.
    """
    rows, cols = spec.grid_rows, spec.grid_cols
    n = rows * cols
    jobs = [
        (index, coupling, trial)
        for index, coupling in enumerate(spec.couplings)
        for trial in range(spec.trials)
    ]

    def run_trial(job: tuple[int, float, int]) -> SweepRow:
        index, coupling, trial = job
        seed = derive_seed(spec.seed, StreamTag.EXPERIMENT, index, trial)
        model = generate(rows, cols, coupling, seed)
        report = bound(
            model,
            BoundConfig(k=spec.k, seed=seed, resample_limit=spec.resample_limit),
        )
        theta_lb, theta_ub = _gumbel(model, spec, seed)
        try:
            ln_z = grid_exact_ln_Z(model)
        except SizeLimitError:
            ln_z = None
        delta_bar, psi_lb, psi_ub = report.log_base_e_view
        return SweepRow(
            kind="trial",
            coupling=coupling,
            trial=trial,
            n=n,
            k=spec.k,
            delta_bar=delta_bar,
            psi_lb=psi_lb,
            psi_ub=psi_ub,
            theta_lb=theta_lb,
            theta_ub=theta_ub,
            ln_z=ln_z,
            sandwiched=_sandwiched(report, ln_z),
            resamples=report.resamples_used,
            fallback=report.lower_fallback or report.upper_fallback,
        )

    trial_rows = fan_out(run_trial, jobs, spec.workers)

    table: list[SweepRow] = []
    for index, coupling in enumerate(spec.couplings):
        group = trial_rows[index * spec.trials : (index + 1) * spec.trials]
        table.extend(group)
        table.append(_sweep_mean(group, coupling, n, spec.k))
        logger.info("Coupling %g: %d trials done", coupling, len(group))
    table.append(
        SweepRow(
            kind="summary",
            n=n,
            k=spec.k,
            sandwich_rate=_rate(row.sandwiched for row in trial_rows),
            resamples=sum(row.resamples or 0 for row in trial_rows),
            fallback=any(row.fallback for row in trial_rows),
        )
    )
    return table


def _sweep_mean(group: list[SweepRow], coupling: float, n: int, k: int) -> SweepRow:
    return SweepRow(
        kind="mean",
        coupling=coupling,
        n=n,
        k=k,
        delta_bar=_mean(row.delta_bar for row in group),
        psi_lb=_mean(row.psi_lb for row in group),
        psi_ub=_mean(row.psi_ub for row in group),
        theta_lb=_mean(row.theta_lb for row in group),
        theta_ub=_mean(row.theta_ub for row in group),
        ln_z=_mean(row.ln_z for row in group),
        sandwich_rate=_rate(row.sandwiched for row in group),
        resamples=sum(row.resamples or 0 for row in group),
        fallback=any(row.fallback for row in group),
    )


def run_sat_bounds(spec: ExperimentSpec) -> list[SatRow]:
    """Bounds on ln(model count) for each CNF file, trials plus a mean row"""
    table: list[SatRow] = []
    for index, path in enumerate(spec.cnf_paths):
        formula = load_dimacs(path)
        model = SatWeightModel(formula, spec.maxsat_cmd)
        common = {
            "instance": path.stem,
            "num_vars": formula.num_vars,
            "num_clauses": formula.num_clauses,
            "k": spec.k,
        }
        ln_z = None
        if formula.num_vars <= SAT_BRUTE_FORCE_MAX_VARS:
            count = brute_force_model_count(formula)
            if count == 0:
                logger.warning("%s is unsatisfiable; bounds omitted", path.name)
                table.append(SatRow(kind="unsat", **common))
                continue
            ln_z = math.log(count)

        def run_trial(trial: int) -> SatRow:
            seed = derive_seed(spec.seed, StreamTag.EXPERIMENT, index, trial)
            report = bound(
                model,
                BoundConfig(k=spec.k, seed=seed, resample_limit=spec.resample_limit),
            )
            theta_lb, theta_ub = _gumbel(model, spec, seed)
            delta_bar, psi_lb, psi_ub = report.log_base_e_view
            return SatRow(
                kind="trial",
                trial=trial,
                ln_z=ln_z,
                delta_bar=delta_bar,
                psi_ub=psi_ub,
                theta_ub=theta_ub,
                psi_lb=psi_lb,
                theta_lb=theta_lb,
                sandwiched=_sandwiched(report, ln_z),
                resamples=report.resamples_used,
                fallback=report.lower_fallback or report.upper_fallback,
                **common,
            )

        try:
            trial_rows = fan_out(run_trial, list(range(spec.trials)), spec.workers)
        except UnsatisfiableError:
            logger.warning("%s is unsatisfiable; bounds omitted", path.name)
            table.append(SatRow(kind="unsat", **common))
            continue
        table.extend(trial_rows)
        table.append(
            SatRow(
                kind="mean",
                ln_z=ln_z,
                delta_bar=_mean(row.delta_bar for row in trial_rows),
                psi_ub=_mean(row.psi_ub for row in trial_rows),
                theta_ub=_mean(row.theta_ub for row in trial_rows),
                psi_lb=_mean(row.psi_lb for row in trial_rows),
                theta_lb=_mean(row.theta_lb for row in trial_rows),
                sandwich_rate=_rate(row.sandwiched for row in trial_rows),
                resamples=sum(row.resamples or 0 for row in trial_rows),
                fallback=any(row.fallback for row in trial_rows),
                **common,
            )
        )
        logger.info("%s: %d trials done", path.name, spec.trials)
    return table
