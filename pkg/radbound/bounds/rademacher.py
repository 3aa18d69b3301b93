import logging
import math

from radbound.bounds.types import BetaDiagnostics, EstimatorResult, LambdaDiagnostics
from radbound.core.constants import (
    SLACK_FACTOR,
    BoundSide,
    LambdaRegime,
    StreamTag,
    WStarChoice,
)
from radbound.core.model import WeightModel
from radbound.core.sampling import sample_rademacher, substream
from radbound.core.types import BoundConfig, BoundReport
from radbound.errors.exceptions import (
    InvalidDimensionError,
    InvalidParameterError,
    ResampleRequiredError,
    ZeroWeightError,
)

logger = logging.getLogger(__name__)

ONE_THIRD = 1.0 / 3.0


def slack(n: int, k: int) -> float:
    """sqrt(6n/k): deviation of the k-sample mean from its expectation"""
    if n < 1:
        raise InvalidDimensionError(f"n must be >= 1, got {n}")
    if k < 1:
        raise InvalidParameterError(f"k must be >= 1, got {k}")
    return math.sqrt(SLACK_FACTOR * n / k)


def _draw(model: WeightModel, seed: int, index: int):
    c = sample_rademacher(model.n, substream(seed, StreamTag.RADEMACHER, index))
    result = model.delta(c)
    if result.value == -math.inf:
        raise ZeroWeightError()
    return c, result


def estimate(model: WeightModel, cfg: BoundConfig) -> EstimatorResult:
    """delta_bar_k: mean of delta(c_i, w) over k independent uniform c_i"""
    perturbations, deltas, witnesses = [], [], []
    for i in range(cfg.k):
        c, result = _draw(model, cfg.seed, i)
        perturbations.append(c)
        deltas.append(result.value)
        witnesses.append(result.state)
    est = EstimatorResult(
        n=model.n,
        deltas=tuple(deltas),
        witnesses=tuple(witnesses),
        perturbations=tuple(perturbations),
    )
    logger.debug("estimate: n=%d k=%d delta_bar=%.6f", est.n, est.k, est.delta_bar)
    return est


def resample(
    est: EstimatorResult, model: WeightModel, cfg: BoundConfig, attempt: int
) -> EstimatorResult:
    """
    Replace the sample with the smallest delta (first one on ties) by a
    fresh draw from the substream keyed by k + attempt.
    """
    position = min(range(est.k), key=lambda i: (est.deltas[i], i))
    c, result = _draw(model, cfg.seed, cfg.k + attempt)

    def replaced(values: tuple, value) -> tuple:
        return values[:position] + (value,) + values[position + 1 :]

    perturbations = est.perturbations
    if perturbations:
        perturbations = replaced(perturbations, c)
    return EstimatorResult(
        n=est.n,
        deltas=replaced(est.deltas, result.value),
        witnesses=replaced(est.witnesses, result.state),
        perturbations=perturbations,
    )


def _check_sizes(est: EstimatorResult, cfg: BoundConfig) -> None:
    if est.k != cfg.k:
        raise InvalidParameterError(
            f"Estimate has {est.k} samples but the configuration says k={cfg.k}"
        )


def lower_bound(
    est: EstimatorResult,
    cfg: BoundConfig,
    log2_w_min: float | None = None,
    log2_w_max: float | None = None,
) -> tuple[float, LambdaDiagnostics]:
    """
    High-probability lower bound psi_LB on log2 Z(w).

    With w_min known the bound optimizes lambda = a / n where
    a = delta_bar - slack - log2 w_min: the quadratic form a^2/(2n) + log2 w_min
    for 0 < lambda <= 1, the linear form delta_bar - slack - n/2 otherwise.
    The result is never below log2 w_max when that is given.

    Raises:
        ResampleRequiredError: lambda <= 0, the draw violated its slack bound
    """
    _check_sizes(est, cfg)
    n = est.n
    s = slack(n, est.k)
    linear = est.delta_bar - s - n / 2

    if log2_w_min is None:
        psi, diag = linear, LambdaDiagnostics(regime=LambdaRegime.NO_WMIN)
    else:
        a = est.delta_bar - s - log2_w_min
        lam = a / n
        if lam <= 0:
            raise ResampleRequiredError(
                f"lambda={lam:.6g} is not positive",
                details={"lambda": lam, "a": a},
                side=BoundSide.LOWER,
            )
        if lam <= 1:
            psi = a * a / (2 * n) + log2_w_min
            regime = LambdaRegime.QUADRATIC
        else:
            psi = linear
            regime = LambdaRegime.LINEAR
        diag = LambdaDiagnostics(regime=regime, lam=lam, a_value=a)

    if log2_w_max is not None:
        psi = max(psi, log2_w_max)
    return psi, diag


def _select_beta(
    beta_min: float | None, beta_max: float | None
) -> tuple[float, WStarChoice, str | None]:
    # cases are tried in order; exact boundary values fall through to 1/3
    if beta_min is not None and 0 < beta_min < ONE_THIRD:
        return beta_min, WStarChoice.W_MIN, None
    if beta_max is not None and ONE_THIRD < beta_max < 0.5:
        return beta_max, WStarChoice.W_MAX, None
    if beta_max is not None and beta_max > 0.5:
        return 0.5, WStarChoice.W_MAX, None
    note = None
    if beta_min is None and beta_max is not None and beta_max < ONE_THIRD:
        note = "only w_max known and beta_max < 1/3"
    return ONE_THIRD, WStarChoice.NONE, note


def upper_bound(
    est: EstimatorResult,
    cfg: BoundConfig,
    log2_w_min: float | None = None,
    log2_w_max: float | None = None,
) -> tuple[float, BetaDiagnostics]:
    """
    High-probability upper bound psi_UB on log2 Z(w).

    A positive oracle_gap in the configuration is added to delta_bar first.

    Raises:
        ResampleRequiredError: delta_bar + slack - log2 w* <= 0
    """
    _check_sizes(est, cfg)
    n = est.n
    s = slack(n, est.k)
    shifted = est.delta_bar + cfg.oracle_gap + s

    reference = log2_w_min if log2_w_min is not None else log2_w_max
    if reference is not None and shifted - reference <= 0:
        raise ResampleRequiredError(
            f"delta_bar + slack - log2 w* = {shifted - reference:.6g} is not positive",
            details={"a": shifted - reference},
            side=BoundSide.UPPER,
        )

    beta_min = (shifted - log2_w_min) / n if log2_w_min is not None else None
    beta_max = (shifted - log2_w_max) / n if log2_w_max is not None else None
    beta, choice, note = _select_beta(beta_min, beta_max)

    if choice is WStarChoice.NONE:
        psi = shifted + n * math.log2(1.5)
    elif beta == 0.5:
        psi = n + log2_w_max
    else:
        log2_w_star = log2_w_min if choice is WStarChoice.W_MIN else log2_w_max
        psi = (
            n * beta * math.log2((1 - beta) / beta)
            - n * math.log2(1 - beta)
            + log2_w_star
        )
    diag = BetaDiagnostics(
        beta_opt=beta,
        w_star_choice=choice,
        beta_min=beta_min,
        beta_max=beta_max,
        note=note,
    )
    return psi, diag


def bound(model: WeightModel, cfg: BoundConfig | None = None) -> BoundReport:
    """
    Lower and upper bounds on log2 Z(w), each valid with probability 0.95.

    Degenerate draws (and crossed bounds) are redrawn one sample at a time;
    after cfg.resample_limit redraws the offending side falls back to the
    branch that needs no extreme weights and the report is flagged.
    """
    cfg = cfg or BoundConfig()
    est = estimate(model, cfg)
    log2_w_min, log2_w_max = model.log2_w_min, model.log2_w_max
    lower_fallback = upper_fallback = False
    resamples = 0

    while True:
        lower = upper = None
        try:
            lower = lower_bound(
                est, cfg, None if lower_fallback else log2_w_min, log2_w_max
            )
        except ResampleRequiredError as exc:
            logger.info("Lower bound needs a redraw: %s", exc.message)
        try:
            upper = upper_bound(
                est,
                cfg,
                None if upper_fallback else log2_w_min,
                None if upper_fallback else log2_w_max,
            )
        except ResampleRequiredError as exc:
            logger.info("Upper bound needs a redraw: %s", exc.message)

        crossed = lower is not None and upper is not None and lower[0] > upper[0]
        if lower is not None and upper is not None and not crossed:
            break
        if crossed:
            logger.info("Crossed bounds %.6f > %.6f", lower[0], upper[0])

        if resamples >= cfg.resample_limit:
            if crossed and lower_fallback and upper_fallback:
                logger.warning(
                    "Bounds still crossed after fallback (%.6f > %.6f)",
                    lower[0],
                    upper[0],
                )
                break
            if lower is None or crossed:
                lower_fallback = True
            if upper is None or crossed:
                upper_fallback = True
            logger.warning(
                "Resample limit %d reached; falling back (lower=%s, upper=%s)",
                cfg.resample_limit,
                lower_fallback,
                upper_fallback,
            )
            continue

        est = resample(est, model, cfg, resamples)
        resamples += 1

    psi_lb, lambda_diag = lower
    psi_ub, beta_diag = upper
    return BoundReport(
        n=est.n,
        k=est.k,
        delta_bar=est.delta_bar,
        slack=slack(est.n, est.k),
        psi_lb=psi_lb,
        psi_ub=psi_ub,
        lambda_used=lambda_diag.lam,
        beta_opt=beta_diag.beta_opt,
        lambda_regime=lambda_diag.regime,
        w_star_choice=beta_diag.w_star_choice,
        resamples_used=resamples,
        lower_fallback=lower_fallback,
        upper_fallback=upper_fallback,
    )
