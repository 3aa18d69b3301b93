import logging
import math

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

from radbound.core.constants import DEFAULT_ALPHA, EULER_GAMMA, LN2, StreamTag
from radbound.core.model import WeightModel
from radbound.core.sampling import substream
from radbound.core.types import RealUnaryPerturbation
from radbound.errors.exceptions import InvalidDimensionError, InvalidParameterError

logger = logging.getLogger(__name__)

_TINY = np.nextafter(0.0, 1.0)


class GumbelConfig(BaseModel):
    """Inputs of the Gumbel perturb-and-MAP baseline"""

    model_config = ConfigDict(frozen=True)

    k: int = Field(default=1, ge=1)
    alpha: float = Field(default=DEFAULT_ALPHA, gt=0.0, lt=1.0)
    seed: int = Field(default=0, ge=0, lt=2**64)


class GumbelReport(BaseModel):
    """Expectation estimates and high-probability bounds on ln Z(w)"""

    model_config = ConfigDict(frozen=True)

    n: int = Field(ge=1)
    k: int = Field(ge=1)
    alpha: float
    theta_ub_hat: float
    theta_lb_hat: float
    epsilon_g: float = Field(ge=0.0)
    theta_ub: float
    theta_lb: float

    @model_validator(mode="after")
    def _check_slack_signs(self) -> "GumbelReport":
        if self.theta_ub < self.theta_ub_hat or self.theta_lb > self.theta_lb_hat:
            raise ValueError("slack must widen both estimates")
        return self


def shifted_gumbel_from_uniform(u):
    """-ln(-ln u) - Euler's gamma for u in (0, 1); mean 0, scale 1"""
    u = np.asarray(u, dtype=np.float64)
    if np.any((u <= 0) | (u >= 1)):
        raise InvalidParameterError("Uniform input must lie in (0, 1)")
    values = -np.log(-np.log(u)) - EULER_GAMMA
    return float(values) if values.ndim == 0 else values


def sample_shifted_gumbel(rng: np.random.Generator, size=None):
    """Mean-zero Gumbel draws by inverting the CDF of a uniform on (0, 1)"""
    return shifted_gumbel_from_uniform(rng.uniform(_TINY, 1.0, size=size))


def _trials(model: WeightModel, cfg: GumbelConfig, tag: StreamTag) -> np.ndarray:
    n = model.n
    divisor = LN2 if tag is StreamTag.GUMBEL_UPPER else n * LN2
    values = np.empty(cfg.k)
    for t in range(cfg.k):
        noise = sample_shifted_gumbel(substream(cfg.seed, tag, t), size=(n, 2))
        result = model.maximize(RealUnaryPerturbation(noise / divisor))
        values[t] = result.value * LN2
    return values


def gumbel_upper_trials(model: WeightModel, cfg: GumbelConfig) -> np.ndarray:
    """Per-trial max_x { ln w(x) + sum_i g_i(x_i) } in natural-log units"""
    return _trials(model, cfg, StreamTag.GUMBEL_UPPER)


def gumbel_lower_trials(model: WeightModel, cfg: GumbelConfig) -> np.ndarray:
    """Per-trial max_x { ln w(x) + sum_i g_i(x_i) / n } in natural-log units"""
    return _trials(model, cfg, StreamTag.GUMBEL_LOWER)


def gumbel_upper_estimate(model: WeightModel, cfg: GumbelConfig) -> float:
    return float(gumbel_upper_trials(model, cfg).mean())


def gumbel_lower_estimate(model: WeightModel, cfg: GumbelConfig) -> float:
    return float(gumbel_lower_trials(model, cfg).mean())


def gumbel_slack(n: int, k: int, alpha: float) -> float:
    """High-probability slack of the k-sample Gumbel estimates"""
    if n < 1:
        raise InvalidDimensionError(f"n must be >= 1, got {n}")
    if k < 1:
        raise InvalidParameterError(f"k must be >= 1, got {k}")
    if not 0 < alpha < 1:
        raise InvalidParameterError(f"alpha must lie in (0, 1), got {alpha}")
    log_term = math.log(2 / alpha)
    root_n = math.sqrt(n)
    first = 2 * root_n * (1 + math.sqrt(log_term / (2 * k))) ** 2
    second = root_n * max(4 / k * log_term, math.sqrt(32 / k * log_term))
    return min(first, second)


def gumbel_bound(model: WeightModel, cfg: GumbelConfig | None = None) -> GumbelReport:
    cfg = cfg or GumbelConfig()
    n = model.n
    upper = gumbel_upper_estimate(model, cfg)
    lower = gumbel_lower_estimate(model, cfg)
    epsilon = gumbel_slack(n, cfg.k, cfg.alpha)
    logger.debug(
        "gumbel_bound: n=%d k=%d upper=%.6f lower=%.6f eps=%.6f",
        n,
        cfg.k,
        upper,
        lower,
        epsilon,
    )
    return GumbelReport(
        n=n,
        k=cfg.k,
        alpha=cfg.alpha,
        theta_ub_hat=upper,
        theta_lb_hat=lower,
        epsilon_g=epsilon,
        theta_ub=upper + epsilon,
        theta_lb=lower - epsilon / n,
    )
