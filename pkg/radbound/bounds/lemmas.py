"""
Closed-form bounds on the weighted Rademacher complexity in terms of
log2 Z(w). The estimator bounds invert these; they are also handy as test
oracles on enumerable models.
"""

import math

from radbound.errors.exceptions import InvalidParameterError


def _require(value: float | None, name: str) -> float:
    if value is None:
        raise InvalidParameterError(f"{name} is required for this parameter range")
    return value


def weighted_rademacher_lower_lemma(
    n: int,
    log2_z: float,
    beta: float,
    log2_w_min: float | None = None,
    log2_w_max: float | None = None,
) -> float:
    """
    Lower bound on R(w) for beta in (0, 1/2).

    w* is w_max for beta >= 1/3 and w_min for beta <= 1/3; at exactly 1/3
    either is valid and w_max is used when given.
    """
    if not 0 < beta < 0.5:
        raise InvalidParameterError(f"beta must lie in (0, 1/2), got {beta}")
    if beta > 1 / 3 or (beta == 1 / 3 and log2_w_max is not None):
        log2_w_star = _require(log2_w_max, "log2_w_max")
    else:
        log2_w_star = _require(log2_w_min, "log2_w_min")
    return log2_w_star + (n * math.log2(1 - beta) + log2_z - log2_w_star) / (
        math.log2((1 - beta) / beta)
    )


def weighted_rademacher_upper_lemma(
    n: int,
    log2_z: float,
    lam: float,
    log2_w_min: float | None = None,
    log2_w_max: float | None = None,
) -> float:
    """Upper bound on R(w) for lam > 0 with w* = w_max if lam >= 1 else w_min"""
    if not lam > 0:
        raise InvalidParameterError(f"lambda must be positive, got {lam}")
    if lam == 1:
        extreme = 0.0
    elif lam > 1:
        extreme = (lam - 1) / lam * _require(log2_w_max, "log2_w_max")
    else:
        extreme = (lam - 1) / lam * _require(log2_w_min, "log2_w_min")
    return log2_z / lam + extreme + lam * n / 2


def massart_bound(n: int, set_size: int) -> float:
    """sqrt(2 n log2 |A|) for the Rademacher complexity of a set A"""
    if set_size < 1:
        raise InvalidParameterError("Set must be non-empty")
    return math.sqrt(2 * n * math.log2(set_size))


def trivial_bounds(n: int, log2_w_max: float) -> tuple[float, float]:
    """w_max <= Z(w) <= 2^n w_max, in log2 units"""
    return log2_w_max, n + log2_w_max
