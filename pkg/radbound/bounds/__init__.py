from radbound.bounds.gumbel import (
    GumbelConfig,
    GumbelReport,
    gumbel_bound,
    gumbel_lower_estimate,
    gumbel_lower_trials,
    gumbel_slack,
    gumbel_upper_estimate,
    gumbel_upper_trials,
    sample_shifted_gumbel,
    shifted_gumbel_from_uniform,
)
from radbound.bounds.lemmas import (
    massart_bound,
    trivial_bounds,
    weighted_rademacher_lower_lemma,
    weighted_rademacher_upper_lemma,
)
from radbound.bounds.rademacher import (
    bound,
    estimate,
    lower_bound,
    resample,
    slack,
    upper_bound,
)
from radbound.bounds.types import BetaDiagnostics, EstimatorResult, LambdaDiagnostics

__all__ = [
    # Rademacher estimator and bounds
    "slack",
    "estimate",
    "resample",
    "lower_bound",
    "upper_bound",
    "bound",
    "EstimatorResult",
    "LambdaDiagnostics",
    "BetaDiagnostics",
    # Closed forms
    "weighted_rademacher_lower_lemma",
    "weighted_rademacher_upper_lemma",
    "massart_bound",
    "trivial_bounds",
    # Gumbel baseline
    "GumbelConfig",
    "GumbelReport",
    "sample_shifted_gumbel",
    "shifted_gumbel_from_uniform",
    "gumbel_upper_trials",
    "gumbel_lower_trials",
    "gumbel_upper_estimate",
    "gumbel_lower_estimate",
    "gumbel_slack",
    "gumbel_bound",
]
