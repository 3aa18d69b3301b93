import logging

from radbound.__version__ import __version__
from radbound.bounds import (
    BetaDiagnostics,
    EstimatorResult,
    GumbelConfig,
    GumbelReport,
    LambdaDiagnostics,
    bound,
    estimate,
    gumbel_bound,
    lower_bound,
    slack,
    upper_bound,
)
from radbound.core.model import WeightModel
from radbound.core.sampling import sample_rademacher, substream, to_unary
from radbound.core.types import (
    BoundConfig,
    BoundReport,
    OracleResult,
    PerturbationVector,
    RealUnaryPerturbation,
)
from radbound.exact import TabularWeightModel, grid_exact_ln_Z
from radbound.satcount import CnfFormula, SatWeightModel, parse_dimacs
from radbound.spinglass import GridIsingModel

logging.getLogger(__name__).addHandler(logging.NullHandler())

__all__ = [
    "__version__",
    # types
    "WeightModel",
    "PerturbationVector",
    "RealUnaryPerturbation",
    "OracleResult",
    "BoundConfig",
    "BoundReport",
    "EstimatorResult",
    "LambdaDiagnostics",
    "BetaDiagnostics",
    "GumbelConfig",
    "GumbelReport",
    # randomness
    "substream",
    "sample_rademacher",
    "to_unary",
    # bounds
    "slack",
    "estimate",
    "lower_bound",
    "upper_bound",
    "bound",
    "gumbel_bound",
    # models
    "TabularWeightModel",
    "GridIsingModel",
    "SatWeightModel",
    "CnfFormula",
    "parse_dimacs",
    "grid_exact_ln_Z",
]
