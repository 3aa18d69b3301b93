import math
from enum import Enum, IntEnum

# Confidence of each bound side; the slack factor 6 is tied to this value
CONFIDENCE = 0.95
SLACK_FACTOR = 6
DEFAULT_RESAMPLE_LIMIT = 10

LN2 = math.log(2.0)
EULER_GAMMA = 0.57721566490153286061

# Dimension caps for exact (enumerating) computations
TABULAR_MAX_N = 24
EXACT_RADEMACHER_MAX_N = 12
GRID_MAX_WIDTH = 20
SAT_BRUTE_FORCE_MAX_VARS = 24

# Numerical tolerances
CAPACITY_EPSILON = 1e-12
CERTIFICATE_TOLERANCE = 1e-9
TIE_TOLERANCE = 1e-9

# Gumbel baseline defaults
DEFAULT_ALPHA = 0.05

# Experiment defaults
DEFAULT_TRIALS = 20
DEFAULT_GRID = (7, 7)
DEFAULT_COUPLINGS = tuple(0.5 * i for i in range(11))
MAXSAT_CMD_ENV = "RADBOUND_MAXSAT_CMD"


class LambdaRegime(Enum):
    """Branch taken by the lower bound"""

    QUADRATIC = "quadratic"
    LINEAR = "linear"
    NO_WMIN = "no-wmin"


class WStarChoice(Enum):
    """Which extreme weight enters the upper bound"""

    W_MIN = "w_min"
    W_MAX = "w_max"
    NONE = "none"


class BoundSide(Enum):
    LOWER = "lower"
    UPPER = "upper"
    BOTH = "both"


class ExperimentMode(Enum):
    SPINGLASS_SWEEP = "spinglass-sweep"
    SAT_BOUNDS = "sat-bounds"
    VERIFY = "verify"


class OutputFormat(Enum):
    CSV = "csv"
    JSON = "json"


class StreamTag(IntEnum):
    """Keys separating independent random substreams derived from one seed"""

    RADEMACHER = 1
    GUMBEL_UPPER = 2
    GUMBEL_LOWER = 3
    SPINGLASS = 4
    EXPERIMENT = 5
