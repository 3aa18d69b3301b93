from radbound.cli.experiments import (
    SatRow,
    SweepRow,
    run_sat_bounds,
    run_spinglass_sweep,
)
from radbound.cli.main import build_parser, main, run
from radbound.cli.output import TableWriter
from radbound.cli.spec import ExperimentSpec
from radbound.cli.verify import (
    CheckResult,
    VerificationSuite,
    run_verify,
    suite,
)

__all__ = [
    "ExperimentSpec",
    "SweepRow",
    "SatRow",
    "run_spinglass_sweep",
    "run_sat_bounds",
    "run_verify",
    "VerificationSuite",
    "CheckResult",
    "suite",
    "TableWriter",
    "build_parser",
    "run",
    "main",
]
