import argparse
import logging
import os
import sys
from collections.abc import Sequence
from pathlib import Path

from pydantic import BaseModel, ConfigDict
from pydantic import ValidationError as PydanticValidationError

from radbound.__version__ import __version__
from radbound.cli.experiments import run_sat_bounds, run_spinglass_sweep
from radbound.cli.output import TableWriter
from radbound.cli.spec import ExperimentSpec
from radbound.cli.verify import run_verify
from radbound.core.constants import MAXSAT_CMD_ENV, ExperimentMode, OutputFormat
from radbound.errors.exceptions import (
    EXIT_OK,
    EXIT_VERIFICATION,
    RadboundError,
    UsageError,
)

logger = logging.getLogger("radbound")

ERROR_MAPPER = {
    PydanticValidationError: UsageError,
}


class VerifyRow(BaseModel):
    model_config = ConfigDict(frozen=True)

    check: str
    passed: bool
    detail: str


class _ArgumentParser(argparse.ArgumentParser):
    """Reports usage problems as UsageError instead of exiting"""

    def error(self, message: str):
        raise UsageError(message)


def _grid(text: str) -> tuple[int, int]:
    try:
        rows, cols = (int(part) for part in text.lower().split("x"))
    except ValueError:
        raise argparse.ArgumentTypeError(f"grid must look like 7x7, got {text!r}")
    return rows, cols


def _couplings(text: str) -> tuple[float, ...]:
    try:
        return tuple(float(part) for part in text.split(",") if part.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid coupling list {text!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(
        prog="radbound",
        description="Bound partition functions with weighted Rademacher complexity.",
    )
    parser.add_argument(
        "--mode",
        required=True,
        choices=[mode.value for mode in ExperimentMode],
    )
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--k", type=int, default=None, help="oracle samples per bound")
    parser.add_argument("--trials", type=int, default=None)
    parser.add_argument("--grid", type=_grid, default=None, metavar="NxN")
    parser.add_argument(
        "--couplings", type=_couplings, default=None, metavar="v1,v2,..."
    )
    parser.add_argument("--cnf", nargs="+", type=Path, default=(), metavar="PATH")
    parser.add_argument("--out", type=Path, default=None)
    parser.add_argument(
        "--format",
        choices=[fmt.value for fmt in OutputFormat],
        default=OutputFormat.CSV.value,
    )
    parser.add_argument(
        "--maxsat-cmd",
        default=None,
        help=f"solver command with {{path}}; defaults to ${MAXSAT_CMD_ENV}",
    )
    parser.add_argument("--workers", type=int, default=1)
    parser.add_argument("--alpha", type=float, default=None)
    parser.add_argument(
        "--no-gumbel",
        dest="gumbel",
        action="store_false",
        help="skip the Gumbel baseline columns",
    )
    parser.add_argument("-v", "--verbose", action="count", default=0)
    parser.add_argument("--version", action="version", version=__version__)
    return parser


def spec_from_args(args: argparse.Namespace) -> ExperimentSpec:
    values = {
        "mode": args.mode,
        "seed": args.seed,
        "k": args.k,
        "trials": args.trials,
        "couplings": args.couplings,
        "cnf_paths": tuple(args.cnf),
        "out": args.out,
        "format": args.format,
        "maxsat_cmd": args.maxsat_cmd or os.environ.get(MAXSAT_CMD_ENV) or None,
        "workers": args.workers,
        "alpha": args.alpha,
        "gumbel": args.gumbel,
    }
    if args.grid is not None:
        values["grid_rows"], values["grid_cols"] = args.grid
    try:
        return ExperimentSpec(
            **{key: value for key, value in values.items() if value is not None}
        )
    except PydanticValidationError as exc:
        raise RadboundError.from_exception(exc, ERROR_MAPPER)


def configure_logging(verbosity: int) -> None:
    level = logging.WARNING
    if verbosity == 1:
        level = logging.INFO
    elif verbosity >= 2:
        level = logging.DEBUG
    logging.basicConfig(
        level=level,
        stream=sys.stderr,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )


def run(spec: ExperimentSpec) -> tuple[str, int]:
    """Execute a spec; returns the rendered table and the exit code"""
    exit_code = EXIT_OK
    if spec.mode is ExperimentMode.SPINGLASS_SWEEP:
        rows: Sequence[BaseModel] = run_spinglass_sweep(spec)
    elif spec.mode is ExperimentMode.SAT_BOUNDS:
        rows = run_sat_bounds(spec)
    else:
        results = run_verify(spec)
        rows = [
            VerifyRow(check=result.name, passed=result.passed, detail=result.detail)
            for result in results
        ]
        failed = [result.name for result in results if not result.passed]
        if failed:
            logger.error("Verification failed: %s", ", ".join(failed))
            exit_code = EXIT_VERIFICATION
    return TableWriter.write(rows, spec.format, spec.out), exit_code


def main(argv: Sequence[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        configure_logging(args.verbose)
        spec = spec_from_args(args)
        text, exit_code = run(spec)
    except RadboundError as exc:
        sys.stderr.write(f"radbound: {exc.message}\n")
        return exc.exit_code
    except OSError as exc:
        sys.stderr.write(f"radbound: {exc}\n")
        return UsageError.exit_code
    if spec.out is None:
        sys.stdout.write(text)
    return exit_code
