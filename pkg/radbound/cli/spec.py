import math
from pathlib import Path
from typing import Any

from pydantic import BaseModel, ConfigDict, Field, model_validator

from radbound.core.constants import (
    DEFAULT_ALPHA,
    DEFAULT_COUPLINGS,
    DEFAULT_GRID,
    DEFAULT_RESAMPLE_LIMIT,
    DEFAULT_TRIALS,
    ExperimentMode,
    OutputFormat,
)
from radbound.satcount.wcnf import PATH_PLACEHOLDER

# Samples per bound when --k is not given
DEFAULT_K = {
    ExperimentMode.SPINGLASS_SWEEP: 5,
    ExperimentMode.SAT_BOUNDS: 1,
    ExperimentMode.VERIFY: 1,
}


class ExperimentSpec(BaseModel):
    """One batch run of the command line tool"""

    model_config = ConfigDict(frozen=True)

    mode: ExperimentMode
    seed: int = Field(default=0, ge=0, lt=2**64)
    k: int = Field(default=1, ge=1)
    trials: int = Field(default=DEFAULT_TRIALS, ge=1)
    grid_rows: int = Field(default=DEFAULT_GRID[0], ge=1)
    grid_cols: int = Field(default=DEFAULT_GRID[1], ge=1)
    couplings: tuple[float, ...] = DEFAULT_COUPLINGS
    cnf_paths: tuple[Path, ...] = ()
    out: Path | None = None
    format: OutputFormat = OutputFormat.CSV
    maxsat_cmd: str | None = None
    workers: int = Field(default=1, ge=1)
    alpha: float = Field(default=DEFAULT_ALPHA, gt=0.0, lt=1.0)
    resample_limit: int = Field(default=DEFAULT_RESAMPLE_LIMIT, ge=0)
    gumbel: bool = True

    @model_validator(mode="before")
    @classmethod
    def _default_k(cls, data: Any) -> Any:
        if isinstance(data, dict) and data.get("k") is None:
            data = dict(data)
            data.pop("k", None)
            try:
                data["k"] = DEFAULT_K[ExperimentMode(data.get("mode"))]
            except ValueError:
                pass
        return data

    @model_validator(mode="after")
    def _check_mode_fields(self) -> "ExperimentSpec":
        if self.mode is ExperimentMode.SAT_BOUNDS and not self.cnf_paths:
            raise ValueError("sat-bounds needs at least one CNF file")
        if self.mode is ExperimentMode.SPINGLASS_SWEEP:
            if not self.couplings:
                raise ValueError("spinglass-sweep needs at least one coupling value")
            if any(not math.isfinite(c) or c < 0 for c in self.couplings):
                raise ValueError("Coupling values must be finite and >= 0")
        if self.maxsat_cmd is not None and PATH_PLACEHOLDER not in self.maxsat_cmd:
            raise ValueError(f"MaxSAT command must contain {PATH_PLACEHOLDER}")
        return self
