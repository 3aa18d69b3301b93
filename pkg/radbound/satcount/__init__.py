from radbound.satcount.cnf import (
    CnfFormula,
    brute_force_model_count,
    load_dimacs,
    parse_dimacs,
)
from radbound.satcount.model import SatWeightModel
from radbound.satcount.solver import delta_sat, first_attaining, maximize_satisfying
from radbound.satcount.wcnf import (
    export_wcnf,
    format_wcnf,
    invoke_solver,
    parse_maxsat_assignment,
    parse_maxsat_result,
    run_external_maxsat,
)

__all__ = [
    "CnfFormula",
    "parse_dimacs",
    "load_dimacs",
    "brute_force_model_count",
    "maximize_satisfying",
    "delta_sat",
    "first_attaining",
    "SatWeightModel",
    "format_wcnf",
    "export_wcnf",
    "parse_maxsat_result",
    "parse_maxsat_assignment",
    "invoke_solver",
    "run_external_maxsat",
]
