from radbound.exact.grid import grid_exact_ln_Z, grid_exact_log2_Z
from radbound.exact.tabular import (
    TabularWeightModel,
    all_states,
    brute_force_delta,
    brute_force_log2_Z,
    exact_weighted_rademacher,
    index_from_state,
    state_from_index,
)

__all__ = [
    "TabularWeightModel",
    "all_states",
    "state_from_index",
    "index_from_state",
    "brute_force_log2_Z",
    "brute_force_delta",
    "exact_weighted_rademacher",
    "grid_exact_ln_Z",
    "grid_exact_log2_Z",
]
