from radbound.spinglass.io import dumps, load, loads, save
from radbound.spinglass.model import (
    GridIsingModel,
    generate,
    log2_w_max,
    log2_w_min_lower_bound,
    log2_weight,
    map_oracle,
    potential,
    separable_ln_z,
)
from radbound.spinglass.oracle import build_network, grid_edges, minimum_cut_state

__all__ = [
    "GridIsingModel",
    "generate",
    "potential",
    "log2_weight",
    "log2_w_max",
    "log2_w_min_lower_bound",
    "separable_ln_z",
    "map_oracle",
    "build_network",
    "minimum_cut_state",
    "grid_edges",
    "dumps",
    "loads",
    "save",
    "load",
]
