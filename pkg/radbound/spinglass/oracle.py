import logging

import numpy as np

from radbound.core.constants import LN2
from radbound.core.types import RealUnaryPerturbation
from radbound.errors.exceptions import InvalidDimensionError
from radbound.maxflow.network import FlowNetwork, max_flow

logger = logging.getLogger(__name__)


def grid_edges(
    horizontal: np.ndarray, vertical: np.ndarray
) -> list[tuple[int, int, float]]:
    """
    All grid edges as (i, j, theta_ij) with i < j and nodes indexed row-major.

    Ordered by i, with the right neighbor before the lower one.
    """
    rows, cols = horizontal.shape[0], vertical.shape[1]
    result = []
    for r in range(rows):
        for c in range(cols):
            i = r * cols + c
            if c + 1 < cols:
                result.append((i, i + 1, float(horizontal[r, c])))
            if r + 1 < rows:
                result.append((i, i + cols, float(vertical[r, c])))
    return result


def build_network(
    fields: np.ndarray,
    horizontal: np.ndarray,
    vertical: np.ndarray,
    unaries: RealUnaryPerturbation,
) -> FlowNetwork:
    """
    Two-terminal network whose minimum cut minimizes
    E(x) = -(sum_i u_i(x_i) + theta(x) / ln 2).

    A node on the source side means x_i = +1. Unary energies are shifted so
    only one terminal arc per node is needed; a coupling a = theta_ij / ln 2
    costs 2a when the two spins disagree.
    """
    n = fields.size
    if unaries.n != n:
        raise InvalidDimensionError(
            f"Perturbation has dimension {unaries.n}, model has {n}"
        )
    scaled = np.asarray(fields, dtype=np.float64).reshape(-1) / LN2
    e_plus = -(unaries.plus + scaled)
    e_minus = -(unaries.minus - scaled)
    floor = np.minimum(e_plus, e_minus)

    network = FlowNetwork(n)
    for i in range(n):
        network.add_terminal_arcs(
            i,
            source_capacity=float(e_minus[i] - floor[i]),
            sink_capacity=float(e_plus[i] - floor[i]),
        )
    for i, j, theta in grid_edges(horizontal, vertical):
        if theta > 0:
            disagreement = 2.0 * theta / LN2
            network.add_arc(i, j, disagreement, disagreement)
    return network


def minimum_cut_state(
    fields: np.ndarray,
    horizontal: np.ndarray,
    vertical: np.ndarray,
    unaries: RealUnaryPerturbation,
) -> np.ndarray:
    """
    Spin state read off the minimal source side of the minimum cut.

    Among all maximizers it has the fewest +1 spins, which makes it the
    lexicographically smallest one.
    """
    result = max_flow(build_network(fields, horizontal, vertical, unaries))
    return np.where(np.array(result.source_side), 1, -1).astype(np.int8)
