import logging

import numpy as np
from scipy.special import logsumexp

from radbound.core.constants import GRID_MAX_WIDTH, LN2
from radbound.errors.exceptions import SizeLimitError
from radbound.spinglass.model import GridIsingModel

logger = logging.getLogger(__name__)

_SPINS = np.array([-1.0, 1.0])


def _oriented(model: GridIsingModel) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """(fields, horizontal, vertical) with the narrow side as the row length"""
    if model.cols <= model.rows:
        return model.fields, model.horizontal, model.vertical
    return model.fields.T, model.vertical.T, model.horizontal.T


def grid_exact_ln_Z(model: GridIsingModel) -> float:
    """
    Exact ln Z by a site-by-site transfer sweep.

    The message is a log-space table over the spins of the current frontier
    (one spin per column, shape (2,) * width). Visiting site (r, c) sums out
    the spin above it and adds the site's field and its left coupling.
    """
    fields, horizontal, vertical = _oriented(model)
    rows, width = fields.shape
    if width > GRID_MAX_WIDTH:
        raise SizeLimitError(
            f"Frontier width {width} exceeds the limit of {GRID_MAX_WIDTH}"
        )

    # Point mass on the all-(-1) frontier; the first row has no spin above.
    message = np.full((2,) * width, -np.inf)
    message[(0,) * width] = 0.0
    rest = (1,) * (width - 1)

    with np.errstate(divide="ignore"):
        for r in range(rows):
            for c in range(width):
                above = vertical[r - 1, c] if r > 0 else 0.0
                pair = (np.outer(_SPINS, _SPINS) * above).reshape((2, 2) + rest)
                local = np.moveaxis(message, c, 0)
                updated = logsumexp(local[:, None] + pair, axis=0)
                updated = updated + (fields[r, c] * _SPINS).reshape((2,) + rest)
                message = np.moveaxis(updated, 0, c)
                if c > 0:
                    shape = [1] * width
                    shape[c - 1] = shape[c] = 2
                    left = np.outer(_SPINS, _SPINS) * horizontal[r, c - 1]
                    message = message + left.reshape(shape)

    ln_z = float(logsumexp(message))
    logger.debug("grid_exact_ln_Z: %dx%d ln Z=%.12g", rows, width, ln_z)
    return ln_z


def grid_exact_log2_Z(model: GridIsingModel) -> float:
    return grid_exact_ln_Z(model) / LN2
