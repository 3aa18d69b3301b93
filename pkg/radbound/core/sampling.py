"""
Randomness contract: one root seed, one independent substream per
(purpose, replicate) key, so runs are reproducible and parallelizable.
"""

import numpy as np

from radbound.core.types import PerturbationVector, RealUnaryPerturbation
from radbound.errors.exceptions import InvalidDimensionError


def substream(seed: int, *key: int) -> np.random.Generator:
    """Generator for the substream keyed by (seed, *key)"""
    sequence = np.random.SeedSequence(int(seed), spawn_key=tuple(int(k) for k in key))
    return np.random.Generator(np.random.PCG64(sequence))


def derive_seed(seed: int, *key: int) -> int:
    """A 64-bit integer seed derived from (seed, *key)"""
    sequence = np.random.SeedSequence(int(seed), spawn_key=tuple(int(k) for k in key))
    return int(sequence.generate_state(1, dtype=np.uint64)[0])


def sample_rademacher(n: int, rng: np.random.Generator) -> PerturbationVector:
    """Draw c uniformly from {-1,1}^n"""
    if n < 1:
        raise InvalidDimensionError(f"Dimension must be >= 1, got {n}")
    bits = rng.integers(0, 2, size=n, dtype=np.int8)
    return PerturbationVector(2 * bits - 1)


def to_unary(c: PerturbationVector) -> RealUnaryPerturbation:
    """Express <c, x> as unary tables: u_i = (-c_i, +c_i)"""
    entries = c.entries.astype(np.float64)
    return RealUnaryPerturbation(np.column_stack((-entries, entries)))
