import numpy as np
import pytest

from radbound.exact.tabular import TabularWeightModel


@pytest.fixture
def rng():
    return np.random.default_rng(20240917)


@pytest.fixture
def make_tabular(rng):
    """Factory for strictly positive random tabular models"""

    def factory(n: int, low: float = -3.0, high: float = 3.0) -> TabularWeightModel:
        return TabularWeightModel.from_log2_weights(rng.uniform(low, high, size=1 << n))

    return factory
