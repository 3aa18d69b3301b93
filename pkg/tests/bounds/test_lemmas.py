import math

import numpy as np
import pytest

from radbound.bounds import (
    massart_bound,
    trivial_bounds,
    weighted_rademacher_lower_lemma,
    weighted_rademacher_upper_lemma,
)
from radbound.errors import InvalidParameterError
from radbound.exact.tabular import (
    TabularWeightModel,
    all_states,
    brute_force_log2_Z,
    exact_weighted_rademacher,
)


class TestLemmas:

    def test_sandwich_exact_complexity(self, make_tabular):
        """Test lower lemma <= exact R(w) <= upper lemma on small models"""
        for _ in range(5):
            model = make_tabular(5)
            log2_z = brute_force_log2_Z(model)
            exact = exact_weighted_rademacher(model)
            extremes = {
                "log2_w_min": model.log2_w_min,
                "log2_w_max": model.log2_w_max,
            }

            for beta in np.linspace(0.02, 0.48, 24):
                lower = weighted_rademacher_lower_lemma(5, log2_z, beta, **extremes)
                assert lower <= exact + 1e-9
            for lam in np.linspace(0.05, 4.0, 40):
                upper = weighted_rademacher_upper_lemma(5, log2_z, lam, **extremes)
                assert exact <= upper + 1e-9

    def test_lambda_one(self):
        """Test the extreme weight drops out at lambda = 1"""
        assert weighted_rademacher_upper_lemma(6, 4.0, 1.0) == 4.0 + 3.0

    def test_missing_extremes(self):
        """Test each branch asks for its extreme weight"""
        with pytest.raises(InvalidParameterError):
            weighted_rademacher_lower_lemma(4, 2.0, 0.4, log2_w_min=0.0)
        with pytest.raises(InvalidParameterError):
            weighted_rademacher_lower_lemma(4, 2.0, 0.2, log2_w_max=0.0)
        with pytest.raises(InvalidParameterError):
            weighted_rademacher_upper_lemma(4, 2.0, 2.0, log2_w_min=0.0)
        with pytest.raises(InvalidParameterError):
            weighted_rademacher_upper_lemma(4, 2.0, 0.5, log2_w_max=0.0)

    def test_parameter_ranges(self):
        """Test beta and lambda ranges"""
        with pytest.raises(InvalidParameterError):
            weighted_rademacher_lower_lemma(4, 2.0, 0.5, 0.0, 0.0)
        with pytest.raises(InvalidParameterError):
            weighted_rademacher_upper_lemma(4, 2.0, 0.0, 0.0, 0.0)


class TestMassart:

    def test_value(self):
        """Test sqrt(2 n log2 |A|)"""
        assert massart_bound(8, 4) == pytest.approx(math.sqrt(32))

    def test_empty_set(self):
        """Test an empty set"""
        with pytest.raises(InvalidParameterError):
            massart_bound(8, 0)

    def test_indicator_sets(self, rng):
        """Test exact R(A) never exceeds the Massart bound"""
        states = all_states(6)
        for _ in range(20):
            size = int(rng.integers(2, 40))
            rows = rng.choice(len(states), size=size, replace=False)
            model = TabularWeightModel.indicator(6, states[rows])

            assert exact_weighted_rademacher(model) <= massart_bound(6, size) + 1e-12

    def test_upper_lemma_recovers_massart(self):
        """Test the upper lemma at lambda = sqrt(2 log2|A| / n)"""
        n, size = 8, 16
        lam = math.sqrt(2 * math.log2(size) / n)

        value = weighted_rademacher_upper_lemma(
            n, math.log2(size), lam, log2_w_min=0.0, log2_w_max=0.0
        )

        assert value == pytest.approx(massart_bound(n, size))


class TestTrivialBounds:

    def test_values(self):
        """Test w_max <= Z <= 2^n w_max"""
        assert trivial_bounds(5, 1.5) == (1.5, 6.5)

    def test_contain_log_z(self, make_tabular):
        """Test the trivial bounds contain log2 Z"""
        model = make_tabular(6)
        low, high = trivial_bounds(6, model.log2_w_max)

        assert low <= brute_force_log2_Z(model) <= high
