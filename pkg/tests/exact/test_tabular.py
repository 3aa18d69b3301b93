import itertools
import math

import numpy as np
import pytest

from radbound.core.sampling import sample_rademacher, substream
from radbound.core.types import PerturbationVector, RealUnaryPerturbation
from radbound.errors import (
    InvalidDimensionError,
    InvalidParameterError,
    SizeLimitError,
    ZeroWeightError,
)
from radbound.exact.tabular import (
    TabularWeightModel,
    all_states,
    brute_force_delta,
    brute_force_log2_Z,
    exact_weighted_rademacher,
    index_from_state,
    state_from_index,
)


def point_mass(x0) -> TabularWeightModel:
    return TabularWeightModel.indicator(len(x0), [x0])


class TestIndexing:

    def test_first_variable_is_most_significant(self):
        """Test table order"""
        assert state_from_index(0, 3).tolist() == [-1, -1, -1]
        assert state_from_index(4, 3).tolist() == [1, -1, -1]
        assert state_from_index(7, 3).tolist() == [1, 1, 1]

    def test_index_inverts_state(self):
        """Test index_from_state on every state of n=4"""
        for index, state in enumerate(all_states(4)):
            assert index_from_state(state) == index

    def test_all_states_lexicographic(self):
        """Test all_states matches itertools ordering with -1 first"""
        expected = list(itertools.product((-1, 1), repeat=3))

        assert [tuple(row) for row in all_states(3).tolist()] == expected


class TestTabularWeightModel:

    def test_construction_errors(self):
        """Test table validation"""
        with pytest.raises(InvalidDimensionError):
            TabularWeightModel([1.0, 2.0, 3.0])
        with pytest.raises(InvalidDimensionError):
            TabularWeightModel([1.0])
        with pytest.raises(InvalidParameterError):
            TabularWeightModel([1.0, -2.0])
        with pytest.raises(ZeroWeightError):
            TabularWeightModel([0.0, 0.0, 0.0, 0.0])
        with pytest.raises(InvalidParameterError):
            TabularWeightModel([1.0, 1.0], log2_weights=[0.0, 0.0])

    def test_size_limit(self):
        """Test the enumeration cap"""
        with pytest.raises(SizeLimitError):
            TabularWeightModel.indicator(25, [])

    def test_extremes(self):
        """Test w_min ignores zero weights"""
        model = TabularWeightModel([0.0, 2.0, 8.0, 0.5])

        assert model.log2_w_min == -1.0
        assert model.log2_w_max == 3.0
        assert model.log2_weight([-1, -1]) == -math.inf

    def test_vectorized_weights(self, make_tabular):
        """Test log2_weights agrees with log2_weight"""
        model = make_tabular(5)
        states = all_states(5)

        expected = [model.log2_weight(state) for state in states]
        assert model.log2_weights(states).tolist() == expected

    def test_ties_resolve_to_smallest_state(self):
        """Test an all-tied table returns the all -1 state"""
        model = TabularWeightModel(np.ones(8))

        result = model.maximize(RealUnaryPerturbation.zeros(3))

        assert result.state.tolist() == [-1, -1, -1]
        assert result.value == 0.0


class TestBruteForceLog2Z:

    def test_uniform(self):
        """Test w = 1 on n=5"""
        assert brute_force_log2_Z(TabularWeightModel(np.ones(32))) == pytest.approx(5)

    def test_single_term(self):
        """Test a single weight of 8"""
        weights = np.zeros(4)
        weights[2] = 8.0

        assert brute_force_log2_Z(TabularWeightModel(weights)) == pytest.approx(3)

    def test_sum(self):
        """Test weights 1..8"""
        model = TabularWeightModel(np.arange(1, 9, dtype=float))

        assert brute_force_log2_Z(model) == pytest.approx(math.log2(36), abs=1e-12)

    def test_large_log_weights(self):
        """Test log-space accumulation beyond float range"""
        model = TabularWeightModel.from_log2_weights([5000.0, 5000.0])

        assert brute_force_log2_Z(model) == pytest.approx(5001.0)


class TestBruteForceDelta:

    def test_uniform_aligns_with_c(self):
        """Test w = 1 gives value n and argmax c"""
        c = PerturbationVector([1, -1, -1, 1])
        value, state = brute_force_delta(TabularWeightModel(np.ones(16)), c)

        assert value == 4
        assert state.tolist() == c.entries.tolist()

    def test_point_mass(self):
        """Test a single feasible state"""
        x0 = [1, -1, 1]
        c = PerturbationVector([1, 1, 1])

        value, state = brute_force_delta(point_mass(x0), c)

        assert value == c.dot(x0)
        assert state.tolist() == x0

    def test_against_second_enumeration(self, make_tabular):
        """Test against an independent loop"""
        model = make_tabular(4)
        for seed in range(10):
            c = sample_rademacher(4, substream(seed))
            best = max(
                c.dot(x) + model.log2_weight(x)
                for x in itertools.product((-1, 1), repeat=4)
            )

            assert brute_force_delta(model, c)[0] == pytest.approx(best, abs=1e-12)


class TestWeightModelProperties:

    def test_scale_equivariance(self, make_tabular):
        """Test delta(c, a w) = log2 a + delta(c, w) with the same argmax"""
        model = make_tabular(6)
        for factor in (0.5, 2.0, 10.0):
            scaled = model.scaled(factor)
            for seed in range(10):
                c = sample_rademacher(6, substream(seed))
                base, moved = model.delta(c), scaled.delta(c)

                assert moved.value == pytest.approx(
                    base.value + math.log2(factor), abs=1e-12
                )
                assert moved.state.tolist() == base.state.tolist()

    def test_pointwise_monotone(self, make_tabular, rng):
        """Test raising weights never lowers delta"""
        model = make_tabular(5)
        larger = TabularWeightModel.from_log2_weights(
            model.log2_table + rng.uniform(0.0, 1.0, size=32)
        )
        for seed in range(10):
            c = sample_rademacher(5, substream(seed))

            assert larger.delta(c).value >= model.delta(c).value

    def test_delta_within_extremes(self, make_tabular):
        """Test n + log2 w_min <= delta <= n + log2 w_max on full support"""
        model = make_tabular(6)
        for seed in range(20):
            value = model.delta(sample_rademacher(6, substream(seed))).value

            assert 6 + model.log2_w_min <= value <= 6 + model.log2_w_max

    def test_from_model(self, make_tabular):
        """Test enumerating a model into a table"""
        model = make_tabular(3)

        copy = TabularWeightModel.from_model(model)

        assert np.array_equal(copy.log2_table, model.log2_table)


class TestExactWeightedRademacher:

    def test_uniform(self):
        """Test w = 1 on n=6"""
        model = TabularWeightModel(np.ones(64))

        assert exact_weighted_rademacher(model) == pytest.approx(6)

    def test_point_mass(self):
        """Test a single state averages to zero"""
        model = point_mass([1, -1, 1, 1, -1])

        assert exact_weighted_rademacher(model) == pytest.approx(0, abs=1e-12)

    def test_scaled(self, make_tabular):
        """Test the additive shift under scaling"""
        model = make_tabular(5)

        assert exact_weighted_rademacher(model.scaled(4.0)) == pytest.approx(
            exact_weighted_rademacher(model) + 2.0
        )

    def test_matches_brute_force_average(self, make_tabular):
        """Test against averaging brute_force_delta over every c"""
        model = make_tabular(4)
        values = [
            brute_force_delta(model, PerturbationVector(c))[0]
            for c in itertools.product((-1, 1), repeat=4)
        ]

        assert exact_weighted_rademacher(model) == pytest.approx(np.mean(values))

    def test_size_limit(self):
        """Test the exhaustive cap"""
        with pytest.raises(SizeLimitError):
            exact_weighted_rademacher(TabularWeightModel(np.ones(1 << 13)))
