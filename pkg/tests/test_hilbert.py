import json
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from freqop.hilbert import (
    EnsembleSpec,
    ScaleError,
    StateVector,
    index_to_string,
    inner_product,
    product_state_vector,
    string_to_index,
)

from conftest import random_state


class TestStateVector:
    def test_norm_invariant_enforced(self):
        with pytest.raises(ValueError, match="not normalized"):
            StateVector([1.0, 1.0])

    def test_renormalize_flag(self):
        s = StateVector([1.0, 1.0], renormalize=True)
        assert s.probability(0) == pytest.approx(0.5, abs=1e-15)

    def test_rejects_nonfinite(self):
        with pytest.raises(ValueError, match="finite"):
            StateVector([np.nan, 0.0])
        with pytest.raises(ValueError, match="finite"):
            StateVector([np.inf, 0.0])

    def test_rejects_empty(self):
        with pytest.raises(ValueError):
            StateVector([])

    def test_amplitudes_immutable(self):
        s = StateVector.uniform(2)
        with pytest.raises(ValueError):
            s.amplitudes[0] = 0.0

    def test_two_level_preset(self):
        s = StateVector.two_level(0.36)
        assert s.amplitude(0) == pytest.approx(0.6)
        assert s.amplitude(1) == pytest.approx(0.8)

    def test_json_round_trip(self):
        s = StateVector([0.6, 0.8j])
        again = StateVector.from_json(json.dumps(s.to_json_dict()))
        assert again == s

    def test_json_length_mismatch(self):
        with pytest.raises(ValueError, match="does not match dim"):
            StateVector.from_json_dict(
                {"dim": 3, "amplitudes": [{"re": 1.0, "im": 0.0}]}
            )


class TestInnerProduct:
    def test_self_inner_product_is_one(self, rng):
        for _ in range(20):
            s = random_state(rng, int(rng.integers(1, 6)))
            assert inner_product(s, s) == pytest.approx(1.0, abs=1e-12)

    def test_orthonormal_basis(self):
        assert inner_product(StateVector.basis(2, 0), StateVector.basis(2, 1)) == 0

    def test_coordinate_read(self):
        psi = StateVector.uniform(2)
        val = inner_product(StateVector.basis(2, 0), psi)
        assert val == pytest.approx(1 / math.sqrt(2), abs=1e-15)

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError, match="mismatch"):
            inner_product(StateVector.uniform(2), StateVector.uniform(3))

    def test_conjugate_symmetry(self, rng):
        for _ in range(50):
            d = int(rng.integers(1, 5))
            a, b = random_state(rng, d), random_state(rng, d)
            assert inner_product(a, b) == pytest.approx(
                np.conj(inner_product(b, a)), abs=1e-14
            )


class TestIndexing:
    @pytest.mark.parametrize(
        "string,d,expected",
        [((0, 1), 2, 1), ((1, 0), 2, 2), ((2, 1), 3, 7)],
    )
    def test_known_encodings(self, string, d, expected):
        assert string_to_index(string, d) == expected

    @pytest.mark.parametrize("d", [2, 3])
    @pytest.mark.parametrize("n", [1, 3, 6])
    def test_round_trip_all_strings(self, d, n):
        for idx in range(d**n):
            s = index_to_string(idx, d, n)
            assert string_to_index(s, d) == idx

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            string_to_index((0, 2), 2)
        with pytest.raises(ValueError):
            index_to_string(8, 2, 3)


class TestProductState:
    def test_basis_state_power(self):
        vec = product_state_vector(EnsembleSpec(StateVector.basis(2, 0), 3, 0))
        expected = np.zeros(8)
        expected[0] = 1.0
        np.testing.assert_allclose(vec, expected)

    def test_uniform_qubit_squared(self):
        vec = product_state_vector(EnsembleSpec(StateVector.uniform(2), 2, 0))
        np.testing.assert_allclose(vec, [0.5, 0.5, 0.5, 0.5], atol=1e-15)

    def test_single_copy(self):
        vec = product_state_vector(EnsembleSpec(StateVector.two_level(0.36), 1, 0))
        np.testing.assert_allclose(vec, [0.6, 0.8], atol=1e-15)

    def test_norm_preserved_random(self, rng):
        for _ in range(100):
            d = int(rng.integers(2, 4))
            n = int(rng.integers(1, 7))
            vec = product_state_vector(EnsembleSpec(random_state(rng, d), n, 0))
            assert np.linalg.norm(vec) == pytest.approx(1.0, abs=1e-10)

    def test_scale_guard(self):
        with pytest.raises(ScaleError):
            product_state_vector(EnsembleSpec(StateVector.uniform(2), 21, 0))


class TestEnsembleSpec:
    def test_validation(self):
        s = StateVector.uniform(2)
        with pytest.raises(ValueError):
            EnsembleSpec(s, 0, 0)
        with pytest.raises(ValueError):
            EnsembleSpec(s, 1, 2)

    def test_born_probability(self):
        assert EnsembleSpec(StateVector.two_level(0.36), 5, 0).born_probability == (
            pytest.approx(0.36)
        )


@given(
    st.lists(
        st.tuples(
            st.floats(-1, 1, allow_nan=False), st.floats(-1, 1, allow_nan=False)
        ),
        min_size=1,
        max_size=8,
    ).filter(lambda xs: sum(re * re + im * im for re, im in xs) > 1e-6)
)
@settings(max_examples=100, deadline=None)
def test_renormalized_states_always_valid(pairs):
    s = StateVector([complex(re, im) for re, im in pairs], renormalize=True)
    assert inner_product(s, s) == pytest.approx(1.0, abs=1e-12)
