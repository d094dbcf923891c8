"""Tests for the one-query and two-query identification circuits."""

import numpy as np
import pytest

from src.algorithms.queries import (
    decode_cn,
    one_query_distribution,
    one_query_state,
    one_query_success,
    run_one_query,
    run_split_queries,
    run_two_query,
    two_query_outcomes,
    two_query_state,
    two_query_success,
)
from src.boolfn.models import AffineSpec, PartialFunction, all_affine_specs, truth_table
from src.statevector.register import OracleVariant
from src.statevector.rng import make_rng

PLUS, MINUS = OracleVariant.PLUS, OracleVariant.MINUS


def _complete(C: str, affinity: int = 0) -> tuple[PartialFunction, AffineSpec]:
    spec = AffineSpec.from_string(C, affinity)
    return PartialFunction.from_truth_table(truth_table(spec)), spec


class TestDecodeCn:
    """Tests for recovering c_n from the workspace bit."""

    @pytest.mark.parametrize(
        ("bit", "C", "expected"),
        [(1, "000", 0), (0, "000", 1), (1, "101", 0), (1, "100", 1), (0, "100", 0)],
    )
    def test_decode(self, bit, C, expected):
        assert decode_cn(bit, C) == expected


class TestOneQuery:
    """Tests for the single-query circuit."""

    def test_complete_function_certain(self):
        partial, _ = _complete("101")
        distribution = one_query_distribution(partial, PLUS)
        assert distribution[0b101] == pytest.approx(1.0, abs=1e-10)
        assert run_one_query(partial, PLUS, make_rng(1)) == "101"

    def test_affinity_invisible(self):
        partial, _ = _complete("101", 1)
        assert run_one_query(partial, PLUS, make_rng(1)) == "101"
        assert np.allclose(
            one_query_distribution(partial, PLUS),
            one_query_distribution(_complete("101", 0)[0], PLUS),
            atol=1e-12,
        )

    def test_final_state_sign_carries_affinity(self):
        partial, _ = _complete("110", 1)
        state = one_query_state(partial, PLUS)
        assert state.blocks[0b110, 1].real == pytest.approx(-1.0)

    def test_two_dc1_entries(self, masked_instance):
        # f = x0 xor x1 is 1 at inputs 2 and 3; D = D1 = 1/4
        partial, spec = masked_instance("110", dc=(2, 3))
        assert one_query_success(partial, spec, PLUS) == pytest.approx(0.890165, abs=1e-6)

    def test_distribution_sums_to_one(self, masked_instance):
        partial, _ = masked_instance("1011", dc=(0, 3, 9))
        for variant in OracleVariant:
            assert one_query_distribution(partial, variant).sum() == pytest.approx(1.0)


class TestTwoQuery:
    """Tests for the two-query circuit with mid-circuit readout."""

    def test_complete_function_certain(self):
        partial, spec = _complete("110", 1)
        for variant in OracleVariant:
            assert two_query_success(partial, spec, variant) == pytest.approx(1.0, abs=1e-10)
        assert run_two_query(partial, PLUS, make_rng(2)) == ("110", 1)

    def test_constant_zero(self):
        partial, _ = _complete("00", 0)
        assert run_two_query(partial, MINUS, make_rng(3)) == ("00", 0)

    def test_final_state_before_readout(self):
        partial, _ = _complete("11", 0)
        state = two_query_state(partial, PLUS)
        # workspace reads 1 xor c_n xor p_c = 1 xor 0 xor 0
        assert abs(state.blocks[0b11, 1]) == pytest.approx(1.0)

    def test_outcomes_sum_to_one(self, masked_instance):
        partial, _ = masked_instance("1011", 1, dc=(2, 5, 11, 14))
        for variant in OracleVariant:
            outcomes = two_query_outcomes(partial, variant)
            assert sum(outcomes.values()) == pytest.approx(1.0)

    def test_outcomes_agree_with_success(self, masked_instance):
        partial, spec = masked_instance("101", 1, dc=(1, 6))
        outcomes = two_query_outcomes(partial, PLUS)
        assert outcomes.get((spec.C, spec.affinity), 0.0) == pytest.approx(
            two_query_success(partial, spec, PLUS)
        )

    def test_sampling_matches_exact(self, masked_instance):
        partial, spec = masked_instance("110", dc=(2, 3))
        expected = two_query_success(partial, spec, PLUS)
        rng = make_rng(99)
        shots = 4000
        hits = sum(run_two_query(partial, PLUS, rng) == (spec.C, 0) for _ in range(shots))
        sigma = np.sqrt(expected * (1 - expected) / shots)
        assert abs(hits / shots - expected) <= 3 * sigma

    def test_every_spec_certain_n3(self):
        for spec in all_affine_specs(3):
            partial = PartialFunction.from_truth_table(truth_table(spec))
            assert run_two_query(partial, PLUS, make_rng(0)) == (spec.C, spec.affinity)


class TestSplitQueries:
    """Tests for one quantum query plus a classical query of g(0)."""

    def test_defined_origin(self, masked_instance):
        partial, _ = masked_instance("11", 1, dc=(1,))
        C, c_n = run_split_queries(partial, PLUS, make_rng(4))
        assert c_n == 1
        assert len(C) == 2

    def test_dont_care_origin(self, masked_instance):
        partial, _ = masked_instance("11", 1, dc=(0,))
        assert run_split_queries(partial, PLUS, make_rng(4))[1] is None
