"""Identification procedures for linear and affine Boolean functions."""

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
from src.algorithms.schemas import (
    IdentificationResult,
    IdentifyMode,
    Protocol,
    RunConfig,
    VariantPolicy,
)
from src.algorithms.voting import (
    choose_variant,
    detect_anomalies,
    majority_vote,
    presumptive_dc_split,
)

__all__ = [
    "IdentificationResult",
    "IdentifyMode",
    "Protocol",
    "RunConfig",
    "VariantPolicy",
    "choose_variant",
    "decode_cn",
    "detect_anomalies",
    "majority_vote",
    "one_query_distribution",
    "one_query_state",
    "one_query_success",
    "presumptive_dc_split",
    "run_one_query",
    "run_split_queries",
    "run_two_query",
    "two_query_outcomes",
    "two_query_state",
    "two_query_success",
]
