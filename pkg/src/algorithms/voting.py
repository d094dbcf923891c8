"""Oracle selection and the majority vote over repeated runs."""

from collections import Counter
from concurrent.futures import ThreadPoolExecutor

import structlog

from src.algorithms.queries import run_one_query, run_split_queries, run_two_query
from src.algorithms.schemas import (
    Candidate,
    IdentificationResult,
    IdentifyMode,
    Protocol,
    RunConfig,
    VariantPolicy,
    candidate_key,
)
from src.boolfn.models import PartialFunction
from src.config import settings
from src.statevector.register import OracleVariant
from src.statevector.rng import shot_rng

logger = structlog.get_logger()

UNBALANCED_COUNTS = "unbalanced_counts"
DONT_CARE_MAJORITY = "dont_care_majority"


def presumptive_dc_split(partial: PartialFunction) -> tuple[int, int]:
    """(d0, d1) assuming the completion is balanced: N/2 - n0', N/2 - n1'."""
    half = partial.size // 2
    return half - partial.n0_prime, half - partial.n1_prime


def detect_anomalies(partial: PartialFunction) -> tuple[str, ...]:
    anomalies = []
    d0, d1 = presumptive_dc_split(partial)
    if d0 < 0 or d1 < 0:
        anomalies.append(UNBALANCED_COUNTS)
    if 2 * partial.d >= partial.size:
        anomalies.append(DONT_CARE_MAJORITY)
    return tuple(anomalies)


def choose_variant(partial: PartialFunction) -> OracleVariant:
    """PLUS when the presumptive d0 < d1, otherwise MINUS."""
    d0, d1 = presumptive_dc_split(partial)
    if d0 < 0 or d1 < 0:
        logger.warning(
            "unbalanced_presumptive_counts",
            n=partial.n,
            n0_prime=partial.n0_prime,
            n1_prime=partial.n1_prime,
        )
        return OracleVariant.PLUS
    return OracleVariant.PLUS if d0 < d1 else OracleVariant.MINUS


def _schedule(partial: PartialFunction, config: RunConfig) -> tuple[list[OracleVariant], str]:
    shots = 2 * config.trials_per_oracle

    if config.variant_policy == VariantPolicy.BOTH_WITH_VOTE:
        half = config.trials_per_oracle
        return [OracleVariant.PLUS] * half + [OracleVariant.MINUS] * half, "both"

    if config.variant_policy == VariantPolicy.FORCE_PLUS:
        variant = OracleVariant.PLUS
    elif config.variant_policy == VariantPolicy.FORCE_MINUS:
        variant = OracleVariant.MINUS
    else:
        variant = choose_variant(partial)
    return [variant] * shots, variant.value


def _run_shot(
    partial: PartialFunction,
    config: RunConfig,
    variant: OracleVariant,
    shot_index: int,
) -> Candidate:
    rng = shot_rng(config.rng_seed, shot_index)
    if config.mode == IdentifyMode.LINEAR_ONLY:
        return run_one_query(partial, variant, rng), None
    if config.protocol == Protocol.SPLIT:
        return run_split_queries(partial, variant, rng)
    return run_two_query(partial, variant, rng)


def majority_vote(partial: PartialFunction, config: RunConfig) -> IdentificationResult:
    """
    Repeat the identification circuit and return the most voted candidate.

    Each shot draws from its own stream seeded by (rng_seed, shot index), so
    the tally does not depend on thread count or scheduling. Ties go to the
    lowest candidate by integer order of (C, c_n).
    """
    variants, variant_used = _schedule(partial, config)
    anomalies = detect_anomalies(partial)
    if DONT_CARE_MAJORITY in anomalies:
        logger.warning(
            "dont_care_majority",
            n=partial.n,
            d=partial.d,
            detail="d >= N/2: more than one completion may be consistent",
        )

    logger.info(
        "majority_vote_started",
        n=partial.n,
        d=partial.d,
        mode=config.mode.value,
        variant=variant_used,
        shots=len(variants),
        seed=config.rng_seed,
    )

    threads = config.threads or settings.resolved_threads
    if threads <= 1:
        outcomes = [
            _run_shot(partial, config, variant, index) for index, variant in enumerate(variants)
        ]
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            outcomes = list(
                pool.map(
                    lambda job: _run_shot(partial, config, job[1], job[0]),
                    enumerate(variants),
                )
            )

    votes = Counter(outcomes)
    (C, c_n), count = min(votes.items(), key=lambda item: (-item[1], candidate_key(item[0])))

    logger.info(
        "majority_vote_completed",
        winner=C,
        c_n=c_n,
        votes=count,
        shots=len(variants),
        candidates=len(votes),
    )

    return IdentificationResult(
        C=C,
        c_n=c_n,
        vote_table=dict(votes),
        variant_used=variant_used,
        shots=len(variants),
        seed=config.rng_seed,
        mode=config.mode,
        anomalies=anomalies,
    )
