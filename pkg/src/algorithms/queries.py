"""One-query and two-query identification circuits."""

import numpy as np
import structlog

from src.boolfn.models import AffineSpec, Entry, PartialFunction, bitstring, parity
from src.statevector.register import SQRT_HALF, OracleVariant, StateVector, new_register
from src.walsh import parity_of

logger = structlog.get_logger()


# === Circuits ===


def one_query_state(partial: PartialFunction, variant: OracleVariant) -> StateVector:
    """H^(n+1), oracle, H^(n+1) on |0^n>|1>; the state before measurement."""
    return new_register(partial.n).hadamard_all().apply_oracle(partial, variant).hadamard_all()


def two_query_state(partial: PartialFunction, variant: OracleVariant) -> StateVector:
    """One-query state followed by the second oracle call."""
    return one_query_state(partial, variant).apply_oracle(partial, variant)


def run_one_query(
    partial: PartialFunction,
    variant: OracleVariant,
    rng: np.random.Generator,
) -> str:
    """Measure the input register after one query; C with certainty when d = 0."""
    outcome, _ = one_query_state(partial, variant).measure_first_n(rng)
    return outcome


def decode_cn(workspace_bit: int, C: str) -> int:
    """The workspace reads 1 xor c_n xor p_c; solve for c_n."""
    return 1 ^ int(workspace_bit) ^ parity(C)


def run_two_query(
    partial: PartialFunction,
    variant: OracleVariant,
    rng: np.random.Generator,
) -> tuple[str, int]:
    """
    Two queries, then a mid-circuit readout.

    The input register is measured first. When the observed C is a
    don't-care input the workspace gets one more Hadamard (the DC set is
    classical knowledge) before it is measured and c_n decoded.
    """
    state = two_query_state(partial, variant)
    C, state = state.measure_first_n(rng)

    if partial.is_dont_care(int(C, 2)):
        state.hadamard_workspace()

    workspace_bit, _ = state.measure_workspace(rng)
    return C, decode_cn(workspace_bit, C)


def run_split_queries(
    partial: PartialFunction,
    variant: OracleVariant,
    rng: np.random.Generator,
) -> tuple[str, int | None]:
    """
    One quantum query for C plus a classical evaluation of g(0^n) for c_n.

    c_n is None when 0^n is a don't-care, since the classical query then
    returns nothing.
    """
    C = run_one_query(partial, variant, rng)
    first = partial.entry(0)
    return C, None if first == Entry.DONT_CARE else int(first)


# === Exact outcome probabilities ===


def one_query_distribution(partial: PartialFunction, variant: OracleVariant) -> np.ndarray:
    """Exact probability of each C returned by run_one_query."""
    return one_query_state(partial, variant).exact_distribution(first_n_only=True)


def _readout_probabilities(partial: PartialFunction, variant: OracleVariant) -> np.ndarray:
    """(2^n, 2) joint probabilities of (C, workspace bit) as run_two_query reads them."""
    blocks = two_query_state(partial, variant).blocks.copy()
    dc = partial.dc_mask
    if np.any(dc):
        first, second = blocks[dc, 0].copy(), blocks[dc, 1].copy()
        blocks[dc, 0] = (first + second) * SQRT_HALF
        blocks[dc, 1] = (first - second) * SQRT_HALF
    return np.abs(blocks) ** 2


def two_query_outcomes(
    partial: PartialFunction, variant: OracleVariant
) -> dict[tuple[str, int], float]:
    """Exact probability of every (C, c_n) pair run_two_query can return."""
    probabilities = _readout_probabilities(partial, variant)
    parities = parity_of(np.arange(partial.size))
    outcomes: dict[tuple[str, int], float] = {}

    for index, bit in zip(*np.nonzero(probabilities), strict=True):
        C = bitstring(int(index), partial.n)
        c_n = 1 ^ int(bit) ^ int(parities[index])
        outcomes[(C, c_n)] = outcomes.get((C, c_n), 0.0) + float(probabilities[index, bit])
    return outcomes


def one_query_success(
    partial: PartialFunction, spec: AffineSpec, variant: OracleVariant
) -> float:
    """Exact P(run_one_query returns spec.C)."""
    return float(one_query_distribution(partial, variant)[spec.coeff_index])


def two_query_success(
    partial: PartialFunction, spec: AffineSpec, variant: OracleVariant
) -> float:
    """Exact P(run_two_query returns (spec.C, spec.affinity))."""
    probabilities = _readout_probabilities(partial, variant)[spec.coeff_index]
    bit = 1 ^ spec.affinity ^ parity(spec.C)
    return float(probabilities[bit])
