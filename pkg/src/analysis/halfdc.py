"""The d = N/2 case: two linear functions that differ on exactly half the inputs."""

import numpy as np

from src.boolfn.models import (
    AffineSpec,
    PartialFunction,
    check_register,
    coerce_index,
    mask,
    truth_table,
)
from src.config import settings
from src.errors import DomainError
from src.statevector.register import SQRT_HALF, OracleVariant
from src.walsh import parity_of


def _check_pair(c1: int, c2: int) -> None:
    if c1 == c2:
        raise DomainError("C1 and C2 must differ")


def half_dc_instance(
    n: int, C1: int | str, C2: int | str, affinity: int = 0
) -> PartialFunction:
    """
    Partial function whose don't-cares are exactly the inputs where
    C1.x xor c_n and C2.x xor c_n disagree.
    """
    check_register(n, settings.max_register_qubits, "half_dc_instance")
    c1, c2 = coerce_index(C1, n), coerce_index(C2, n)
    _check_pair(c1, c2)

    delta = c1 ^ c2
    disagree = np.flatnonzero(parity_of(np.arange(1 << n, dtype=np.int64) & delta))
    return mask(truth_table(AffineSpec.from_index(n, c1, affinity)), disagree)


def half_dc_amplitudes(
    n: int,
    C1: int | str,
    C2: int | str,
    affinity: int = 0,
    variant: OracleVariant = OracleVariant.PLUS,
) -> np.ndarray:
    """
    Predicted (2^n, 2) workspace blocks after one query on half_dc_instance.

    With delta = C1 xor C2 and s = +1 for PLUS, -1 for MINUS:
      amp0[z] = s (e_0 - e_delta)[z] / (2 sqrt2)
      amp1[z] = (-1)^c_n (e_C1 + e_C2)[z] / 2 - amp0[z]
    Coinciding indices (C1 or C2 equal to 0^n) add up.
    """
    check_register(n, settings.max_register_qubits, "half_dc_case")
    c1, c2 = coerce_index(C1, n), coerce_index(C2, n)
    _check_pair(c1, c2)
    if affinity not in (0, 1):
        raise DomainError(f"affinity must be 0 or 1, got {affinity}")

    sign = 1.0 if variant == OracleVariant.PLUS else -1.0
    dc_term = np.zeros(1 << n)
    dc_term[0] += sign * SQRT_HALF / 2
    dc_term[c1 ^ c2] -= sign * SQRT_HALF / 2

    defined_term = np.zeros(1 << n)
    defined_term[c1] += 0.5
    defined_term[c2] += 0.5
    if affinity:
        defined_term = -defined_term

    return np.stack([dc_term, defined_term - dc_term], axis=1)


def half_dc_case(
    n: int,
    C1: int | str,
    C2: int | str,
    affinity: int = 0,
    variant: OracleVariant = OracleVariant.PLUS,
) -> np.ndarray:
    """Predicted distribution of the measured C for the d = N/2 instance.

    When C1, C2, 0^n and C1 xor C2 are distinct this is 1/4 at each of C1
    and C2 and 1/4 at each of 0^n and C1 xor C2.
    """
    blocks = half_dc_amplitudes(n, C1, C2, affinity, variant)
    return np.sum(blocks**2, axis=1)
