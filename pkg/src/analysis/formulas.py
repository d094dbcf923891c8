"""Closed-form success probabilities and 2/3-class predicates.

All probabilities are for the PLUS encoding. MINUS behaves like PLUS with the
roles of d0 and d1 exchanged, which expected_linear_success and
expected_joint_success apply for callers.
"""

import math
from dataclasses import dataclass
from enum import Enum

from src.errors import DomainError
from src.statevector.register import OracleVariant

SQRT2 = math.sqrt(2.0)
TWO_THIRDS = 2.0 / 3.0
_EPS = 1e-12


@dataclass(frozen=True)
class DcFractions:
    """Don't-care counts normalized by N = 2^n."""

    D: float
    D0: float
    D1: float

    def __post_init__(self):
        if self.D0 < -_EPS or self.D1 < -_EPS:
            raise DomainError(f"fractions must be non-negative, got D0={self.D0}, D1={self.D1}")
        if abs(self.D0 + self.D1 - self.D) > 1e-9:
            raise DomainError(f"D0 + D1 must equal D, got {self.D0} + {self.D1} != {self.D}")
        if not 0.0 <= self.D < 0.5:
            raise DomainError(f"D must lie in [0, 1/2), got {self.D}")

    @classmethod
    def from_counts(cls, n: int, d0: int, d1: int) -> "DcFractions":
        if n < 1:
            raise DomainError(f"n must be at least 1, got {n}")
        N = 1 << n
        if d0 < 0 or d1 < 0:
            raise DomainError(f"don't-care counts must be non-negative, got d0={d0}, d1={d1}")
        if 2 * (d0 + d1) >= N:
            raise DomainError(f"d0 + d1 = {d0 + d1} must be below N/2 = {N // 2}")
        return cls(D=(d0 + d1) / N, D0=d0 / N, D1=d1 / N)

    @classmethod
    def from_d1(cls, D: float, D1: float) -> "DcFractions":
        return cls(D=D, D0=D - D1, D1=D1)

    def swapped(self) -> "DcFractions":
        return DcFractions(D=self.D, D0=self.D1, D1=self.D0)


@dataclass(frozen=True)
class GammaPair:
    """Final amplitudes on |C>|0> and |C>|1>, global sign dropped."""

    gamma0: float
    gamma1: float

    @property
    def p_linear(self) -> float:
        return self.gamma0**2 + self.gamma1**2

    @property
    def p_affine(self) -> float:
        return self.gamma1**2


class TargetKind(str, Enum):
    """What the true C index is in the partial function."""

    DEFINED = "defined"
    DC0 = "dc0"  # don't-care whose completion value is 0
    DC1 = "dc1"


def gammas(n: int, d0: int, d1: int) -> GammaPair:
    """
    Amplitudes of the true C after one PLUS query.

    gamma0 = (d0 - d1) / (sqrt2 N)
    gamma1 = 1 - (sqrt2 d + d0 - d1) / (sqrt2 N)
    """
    if n < 1:
        raise DomainError(f"n must be at least 1, got {n}")
    if d0 < 0 or d1 < 0:
        raise DomainError(f"don't-care counts must be non-negative, got d0={d0}, d1={d1}")
    N = 1 << n
    d = d0 + d1
    if 2 * d >= N:
        raise DomainError(f"d = {d} must be below N/2 = {N // 2}; see half_dc_case for d = N/2")
    scale = SQRT2 * N
    return GammaPair(
        gamma0=(d0 - d1) / scale,
        gamma1=1.0 - (SQRT2 * d + d0 - d1) / scale,
    )


def _affine_amplitude(D: float, D1: float) -> float:
    return 1.0 - (1.0 + 1.0 / SQRT2) * D + SQRT2 * D1


def p_linear(fr: DcFractions) -> float:
    """P(measure C) after one query."""
    return _affine_amplitude(fr.D, fr.D1) ** 2 + (fr.D / SQRT2 - SQRT2 * fr.D1) ** 2


def p_affine(fr: DcFractions) -> float:
    """P(C and c_n both correct) after two queries."""
    return _affine_amplitude(fr.D, fr.D1) ** 2


def linear_class_threshold(D: float) -> float | None:
    """Smallest D1 with p_linear >= 2/3 at this D; None when every D1 qualifies."""
    K1 = SQRT2 - (2.0 + SQRT2) * D
    K2 = (2.0 + SQRT2) * D * (1.0 - D) - 1.0 / 3.0
    discriminant = K1 * K1 + 4.0 * K2
    if discriminant < 0:
        return None
    return (math.sqrt(discriminant) - K1) / 4.0


def affine_class_threshold(D: float) -> float:
    """Smallest D1 with p_affine >= 2/3 at this D."""
    return 1.0 / math.sqrt(3.0) - 1.0 / SQRT2 + ((1.0 + SQRT2) / 2.0) * D


def in_linear_class(fr: DcFractions) -> bool:
    threshold = linear_class_threshold(fr.D)
    if threshold is None:
        return p_linear(fr) >= TWO_THIRDS
    return fr.D1 >= threshold


def in_affine_class(fr: DcFractions) -> bool:
    return fr.D1 >= affine_class_threshold(fr.D)


def effective_counts(d0: int, d1: int, variant: OracleVariant) -> tuple[int, int]:
    """(d0, d1) as the PLUS formulas should see them for this encoding."""
    return (d1, d0) if variant == OracleVariant.MINUS else (d0, d1)


def expected_linear_success(
    n: int, d0: int, d1: int, variant: OracleVariant = OracleVariant.PLUS
) -> float:
    return gammas(n, *effective_counts(d0, d1, variant)).p_linear


def expected_joint_success(
    n: int,
    d0: int,
    d1: int,
    target: TargetKind,
    variant: OracleVariant = OracleVariant.PLUS,
) -> float:
    """
    P(run_two_query returns the true (C, c_n)).

    gamma1^2 when the true C is defined or is a don't-care whose completion
    matches the encoding (0 for PLUS, 1 for MINUS); gamma0^2 otherwise, since
    the corrective Hadamard then decodes c_n from the wrong branch.
    """
    pair = gammas(n, *effective_counts(d0, d1, variant))
    favored = {OracleVariant.PLUS: TargetKind.DC0, OracleVariant.MINUS: TargetKind.DC1}[variant]
    if target in (TargetKind.DEFINED, favored):
        return pair.gamma1**2
    return pair.gamma0**2
