"""Exact statevector simulation of an n-qubit input register plus one workspace qubit.

Basis index = 2 * (input index) + (workspace bit): the workspace is the least
significant index bit, so every input index owns a contiguous 2-amplitude
block and oracles act block by block.
"""

from dataclasses import dataclass
from enum import Enum

import numpy as np
import structlog

from src.boolfn.models import Entry, PartialFunction, bitstring, check_register
from src.config import settings
from src.errors import DimensionError, MeasurementError
from src.statevector.rng import sample_index
from src.walsh import butterfly, fwht

logger = structlog.get_logger()

SQRT_HALF = 1 / np.sqrt(2)


class OracleVariant(str, Enum):
    """How the oracle encodes a don't-care on the workspace."""

    PLUS = "plus"  # H: don't-care -> (|0> + |1>)/sqrt(2)
    MINUS = "minus"  # H.X: don't-care -> (|0> - |1>)/sqrt(2)


@dataclass
class StateVector:
    """Amplitudes of the (n+1)-qubit register. Operations mutate and return self."""

    n: int
    amplitudes: np.ndarray

    def __post_init__(self):
        self.amplitudes = np.ascontiguousarray(self.amplitudes, dtype=np.complex128)
        if self.amplitudes.shape != (1 << (self.n + 1),):
            raise DimensionError(
                f"state for n={self.n} needs {1 << (self.n + 1)} amplitudes, "
                f"got {self.amplitudes.size}"
            )

    @property
    def blocks(self) -> np.ndarray:
        """(2^n, 2) view: row i holds the workspace amplitudes of input index i."""
        return self.amplitudes.reshape(-1, 2)

    def norm(self) -> float:
        return float(np.sqrt(np.sum(np.abs(self.amplitudes) ** 2)))

    def copy(self) -> "StateVector":
        return StateVector(n=self.n, amplitudes=self.amplitudes.copy())

    # === Gates ===

    def hadamard_all(self) -> "StateVector":
        """H on all n+1 qubits (fast Walsh-Hadamard transform)."""
        self.amplitudes = fwht(self.amplitudes, normalize=True)
        return self

    def hadamard_workspace(self) -> "StateVector":
        """H on the workspace qubit only."""
        butterfly(self.amplitudes, 1)
        self.amplitudes *= SQRT_HALF
        return self

    def apply_oracle(self, partial: PartialFunction, variant: OracleVariant) -> "StateVector":
        """
        Block-diagonal oracle: per input index the workspace block gets I for
        ZERO, X for ONE, and H (PLUS) or H.X (MINUS) for DONT_CARE.
        """
        if partial.n != self.n:
            raise DimensionError(f"oracle has n={partial.n} but the register has n={self.n}")

        blocks = self.blocks
        ones = partial.entries == Entry.ONE
        blocks[ones] = blocks[ones][:, ::-1]

        dc = partial.dc_mask
        if np.any(dc):
            first, second = blocks[dc, 0].copy(), blocks[dc, 1].copy()
            if variant == OracleVariant.MINUS:
                first, second = second, first
            blocks[dc, 0] = (first + second) * SQRT_HALF
            blocks[dc, 1] = (first - second) * SQRT_HALF
        return self

    # === Readout ===

    def exact_distribution(self, first_n_only: bool = False) -> np.ndarray:
        """Born-rule probabilities; with first_n_only the workspace is summed out."""
        probabilities = np.abs(self.amplitudes) ** 2
        if first_n_only:
            return probabilities.reshape(-1, 2).sum(axis=1)
        return probabilities

    def measure_first_n(self, rng: np.random.Generator) -> tuple[str, "StateVector"]:
        """Measure the input register and collapse onto the observed block."""
        marginal = self.exact_distribution(first_n_only=True)
        total = float(marginal.sum())
        if total < settings.norm_tolerance:
            raise MeasurementError("input register marginal is zero")

        index = sample_index(marginal, rng)
        collapsed = np.zeros_like(self.amplitudes)
        collapsed[2 * index : 2 * index + 2] = self.amplitudes[2 * index : 2 * index + 2]
        self.amplitudes = collapsed / np.sqrt(marginal[index])
        return bitstring(index, self.n), self

    def measure_workspace(self, rng: np.random.Generator) -> tuple[int, "StateVector"]:
        """Measure the workspace qubit and collapse."""
        probabilities = self.exact_distribution().reshape(-1, 2).sum(axis=0)
        if float(probabilities.sum()) < settings.norm_tolerance:
            raise MeasurementError("workspace marginal is zero")

        bit = sample_index(probabilities, rng)
        collapsed = np.zeros_like(self.amplitudes)
        collapsed[bit::2] = self.amplitudes[bit::2]
        self.amplitudes = collapsed / np.sqrt(probabilities[bit])
        return bit, self


def new_register(n: int) -> StateVector:
    """|0...0> (input) tensor |1> (workspace)."""
    check_register(n, settings.max_register_qubits, "new_register")
    amplitudes = np.zeros(1 << (n + 1), dtype=np.complex128)
    amplitudes[1] = 1.0
    return StateVector(n=n, amplitudes=amplitudes)


def equal_up_to_phase(left: np.ndarray, right: np.ndarray, atol: float) -> bool:
    """Amplitude vectors equal up to one common phase factor."""
    pivot = int(np.argmax(np.abs(right)))
    if abs(right[pivot]) < atol:
        return bool(np.allclose(left, right, atol=atol))
    phase = left[pivot] / right[pivot]
    if not np.isclose(abs(phase), 1.0, atol=atol):
        return False
    return bool(np.allclose(left, phase * right, atol=atol))
