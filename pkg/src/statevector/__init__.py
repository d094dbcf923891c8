"""Statevector simulation of the input register plus workspace qubit."""

from src.statevector.register import (
    OracleVariant,
    StateVector,
    equal_up_to_phase,
    new_register,
)
from src.statevector.rng import make_rng, resolve_seed, sample_index, shot_rng

__all__ = [
    "OracleVariant",
    "StateVector",
    "equal_up_to_phase",
    "make_rng",
    "new_register",
    "resolve_seed",
    "sample_index",
    "shot_rng",
]
