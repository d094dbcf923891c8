"""Seeded, reproducible random streams."""

import numpy as np

from src.config import settings
from src.errors import DimensionError

MAX_SEED = 2**64


def resolve_seed(seed: int | None) -> int:
    """Explicit seed, or the configured default."""
    value = settings.default_seed if seed is None else int(seed)
    if not 0 <= value < MAX_SEED:
        raise DimensionError(f"seed must be in [0, 2^64), got {value}")
    return value


def make_rng(seed: int) -> np.random.Generator:
    return np.random.default_rng(np.random.SeedSequence(resolve_seed(seed)))


def shot_rng(seed: int, shot_index: int) -> np.random.Generator:
    """Independent stream for one shot, derived from (seed, shot_index) only."""
    return np.random.default_rng(np.random.SeedSequence([resolve_seed(seed), shot_index]))


def sample_index(probabilities: np.ndarray, rng: np.random.Generator) -> int:
    """Draw an index from an unnormalized probability vector."""
    cumulative = np.cumsum(probabilities)
    threshold = rng.random() * cumulative[-1]
    index = int(np.searchsorted(cumulative, threshold, side="right"))
    return min(index, len(cumulative) - 1)
