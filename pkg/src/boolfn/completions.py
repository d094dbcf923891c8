"""Exhaustive search for affine completions of a partial function."""

import numpy as np
import structlog

from src.boolfn.models import AffineSpec, Entry, PartialFunction, check_register
from src.config import settings
from src.walsh import fwht

logger = structlog.get_logger()


def agreement_spectrum(partial: PartialFunction) -> np.ndarray:
    """
    Score every linear part C against the defined entries.

    W[C] = sum over defined x of (-1)^(g(x) xor C.x). The affine function
    (C, c_n) agrees with every defined entry exactly when W[C] = (-1)^c_n * m,
    m being the number of defined entries, so one transform scores all
    2^(n+1) candidates at once.
    """
    signs = np.zeros(partial.size, dtype=np.int64)
    defined = ~partial.dc_mask
    signs[defined] = 1 - 2 * partial.entries[defined].astype(np.int64)
    return fwht(signs)


def consistent_affine_completions(partial: PartialFunction) -> list[AffineSpec]:
    """
    All affine functions that agree with `partial` on its defined entries.

    Ordered by (linear_coeffs as integer, affinity). An empty list means no
    affine completion exists.
    """
    check_register(partial.n, settings.max_completion_inputs, "consistent_affine_completions")

    spectrum = agreement_spectrum(partial)
    defined = partial.size - partial.d

    candidates = [(int(c), 0) for c in np.flatnonzero(spectrum == defined)]
    candidates += [(int(c), 1) for c in np.flatnonzero(spectrum == -defined)]
    completions = [AffineSpec.from_index(partial.n, c, a) for c, a in sorted(set(candidates))]

    logger.debug(
        "affine_completions_found",
        n=partial.n,
        d=partial.d,
        count=len(completions),
    )
    return completions


def truth_value_at(spec: AffineSpec, index: int) -> Entry:
    """Completion value at a single input index."""
    return Entry((bin(spec.coeff_index & index).count("1") & 1) ^ spec.affinity)
