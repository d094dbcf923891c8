"""Fast Walsh-Hadamard transform shared by the simulator and the completion search.

Index bit k (value 2**k) is one butterfly stage. Stages always run from the
least significant bit upward, so results are reproducible bit for bit.
"""

import numpy as np

from src.errors import DimensionError


def _check_length(length: int) -> None:
    if length < 1 or length & (length - 1):
        raise DimensionError(f"Walsh-Hadamard transform needs a power-of-two length, got {length}")


def butterfly(values: np.ndarray, stride: int) -> None:
    """Apply the unnormalized (a+b, a-b) butterfly on index bit `stride`, in place."""
    view = values.reshape(-1, 2, stride)
    upper = view[:, 0, :].copy()
    lower = view[:, 1, :]
    view[:, 0, :] = upper + lower
    view[:, 1, :] = upper - lower


def fwht(values: np.ndarray, *, normalize: bool = False) -> np.ndarray:
    """
    Return the Walsh-Hadamard transform of `values`.

    W[z] = sum_x (-1)^{popcount(x & z)} values[x], scaled by 1/sqrt(len) when
    `normalize` is set (the unitary H on every qubit).
    """
    out = np.array(values, copy=True)
    length = out.shape[0]
    _check_length(length)

    stride = 1
    while stride < length:
        butterfly(out, stride)
        stride *= 2

    if normalize:
        out = out / np.sqrt(length)
    return out


def parity_of(indices: np.ndarray) -> np.ndarray:
    """Popcount parity of each non-negative integer in `indices`."""
    v = np.asarray(indices, dtype=np.int64).copy()
    for shift in (32, 16, 8, 4, 2, 1):
        v ^= v >> shift
    return (v & 1).astype(np.uint8)
