"""Boolean function data model: affine specs, truth tables, partial functions.

Bit ordering is global: index i encodes the input vector x big-endian, with
x_0 as the most significant bit. A coefficient string C = c_0 c_1 ... c_{n-1}
therefore maps to the integer int(C, 2), and C.x = popcount(C & x) mod 2.
"""

from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from enum import IntEnum

import numpy as np
import structlog

from src.config import settings
from src.errors import DimensionError, InconsistentCompletionError, RegisterLimitError
from src.walsh import parity_of

logger = structlog.get_logger()


class Entry(IntEnum):
    """Value of one truth-table entry of a partial function."""

    ZERO = 0
    ONE = 1
    DONT_CARE = -1  # a separate symbol; never used arithmetically

    @property
    def symbol(self) -> str:
        return _SYMBOLS[self]

    @classmethod
    def from_symbol(cls, symbol: str) -> "Entry":
        return _FROM_SYMBOL[symbol]


_SYMBOLS = {Entry.ZERO: "0", Entry.ONE: "1", Entry.DONT_CARE: "-"}
_FROM_SYMBOL = {v: k for k, v in _SYMBOLS.items()}


# === Bit helpers ===


def bits_of(index: int, n: int) -> tuple[int, ...]:
    """Big-endian bit vector of `index` (x_0 first)."""
    return tuple((index >> (n - 1 - k)) & 1 for k in range(n))


def index_of(bits: Sequence[int]) -> int:
    """Inverse of bits_of."""
    value = 0
    for bit in bits:
        value = (value << 1) | (int(bit) & 1)
    return value


def bitstring(index: int, n: int) -> str:
    return format(index, f"0{n}b")


def coerce_index(value: int | str | Sequence[int], n: int) -> int:
    """Accept an integer, a '0101' string or a bit sequence and return the index."""
    if isinstance(value, str):
        if len(value) != n or set(value) - {"0", "1"}:
            raise DimensionError(f"expected a {n}-bit string, got {value!r}")
        return int(value, 2)
    if isinstance(value, int | np.integer):
        index = int(value)
    else:
        if len(value) != n:
            raise DimensionError(f"expected {n} bits, got {len(value)}")
        index = index_of(value)
    if not 0 <= index < (1 << n):
        raise DimensionError(f"index {index} out of range for n={n}")
    return index


def parity(C: Sequence[int] | str) -> int:
    """XOR of all bits of C."""
    return sum(int(bit) for bit in C) & 1


def check_register(n: int, limit: int, what: str) -> None:
    if n < 1:
        raise DimensionError(f"{what}: n must be at least 1, got {n}")
    if n > limit:
        logger.warning("register_limit_exceeded", what=what, n=n, limit=limit)
        raise RegisterLimitError(n, limit, what)


# === Affine functions ===


@dataclass(frozen=True)
class AffineSpec:
    """f(x) = c_0 x_0 xor ... xor c_{n-1} x_{n-1} xor c_n."""

    n: int
    linear_coeffs: tuple[int, ...]
    affinity: int = 0

    def __post_init__(self):
        if self.n < 1:
            raise DimensionError(f"n must be at least 1, got {self.n}")
        coeffs = tuple(int(c) for c in self.linear_coeffs)
        if len(coeffs) != self.n:
            raise DimensionError(
                f"linear_coeffs has {len(coeffs)} bits but n={self.n}"
            )
        if set(coeffs) - {0, 1} or self.affinity not in (0, 1):
            raise DimensionError("coefficients must be bits")
        object.__setattr__(self, "linear_coeffs", coeffs)

    @classmethod
    def from_index(cls, n: int, coeff_index: int, affinity: int = 0) -> "AffineSpec":
        return cls(n=n, linear_coeffs=bits_of(coeff_index, n), affinity=affinity)

    @classmethod
    def from_string(cls, C: str, affinity: int = 0) -> "AffineSpec":
        return cls(n=len(C), linear_coeffs=tuple(int(ch) for ch in C), affinity=affinity)

    @property
    def coeff_index(self) -> int:
        return index_of(self.linear_coeffs)

    @property
    def C(self) -> str:
        return "".join(str(c) for c in self.linear_coeffs)

    @property
    def is_linear(self) -> bool:
        return self.affinity == 0

    @property
    def sort_key(self) -> tuple[int, int]:
        return (self.coeff_index, self.affinity)

    def __str__(self) -> str:
        return f"C={self.C} c_n={self.affinity}"


def all_affine_specs(n: int) -> list[AffineSpec]:
    """Every affine function of n inputs, ordered by (C, c_n)."""
    return [
        AffineSpec.from_index(n, coeff_index, affinity)
        for coeff_index in range(1 << n)
        for affinity in (0, 1)
    ]


def eval_affine(spec: AffineSpec, x: Sequence[int]) -> int:
    """Evaluate the affine function at the input vector x."""
    if len(x) != spec.n:
        raise DimensionError(f"input has {len(x)} bits but the function has n={spec.n}")
    value = spec.affinity
    for c, bit in zip(spec.linear_coeffs, x, strict=True):
        value ^= c & int(bit)
    return value


# === Truth tables ===


@dataclass(frozen=True, eq=False)
class TruthTable:
    """Completely specified function as 2^n output bits."""

    n: int
    outputs: np.ndarray

    def __post_init__(self):
        outputs = np.asarray(self.outputs, dtype=np.uint8).copy()
        if outputs.ndim != 1 or outputs.shape[0] != (1 << self.n):
            raise DimensionError(
                f"truth table for n={self.n} needs {1 << self.n} entries, got {outputs.size}"
            )
        if np.any(outputs > 1):
            raise DimensionError("truth table outputs must be bits")
        outputs.flags.writeable = False
        object.__setattr__(self, "outputs", outputs)

    @classmethod
    def from_string(cls, text: str) -> "TruthTable":
        n = max(len(text), 1).bit_length() - 1
        return cls(n=n, outputs=np.array([int(ch) for ch in text], dtype=np.uint8))

    @property
    def ones(self) -> int:
        return int(self.outputs.sum())

    def __len__(self) -> int:
        return int(self.outputs.shape[0])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TruthTable):
            return NotImplemented
        return self.n == other.n and np.array_equal(self.outputs, other.outputs)

    __hash__ = None  # type: ignore[assignment]

    def __str__(self) -> str:
        return "".join(str(int(b)) for b in self.outputs)


def truth_table(spec: AffineSpec) -> TruthTable:
    """Enumerate an affine function over all 2^n inputs."""
    check_register(spec.n, settings.max_register_qubits, "truth_table")
    indices = np.arange(1 << spec.n, dtype=np.int64)
    outputs = parity_of(indices & spec.coeff_index) ^ spec.affinity
    return TruthTable(n=spec.n, outputs=outputs)


# === Partial functions ===


@dataclass(frozen=True, eq=False)
class PartialFunction:
    """Incompletely defined function over {ZERO, ONE, DONT_CARE}."""

    n: int
    entries: np.ndarray
    n0_prime: int = field(init=False)
    n1_prime: int = field(init=False)
    d: int = field(init=False)

    def __post_init__(self):
        entries = np.asarray(self.entries, dtype=np.int8).copy()
        if self.n < 1:
            raise DimensionError(f"n must be at least 1, got {self.n}")
        if entries.ndim != 1 or entries.shape[0] != (1 << self.n):
            raise DimensionError(
                f"partial function for n={self.n} needs {1 << self.n} entries, got {entries.size}"
            )
        if not np.all(np.isin(entries, (Entry.ZERO, Entry.ONE, Entry.DONT_CARE))):
            raise DimensionError("entries must be ZERO, ONE or DONT_CARE")
        entries.flags.writeable = False
        object.__setattr__(self, "entries", entries)
        object.__setattr__(self, "n0_prime", int(np.count_nonzero(entries == Entry.ZERO)))
        object.__setattr__(self, "n1_prime", int(np.count_nonzero(entries == Entry.ONE)))
        object.__setattr__(self, "d", int(np.count_nonzero(entries == Entry.DONT_CARE)))

    @classmethod
    def from_truth_table(cls, table: TruthTable) -> "PartialFunction":
        return cls(n=table.n, entries=table.outputs.astype(np.int8))

    @classmethod
    def from_symbols(cls, text: str) -> "PartialFunction":
        n = max(len(text), 1).bit_length() - 1
        return cls(n=n, entries=np.array([Entry.from_symbol(ch) for ch in text], dtype=np.int8))

    @property
    def size(self) -> int:
        return 1 << self.n

    @property
    def dc_mask(self) -> np.ndarray:
        return self.entries == Entry.DONT_CARE

    @property
    def dc_indices(self) -> np.ndarray:
        return np.flatnonzero(self.dc_mask)

    def entry(self, index: int) -> Entry:
        return Entry(int(self.entries[index]))

    def is_dont_care(self, index: int) -> bool:
        return int(self.entries[index]) == Entry.DONT_CARE

    def complemented(self) -> "PartialFunction":
        """Swap ZERO and ONE on defined entries; don't-cares stay."""
        flipped = self.entries.copy()
        defined = flipped != Entry.DONT_CARE
        flipped[defined] = 1 - flipped[defined]
        return PartialFunction(n=self.n, entries=flipped)

    def symbols(self) -> str:
        return "".join(_SYMBOLS[Entry(int(e))] for e in self.entries)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PartialFunction):
            return NotImplemented
        return self.n == other.n and np.array_equal(self.entries, other.entries)

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        body = self.symbols() if self.n <= 6 else f"<{self.size} entries>"
        return (
            f"PartialFunction(n={self.n}, {body}, n0'={self.n0_prime}, "
            f"n1'={self.n1_prime}, d={self.d})"
        )


@dataclass(frozen=True)
class DcSplit:
    """Don't-care counts split by the value of the ground-truth completion."""

    d0: int
    d1: int

    @property
    def d(self) -> int:
        return self.d0 + self.d1


def mask(table: TruthTable, dc_indices: Iterable[int]) -> PartialFunction:
    """Replace the listed entries of a truth table with don't-cares."""
    entries = table.outputs.astype(np.int8)
    indices = np.fromiter((int(i) for i in dc_indices), dtype=np.int64)
    if indices.size and (indices.min() < 0 or indices.max() >= len(table)):
        raise DimensionError(f"don't-care index out of range for n={table.n}")
    entries[indices] = Entry.DONT_CARE
    return PartialFunction(n=table.n, entries=entries)


def dc_split(partial: PartialFunction, truth: TruthTable) -> DcSplit:
    """Count don't-cares whose completion is 0 (d0) and 1 (d1)."""
    if partial.n != truth.n:
        raise DimensionError(f"partial has n={partial.n} but truth table has n={truth.n}")

    defined = ~partial.dc_mask
    mismatched = np.flatnonzero(defined & (partial.entries != truth.outputs.astype(np.int8)))
    if mismatched.size:
        index = int(mismatched[0])
        raise InconsistentCompletionError(
            index, int(partial.entries[index]), int(truth.outputs[index])
        )

    hidden = truth.outputs[partial.dc_mask]
    d1 = int(hidden.sum())
    return DcSplit(d0=int(hidden.size) - d1, d1=d1)


def random_mask(spec: AffineSpec, d: int, rng: np.random.Generator) -> PartialFunction:
    """Hide d distinct entries of the affine function, chosen uniformly."""
    size = 1 << spec.n
    if not 0 <= d <= size:
        raise DimensionError(f"cannot hide {d} of {size} entries")
    return mask(truth_table(spec), rng.choice(size, size=d, replace=False))
