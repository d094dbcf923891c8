"""Boolean function model, file I/O and affine completion search."""

from src.boolfn.completions import (
    agreement_spectrum,
    consistent_affine_completions,
    truth_value_at,
)
from src.boolfn.io import (
    parse_function_file,
    read_function_file,
    save_function_file,
    write_function_file,
)
from src.boolfn.models import (
    AffineSpec,
    DcSplit,
    Entry,
    PartialFunction,
    TruthTable,
    all_affine_specs,
    bits_of,
    bitstring,
    coerce_index,
    dc_split,
    eval_affine,
    index_of,
    mask,
    parity,
    random_mask,
    truth_table,
)

__all__ = [
    "AffineSpec",
    "DcSplit",
    "Entry",
    "PartialFunction",
    "TruthTable",
    "agreement_spectrum",
    "all_affine_specs",
    "bits_of",
    "bitstring",
    "coerce_index",
    "consistent_affine_completions",
    "dc_split",
    "eval_affine",
    "index_of",
    "mask",
    "parity",
    "random_mask",
    "parse_function_file",
    "read_function_file",
    "save_function_file",
    "truth_table",
    "truth_value_at",
    "write_function_file",
]
