"""Closed-form probabilities, class predicates and the (D, D1) landscape."""

from src.analysis.crosscheck import InstanceComparison, compare_instance, target_kind
from src.analysis.formulas import (
    DcFractions,
    GammaPair,
    TargetKind,
    affine_class_threshold,
    expected_joint_success,
    expected_linear_success,
    gammas,
    in_affine_class,
    in_linear_class,
    linear_class_threshold,
    p_affine,
    p_linear,
)
from src.analysis.halfdc import half_dc_amplitudes, half_dc_case, half_dc_instance
from src.analysis.landscape import (
    LandscapeRow,
    SweepMode,
    SweepOracle,
    class_coverage,
    sweep_landscape,
    write_landscape_csv,
)

__all__ = [
    "DcFractions",
    "GammaPair",
    "InstanceComparison",
    "LandscapeRow",
    "SweepMode",
    "SweepOracle",
    "TargetKind",
    "affine_class_threshold",
    "class_coverage",
    "compare_instance",
    "expected_joint_success",
    "expected_linear_success",
    "gammas",
    "half_dc_amplitudes",
    "half_dc_case",
    "half_dc_instance",
    "in_affine_class",
    "in_linear_class",
    "linear_class_threshold",
    "p_affine",
    "p_linear",
    "sweep_landscape",
    "target_kind",
    "write_landscape_csv",
]
