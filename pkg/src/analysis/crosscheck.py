"""Closed forms against exact simulation for one partial function and completion."""

from dataclasses import dataclass

from src.algorithms.queries import one_query_success, two_query_success
from src.analysis.formulas import (
    DcFractions,
    GammaPair,
    TargetKind,
    effective_counts,
    expected_joint_success,
    gammas,
    p_affine,
)
from src.boolfn.completions import truth_value_at
from src.boolfn.models import AffineSpec, DcSplit, Entry, PartialFunction, dc_split, truth_table
from src.statevector.register import OracleVariant


def target_kind(partial: PartialFunction, spec: AffineSpec) -> TargetKind:
    """Whether the true C index is defined, or a don't-care completed to 0 or 1."""
    index = spec.coeff_index
    if not partial.is_dont_care(index):
        return TargetKind.DEFINED
    if truth_value_at(spec, index) == Entry.ZERO:
        return TargetKind.DC0
    return TargetKind.DC1


@dataclass(frozen=True)
class InstanceComparison:
    """Analytic and simulated success for one completion.

    Analytic fields are None when d >= N/2, where the closed forms do not apply.
    """

    spec: AffineSpec
    split: DcSplit
    variant: OracleVariant
    target: TargetKind
    gammas: GammaPair | None
    p_linear_analytic: float | None
    p_linear_simulated: float
    p_affine_analytic: float | None
    joint_expected: float | None
    joint_simulated: float

    @property
    def linear_delta(self) -> float | None:
        if self.p_linear_analytic is None:
            return None
        return abs(self.p_linear_analytic - self.p_linear_simulated)

    @property
    def joint_delta(self) -> float | None:
        if self.joint_expected is None:
            return None
        return abs(self.joint_expected - self.joint_simulated)

    def agrees(self, tolerance: float) -> bool:
        deltas = (self.linear_delta, self.joint_delta)
        return all(delta is None or delta <= tolerance for delta in deltas)


def compare_instance(
    partial: PartialFunction,
    spec: AffineSpec,
    variant: OracleVariant = OracleVariant.PLUS,
) -> InstanceComparison:
    split = dc_split(partial, truth_table(spec))
    target = target_kind(partial, spec)

    pair = linear = affine = joint = None
    if 2 * split.d < partial.size:
        d0, d1 = effective_counts(split.d0, split.d1, variant)
        pair = gammas(partial.n, d0, d1)
        linear = pair.p_linear
        affine = p_affine(DcFractions.from_counts(partial.n, d0, d1))
        joint = expected_joint_success(partial.n, split.d0, split.d1, target, variant)

    return InstanceComparison(
        spec=spec,
        split=split,
        variant=variant,
        target=target,
        gammas=pair,
        p_linear_analytic=linear,
        p_linear_simulated=one_query_success(partial, spec, variant),
        p_affine_analytic=affine,
        joint_expected=joint,
        joint_simulated=two_query_success(partial, spec, variant),
    )
