"""Report models printed by the command-line tools.

Each report renders as fixed text (9 fractional digits) or, with --json, as the
pydantic model dump.
"""

from pydantic import BaseModel, Field

from src.algorithms.schemas import IdentificationResult, candidate_key
from src.algorithms.voting import presumptive_dc_split
from src.analysis.crosscheck import InstanceComparison
from src.boolfn.models import PartialFunction


def fmt(value: float | None) -> str:
    return "n/a" if value is None else f"{value:.9f}"


def fmt_candidate(C: str, c_n: int | None) -> str:
    return f"C={C}" if c_n is None else f"C={C} c_n={c_n}"


# === Shared ===


class FunctionCounts(BaseModel):
    """Counts of a partial function, with d0/d1 presumed from a balanced completion."""

    n: int
    n0_prime: int
    n1_prime: int
    d: int
    presumptive_d0: int
    presumptive_d1: int

    @classmethod
    def of(cls, partial: PartialFunction) -> "FunctionCounts":
        d0, d1 = presumptive_dc_split(partial)
        return cls(
            n=partial.n,
            n0_prime=partial.n0_prime,
            n1_prime=partial.n1_prime,
            d=partial.d,
            presumptive_d0=d0,
            presumptive_d1=d1,
        )

    def render(self) -> str:
        return (
            f"n={self.n} n0'={self.n0_prime} n1'={self.n1_prime} d={self.d} "
            f"presumptive d0={self.presumptive_d0} d1={self.presumptive_d1}"
        )


# === identify ===


class VoteEntry(BaseModel):
    C: str
    c_n: int | None = None
    votes: int = Field(..., ge=0)


class IdentifyReport(BaseModel):
    counts: FunctionCounts
    mode: str
    protocol: str
    C: str
    c_n: int | None = None
    variant_used: str
    seed: int
    shots: int
    unanimous: bool
    votes: list[VoteEntry]
    anomalies: list[str] = Field(default_factory=list)

    @classmethod
    def build(
        cls, partial: PartialFunction, result: IdentificationResult, protocol: str
    ) -> "IdentifyReport":
        return cls(
            counts=FunctionCounts.of(partial),
            mode=result.mode.value,
            protocol=protocol,
            C=result.C,
            c_n=result.c_n,
            variant_used=result.variant_used,
            seed=result.seed,
            shots=result.shots,
            unanimous=result.is_unanimous,
            votes=[
                VoteEntry(C=C, c_n=c_n, votes=count)
                for (C, c_n), count in result.sorted_votes()
            ],
            anomalies=list(result.anomalies),
        )

    def render(self) -> str:
        lines = [
            self.counts.render(),
            fmt_candidate(self.C, self.c_n),
            f"mode={self.mode} protocol={self.protocol} variant={self.variant_used} "
            f"seed={self.seed} shots={self.shots}"
            + (" unanimous" if self.unanimous else ""),
            "votes:",
        ]
        lines += [f"  {fmt_candidate(v.C, v.c_n)}  {v.votes}" for v in self.votes]
        if self.anomalies:
            lines.append("anomalies: " + ", ".join(self.anomalies))
        return "\n".join(lines)


# === prob ===


class CompletionProbabilities(BaseModel):
    C: str
    c_n: int
    target: str
    d0: int
    d1: int
    gamma0: float | None
    gamma1: float | None
    p_linear_analytic: float | None
    p_linear_simulated: float
    p_affine_analytic: float | None
    joint_expected: float | None
    joint_simulated: float
    linear_delta: float | None
    joint_delta: float | None

    @classmethod
    def of(cls, comparison: InstanceComparison) -> "CompletionProbabilities":
        pair = comparison.gammas
        return cls(
            C=comparison.spec.C,
            c_n=comparison.spec.affinity,
            target=comparison.target.value,
            d0=comparison.split.d0,
            d1=comparison.split.d1,
            gamma0=None if pair is None else pair.gamma0,
            gamma1=None if pair is None else pair.gamma1,
            p_linear_analytic=comparison.p_linear_analytic,
            p_linear_simulated=comparison.p_linear_simulated,
            p_affine_analytic=comparison.p_affine_analytic,
            joint_expected=comparison.joint_expected,
            joint_simulated=comparison.joint_simulated,
            linear_delta=comparison.linear_delta,
            joint_delta=comparison.joint_delta,
        )

    def render(self) -> str:
        return "\n".join(
            [
                f"completion {fmt_candidate(self.C, self.c_n)} target={self.target}",
                f"  d0={self.d0} d1={self.d1} gamma0={fmt(self.gamma0)} gamma1={fmt(self.gamma1)}",
                f"  P_L analytic={fmt(self.p_linear_analytic)} "
                f"simulated={fmt(self.p_linear_simulated)} delta={fmt(self.linear_delta)}",
                f"  P_A analytic={fmt(self.p_affine_analytic)} "
                f"joint expected={fmt(self.joint_expected)} "
                f"simulated={fmt(self.joint_simulated)} delta={fmt(self.joint_delta)}",
            ]
        )


class OutcomeEntry(BaseModel):
    C: str
    c_n: int
    probability: float = Field(..., ge=0.0)

    @classmethod
    def ranked(cls, outcomes: dict[tuple[str, int], float], limit: int) -> list["OutcomeEntry"]:
        """Most likely readouts first; ties in (C, c_n) integer order."""
        order = sorted(outcomes.items(), key=lambda item: (-item[1], candidate_key(item[0])))
        return [cls(C=C, c_n=c_n, probability=p) for (C, c_n), p in order[:limit]]

    def render(self) -> str:
        return f"  {fmt_candidate(self.C, self.c_n)}  {fmt(self.probability)}"


class ProbReport(BaseModel):
    counts: FunctionCounts
    variant: str
    completions: list[CompletionProbabilities]
    outcomes: list[OutcomeEntry]

    def render(self) -> str:
        lines = [self.counts.render(), f"variant={self.variant} completions={len(self.completions)}"]
        lines += [completion.render() for completion in self.completions]
        lines.append("outcomes:")
        lines += [outcome.render() for outcome in self.outcomes]
        return "\n".join(lines)


# === classify ===


class ClassifyReport(BaseModel):
    n: int
    d0: int
    d1: int
    D: float
    D0: float
    D1: float
    mode: str
    probability: float
    threshold: float | None = Field(None, description="Smallest D1 in class; None if any D1 is")
    in_class: bool

    def render(self) -> str:
        return "\n".join(
            [
                f"n={self.n} d0={self.d0} d1={self.d1}",
                f"D={fmt(self.D)} D0={fmt(self.D0)} D1={fmt(self.D1)}",
                f"mode={self.mode} P={fmt(self.probability)} "
                f"threshold={'none' if self.threshold is None else fmt(self.threshold)} "
                f"in_class={'true' if self.in_class else 'false'}",
            ]
        )


# === verify ===


class CheckReport(BaseModel):
    name: str
    passed: bool
    checked: int
    counterexample: str | None = None

    def render(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        line = f"{status} {self.name} ({self.checked} cases)"
        if self.counterexample:
            line += f"\n  counterexample: {self.counterexample}"
        return line


class VerifyReport(BaseModel):
    max_n: int
    masks: int
    shots: int
    seed: int
    checks: list[CheckReport]

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    def render(self) -> str:
        lines = [f"verify max_n={self.max_n} masks={self.masks} shots={self.shots} seed={self.seed}"]
        lines += [check.render() for check in self.checks]
        lines.append("result: " + ("pass" if self.passed else "fail"))
        return "\n".join(lines)
