"""Run configuration and identification results."""

from dataclasses import dataclass, field
from enum import Enum

from pydantic import BaseModel, ConfigDict, Field

from src.config import settings


class IdentifyMode(str, Enum):
    LINEAR_ONLY = "linear"
    AFFINE = "affine"


class VariantPolicy(str, Enum):
    AUTO = "auto"
    FORCE_PLUS = "plus"
    FORCE_MINUS = "minus"
    BOTH_WITH_VOTE = "vote"


class Protocol(str, Enum):
    TWO_QUERY = "two-query"
    SPLIT = "split"


class RunConfig(BaseModel):
    """How majority_vote runs the identification circuits."""

    model_config = ConfigDict(frozen=True)

    mode: IdentifyMode = IdentifyMode.AFFINE
    variant_policy: VariantPolicy = VariantPolicy.AUTO
    trials_per_oracle: int = Field(default_factory=lambda: settings.default_trials_per_oracle, ge=1)
    rng_seed: int = Field(default_factory=lambda: settings.default_seed, ge=0, lt=2**64)
    protocol: Protocol = Protocol.TWO_QUERY
    threads: int = Field(default=0, ge=0, description="0 = configured default")


Candidate = tuple[str, int | None]


@dataclass(frozen=True)
class IdentificationResult:
    """Outcome of a majority vote over repeated identification runs."""

    C: str
    c_n: int | None
    vote_table: dict[Candidate, int]
    variant_used: str  # "plus", "minus" or "both"
    shots: int
    seed: int
    mode: IdentifyMode = IdentifyMode.AFFINE
    anomalies: tuple[str, ...] = field(default_factory=tuple)

    @property
    def winner(self) -> Candidate:
        return (self.C, self.c_n)

    @property
    def winner_votes(self) -> int:
        return self.vote_table[self.winner]

    @property
    def is_unanimous(self) -> bool:
        return len(self.vote_table) == 1

    def sorted_votes(self) -> list[tuple[Candidate, int]]:
        """Votes, most frequent first, ties by candidate order."""
        return sorted(self.vote_table.items(), key=lambda item: (-item[1], candidate_key(item[0])))


def candidate_key(candidate: Candidate) -> tuple[int, int]:
    """Integer order on (C, c_n); a missing c_n sorts first."""
    C, c_n = candidate
    return (int(C, 2), -1 if c_n is None else c_n)
