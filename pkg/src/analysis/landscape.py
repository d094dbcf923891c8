"""Success-probability landscape over the (D, D1) plane and its CSV artifact."""

import csv
import os
import tempfile
from dataclasses import dataclass
from enum import Enum
from pathlib import Path

import structlog

from src.analysis.formulas import (
    DcFractions,
    in_affine_class,
    in_linear_class,
    p_affine,
    p_linear,
)
from src.errors import DomainError

logger = structlog.get_logger()

CSV_HEADER = ("D", "D1", "P", "in_class")


class SweepMode(str, Enum):
    LINEAR = "linear"
    AFFINE = "affine"


class SweepOracle(str, Enum):
    """PLUS fixes the encoding; AUTO picks MINUS whenever D0 >= D1."""

    PLUS = "plus"
    AUTO = "auto"


@dataclass(frozen=True)
class LandscapeRow:
    D: float
    D1: float
    P: float
    in_class: bool

    def as_csv(self) -> dict[str, str]:
        return {
            "D": f"{self.D:.9f}",
            "D1": f"{self.D1:.9f}",
            "P": f"{self.P:.9f}",
            "in_class": "true" if self.in_class else "false",
        }


_EVALUATORS = {
    SweepMode.LINEAR: (p_linear, in_linear_class),
    SweepMode.AFFINE: (p_affine, in_affine_class),
}


def grid_points(grid_steps: int) -> list[tuple[float, float]]:
    """
    Triangular lattice with spacing 1/(2G): D = i/(2G) for i < G and
    D1 = k/(2G) for k <= i, in lexicographic (D, D1) order.
    """
    if grid_steps < 2:
        raise DomainError(f"grid_steps must be at least 2, got {grid_steps}")
    step = 1.0 / (2 * grid_steps)
    return [(i * step, k * step) for i in range(grid_steps) for k in range(i + 1)]


def evaluate_point(
    mode: SweepMode, D: float, D1: float, oracle: SweepOracle = SweepOracle.PLUS
) -> LandscapeRow:
    fr = DcFractions.from_d1(D, D1)
    if oracle == SweepOracle.AUTO and fr.D0 >= fr.D1:
        fr = fr.swapped()
    probability, predicate = _EVALUATORS[mode]
    return LandscapeRow(D=D, D1=D1, P=probability(fr), in_class=predicate(fr))


def sweep_landscape(
    mode: SweepMode, grid_steps: int, oracle: SweepOracle = SweepOracle.PLUS
) -> list[LandscapeRow]:
    rows = [evaluate_point(mode, D, D1, oracle) for D, D1 in grid_points(grid_steps)]
    logger.debug(
        "landscape_swept",
        mode=mode.value,
        oracle=oracle.value,
        grid_steps=grid_steps,
        rows=len(rows),
    )
    return rows


def class_coverage(rows: list[LandscapeRow]) -> float:
    """Share of landscape rows inside the 2/3 class."""
    if not rows:
        raise DomainError("class coverage needs at least one row")
    return sum(row.in_class for row in rows) / len(rows)


def write_landscape_csv(rows: list[LandscapeRow], path: str | Path) -> Path:
    """Write rows to `path` through a temporary file and an atomic rename."""
    target = Path(path)
    directory = target.parent if str(target.parent) else Path(".")
    fd, tmp_name = tempfile.mkstemp(prefix=f".{target.name}.", suffix=".tmp", dir=directory)
    try:
        with os.fdopen(fd, "w", newline="", encoding="utf-8") as handle:
            writer = csv.DictWriter(handle, fieldnames=CSV_HEADER, lineterminator="\n")
            writer.writeheader()
            writer.writerows(row.as_csv() for row in rows)
        os.replace(tmp_name, target)
    except BaseException:
        Path(tmp_name).unlink(missing_ok=True)
        raise

    logger.info("landscape_written", path=str(target), rows=len(rows))
    return target
