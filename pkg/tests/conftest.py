"""Pytest configuration and fixtures."""

import os

import numpy as np
import pytest

# Set testing environment BEFORE any other imports
os.environ.setdefault("APP_ENV", "testing")
os.environ.setdefault("LOG_LEVEL", "WARNING")

from src.boolfn.models import AffineSpec, PartialFunction, mask, truth_table  # noqa: E402
from src.log_config import configure_logging  # noqa: E402

configure_logging()


@pytest.fixture(autouse=True)
def _rebind_logging():
    """Re-bind structlog after each test: CLI tests reconfigure it onto a
    per-test capture stream that is closed once the test finishes."""
    yield
    configure_logging()


@pytest.fixture
def rng() -> np.random.Generator:
    """Seeded generator for instance construction."""
    return np.random.default_rng(20240607)


@pytest.fixture
def xor_file(tmp_path):
    path = tmp_path / "xor.bfn"
    path.write_text("n=2\n0110\n")
    return path


@pytest.fixture
def xnor_file(tmp_path):
    path = tmp_path / "xnor.bfn"
    path.write_text("# XOR complemented\nn=2\n1001\n")
    return path


@pytest.fixture
def masked_instance():
    """Factory: affine spec with the given input indices hidden."""

    def _make(C: str, affinity: int = 0, dc: tuple[int, ...] = ()) -> tuple[PartialFunction, AffineSpec]:
        spec = AffineSpec.from_string(C, affinity)
        return mask(truth_table(spec), dc), spec

    return _make
