import json
from pathlib import Path

import numpy as np
import pytest

from mixspec.cli import main
from mixspec.grid import build_grid
from mixspec.measure import SignedMeasure


@pytest.fixture
def unit_grid():
    return build_grid([(0.0, 1.0)], 1 / 64)


@pytest.fixture
def split_grid():
    return build_grid([(-2.0, -1.0), (1.0, 2.0)], 1 / 32)


@pytest.fixture
def classical():
    return SignedMeasure([(1.0, 1.0)], [(0.0, 1.0)], 0.5)


@pytest.fixture
def rng():
    return np.random.default_rng(1234)


def _run_verify_all(out: Path) -> tuple[int, dict]:
    code = main(["verify", "--all", "--out", str(out)])
    reports = {}
    for p in sorted(out.glob("*.json")):
        if p.name != "summary.json":
            reports[p.stem] = json.loads(p.read_text())
    return code, reports


@pytest.fixture(scope="session")
def verify_all(tmp_path_factory):
    """One run of the shipped preset suite, shared by every test that reads it."""
    out = tmp_path_factory.mktemp("verify_all")
    code, reports = _run_verify_all(out)
    return {"code": code, "reports": reports, "out": out}


def evidence(report: dict, label: str) -> float:
    for k, v in report["evidence"]:
        if k == label:
            return v
    raise KeyError(label)
