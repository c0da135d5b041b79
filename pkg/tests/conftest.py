import numpy as np
import pytest

from copositive6.generator import Case13Variant, sample_main_regime
from copositive6.parrilo import counterexample_phi

_ACCEPTANCE_LINES = []


@pytest.fixture
def rng():
    return np.random.default_rng(20240601)


@pytest.fixture(scope="session")
def cx_phi():
    return counterexample_phi()


@pytest.fixture(scope="session")
def main_samples():
    """1000 main-regime angle vectors per variant, fixed seed."""
    rng = np.random.default_rng(7)
    return {v: sample_main_regime(rng, v, 1000) for v in Case13Variant}


@pytest.fixture
def acceptance_report():
    def report(criterion, ok, detail=""):
        line = f"[{'PASS' if ok else 'FAIL'}] {criterion}" + (f": {detail}" if detail else "")
        _ACCEPTANCE_LINES.append(line)
        print(line)
        return ok
    return report


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
