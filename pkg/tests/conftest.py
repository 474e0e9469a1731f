import numpy as np
import pytest

from gaussbeta.mn_criteria import ProblemConfig


@pytest.fixture
def rng():
    return np.random.default_rng(20261016)


@pytest.fixture
def even_b():
    return ProblemConfig(n=1, b0=1.0, delta=0.03, sigma=1.0, space="B", criterion="evenly-spaced")


@pytest.fixture
def scattered_b():
    return ProblemConfig(n=1, b0=1.0, delta=0.01, sigma=1.0, space="B", criterion="scattered")


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, ok, elapsed, budget in sorted(RESULTS):
        status = "PASS" if ok else "FAIL"
        terminalreporter.write_line(f"[{status}] {number:2d}. {title} ({elapsed:.2f}s / {budget:g}s)")
