import sys

import numpy as np
import pytest

from polychora.quat import UnitQuaternion


def rand_quat(rng) -> UnitQuaternion:
    """Uniform on S³: normalized 4D Gaussian."""
    v = rng.normal(size=4)
    return UnitQuaternion(*(v / np.linalg.norm(v)))


@pytest.fixture
def rng():
    return np.random.default_rng(20260819)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    # re-emit the per-criterion scorecard, which capture otherwise swallows
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.line(line)
