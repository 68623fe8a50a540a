import os
import sys
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

from graphoid import load

settings.register_profile(
    "default", deadline=None, max_examples=40,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.data_too_large],
)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

CORPUS_DIR = Path(__file__).resolve().parent.parent / "corpus"


def corpus_diagrams():
    return [load(p) for p in sorted(CORPUS_DIR.glob("*.gpd"))]


@pytest.fixture(scope="session")
def corpus():
    return corpus_diagrams()


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
