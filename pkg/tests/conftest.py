import os
import random
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

from dmtrees import corpus
from dmtrees.morse import validate

DATA = Path(__file__).parent / "data"
GOLDEN = Path(__file__).parent / "golden"

settings.register_profile(
    "default", max_examples=150, deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.register_profile("ci", max_examples=600, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

_acceptance_lines = {}


@pytest.fixture
def acceptance_report():
    """Record one PASS/FAIL line per acceptance criterion for the summary."""

    def record(number, passed, detail):
        _acceptance_lines[number] = f"criterion {number}: {'PASS' if passed else 'FAIL'} - {detail}"
        return passed

    return record


def pytest_terminal_summary(terminalreporter):
    if not _acceptance_lines:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_acceptance_lines):
        terminalreporter.write_line(_acceptance_lines[number])


@pytest.fixture
def data_dir():
    return DATA


@pytest.fixture
def worked_tree():
    return corpus.worked_example_tree()


@pytest.fixture
def worked_f():
    return validate(corpus.worked_example_tree(), corpus.worked_example_values())


@pytest.fixture
def rng():
    return random.Random(20261018)
