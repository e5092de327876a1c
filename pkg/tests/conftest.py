from __future__ import annotations

import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from arlab.graph_core import enumerate_graphs  # noqa: E402

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(scope="session")
def census8():
    """One graph per isomorphism class on at most 8 vertices."""
    return enumerate_graphs(8)


@pytest.fixture(scope="session")
def census7(census8):
    return [g for g in census8 if g.n <= 7]


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
