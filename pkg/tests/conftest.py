from pathlib import Path

import pytest

from convexcol import io

FIXTURES = Path(__file__).parent / "fixtures"


def fixture_text(name: str) -> str:
    return (FIXTURES / name).read_text(encoding="utf-8")


@pytest.fixture
def worked():
    return io.load_instance(fixture_text("worked_example.json"))


@pytest.fixture
def corner_graph():
    return io.load_graph(fixture_text("corner_graph.json"))


@pytest.fixture
def claw_graph():
    return io.load_graph(fixture_text("subd_k13_graph.json"))


@pytest.fixture
def graph9():
    return io.load_graph(fixture_text("graph9.json"))


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.summary_lines():
        terminalreporter.write_line(line)
