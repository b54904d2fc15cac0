import pytest
from hypothesis import settings

from quivnoeth import parse_quiver

from corpus import CORPUS, corpus_quiver

settings.register_profile("default", deadline=None, print_blob=True)
settings.load_profile("default")

@pytest.fixture(scope="session")
def corpus_dir():
    return CORPUS


@pytest.fixture(scope="session")
def jordan():
    return corpus_quiver("jordan")


@pytest.fixture(scope="session")
def a2():
    return corpus_quiver("a2")


@pytest.fixture(scope="session")
def kronecker():
    return corpus_quiver("kronecker")


@pytest.fixture(scope="session")
def two_loops():
    return corpus_quiver("two_loops")


@pytest.fixture(scope="session")
def cycle_branch():
    return corpus_quiver("cycle_branch")


@pytest.fixture(scope="session")
def ray_simple():
    return corpus_quiver("ray_simple")


@pytest.fixture(scope="session")
def branch_loop():
    return corpus_quiver("branch_loop")


@pytest.fixture(scope="session")
def ray_at_x():
    return parse_quiver("vertex x\nray r at x\n")


ACCEPTANCE_LINES: dict[int, str] = {}


@pytest.fixture
def report_criterion():
    """Record and print the single pass/fail line of an acceptance criterion."""

    def record(number: int, title: str, ok: bool, detail: str) -> bool:
        line = f"criterion {number:2d} {'PASS' if ok else 'FAIL'}  {title}: {detail}"
        ACCEPTANCE_LINES[number] = line
        print(line)
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for n in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(ACCEPTANCE_LINES[n])
