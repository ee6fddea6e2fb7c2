import pytest

from positroids import Positroid, RationalMatrix

# filled by the acceptance tests, echoed after the run so the per-criterion
# verdicts survive pytest's output capture
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def acceptance_log():
    return ACCEPTANCE_LINES


@pytest.fixture(scope="session")
def ref_positroid():
    """The 14-element fixed-point-free reference positroid."""
    return Positroid.from_oneline((2, 8, 6, 7, 9, 4, 5, 14, 13, 3, 10, 11, 1, 12))


@pytest.fixture(scope="session")
def demo_matrix():
    return RationalMatrix.from_rows(((1, 0, -3, -1), (0, 1, 4, 0)))
