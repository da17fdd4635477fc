import pytest

_LINES = []


@pytest.fixture
def record(capsys):
    """Print an acceptance line immediately and repeat it in the summary."""

    def emit(line):
        _LINES.append(line)
        with capsys.disabled():
            print("\n" + line, end="")

    return emit


def pytest_terminal_summary(terminalreporter):
    if _LINES:
        terminalreporter.section("acceptance criteria")
        for line in _LINES:
            terminalreporter.write_line(line)
