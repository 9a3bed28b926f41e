import pytest

_CRITERIA: dict = {}


@pytest.fixture
def criterion():
    """Record one summary line per acceptance criterion; printed after the run."""
    def record(number: int, passed: bool, detail: str) -> None:
        _CRITERIA[number] = (passed, detail)
    return record


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(_CRITERIA):
        passed, detail = _CRITERIA[k]
        terminalreporter.write_line(f"criterion {k}: {'PASS' if passed else 'FAIL'}  {detail}")
