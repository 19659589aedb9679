import pytest

_CRITERIA: list[str] = []


@pytest.fixture
def criterion():
    """Record one acceptance line; the summary prints them all."""

    def record(name: str, ok: bool, detail: str = ""):
        _CRITERIA.append(f"{'PASS' if ok else 'FAIL'}  {name}" + (f"  ({detail})" if detail else ""))
        assert ok, f"{name}: {detail}"

    return record


def pytest_terminal_summary(terminalreporter):
    if _CRITERIA:
        terminalreporter.section("acceptance criteria")
        for line in _CRITERIA:
            terminalreporter.write_line(line)
