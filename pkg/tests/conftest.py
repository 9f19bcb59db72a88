import pytest

from cutshuffle.perm_core import ENUMERATION_CAP, set_enumeration_cap


@pytest.fixture
def small_cap():
    old = set_enumeration_cap(4)
    yield 4
    set_enumeration_cap(old)


@pytest.fixture(autouse=True)
def _restore_cap():
    yield
    set_enumeration_cap(ENUMERATION_CAP)


_VERDICTS: list[str] = []


@pytest.fixture
def verdict():
    """Record a one-line PASS/FAIL verdict, echoed in the terminal summary."""
    def record(number: int, title: str, ok: bool, detail: str = "") -> bool:
        line = f"{'PASS' if ok else 'FAIL'} criterion {number}: {title}"
        if detail:
            line += f" ({detail})"
        print(line)
        _VERDICTS.append(line)
        return ok
    return record


def pytest_terminal_summary(terminalreporter):
    if _VERDICTS:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_VERDICTS, key=lambda s: int(s.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)
