import pytest
from hypothesis import settings

from spectralops.rational import Q

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

_ACCEPTANCE = pytest.StashKey[list]()


@pytest.fixture
def q():
    return Q


@pytest.fixture
def acceptance(request):
    """Record one PASS/FAIL line per acceptance criterion and assert on it."""
    lines = request.config.stash.setdefault(_ACCEPTANCE, [])

    def record(number: int, title: str, ok: bool, note: str = "") -> None:
        line = f"criterion {number:2d}: {'PASS' if ok else 'FAIL'}  {title}"
        if note:
            line += f"  [{note}]"
        lines.append(line)
        print(line)
        assert ok, line

    return record


def pytest_terminal_summary(terminalreporter, config):
    lines = config.stash.get(_ACCEPTANCE, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines):
            terminalreporter.write_line(line)
