import contextlib
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

GOLDEN_DIR = Path(__file__).parent / "golden"

_acceptance_lines = []


@pytest.fixture
def criterion():
    """Context manager that records one PASS/FAIL line per acceptance criterion."""

    @contextlib.contextmanager
    def _criterion(number, title):
        try:
            yield
        except BaseException:
            _acceptance_lines.append(f"[FAIL] criterion {number:>2}: {title}")
            raise
        _acceptance_lines.append(f"[PASS] criterion {number:>2}: {title}")

    return _criterion


def pytest_terminal_summary(terminalreporter):
    if _acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_acceptance_lines, key=lambda s: int(s.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)
