from pathlib import Path

import pytest

DATA = Path(__file__).resolve().parents[1] / "src" / "qshrb" / "data"


@pytest.fixture
def data():
    return DATA


def pytest_terminal_summary(terminalreporter):
    from acceptance_registry import RESULTS

    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(RESULTS):
        ok, text = RESULTS[n]
        terminalreporter.write_line(f"criterion {n:2d}: {'PASS' if ok else 'FAIL'}  {text}")
