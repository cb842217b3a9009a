import pytest

from blattice.config import set_settings


@pytest.fixture(autouse=True)
def _default_settings(monkeypatch):
    monkeypatch.delenv("BLATTICE_MAX_N", raising=False)
    set_settings(None)
    yield
    set_settings(None)


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
