import numpy as np
import pytest

from convexcurves import verifier


@pytest.fixture(scope="session")
def full_corpus():
    """1000 random convex polygons, n cycling through 3..64, seeds 0..999."""
    return verifier.corpus(1000, 0)


@pytest.fixture(scope="session")
def small_corpus():
    return verifier.corpus(120, 500)


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


_ACCEPTANCE = pytest.StashKey[list]()


def pytest_configure(config):
    config.stash[_ACCEPTANCE] = []


@pytest.fixture
def verdict(request, capsys):
    """Print and record one ``ACnn PASS|FAIL: summary`` line, then assert it.

    ``known_gap`` names a documented, analysed shortfall: the line still
    reads FAIL but the test is reported as an expected failure.
    """

    def emit(number: int, ok: bool, summary: str, known_gap: str | None = None):
        line = f"AC{number:02d} {'PASS' if ok else 'FAIL'}: {summary}"
        if not ok and known_gap:
            line += f" [known gap: {known_gap}]"
        request.config.stash[_ACCEPTANCE].append(line)
        with capsys.disabled():
            print("\n" + line)
        if not ok and known_gap:
            pytest.xfail(known_gap)
        assert ok, line

    return emit


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = config.stash.get(_ACCEPTANCE, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines):
            terminalreporter.write_line(line)
