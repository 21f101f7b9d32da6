from __future__ import annotations

import random
import sys
from pathlib import Path

import pytest
from hypothesis import settings, strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from unavoidable.catalog import rp2_6  # noqa: E402
from unavoidable.complex import SimplicialComplex  # noqa: E402

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@pytest.fixture
def rp2():
    return rp2_6()


def random_complex(rng: random.Random, n: int, max_facets: int = 6) -> SimplicialComplex:
    k = rng.randint(1, max_facets)
    return SimplicialComplex.from_facets(n, [rng.randrange(1, 1 << n) for _ in range(k)])


@st.composite
def complexes(draw, min_n: int = 1, max_n: int = 7, max_facets: int = 6):
    n = draw(st.integers(min_n, max_n))
    facets = draw(st.lists(st.integers(0, (1 << n) - 1), min_size=0, max_size=max_facets))
    return SimplicialComplex.from_facets(n, facets)


# -- acceptance reporting -----------------------------------------------------------

_CRITERIA = pytest.StashKey[dict]()


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(label): acceptance criterion, reported in the summary")
    config.stash[_CRITERIA] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None or not (report.when == "call" or report.failed or report.skipped):
        return
    status = "SKIPPED" if report.skipped else "PASS" if report.passed else "FAIL"
    item.config.stash[_CRITERIA][mark.args[0]] = (status, report.duration)


def pytest_terminal_summary(terminalreporter, config):
    results = config.stash.get(_CRITERIA, {})
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for label, (status, seconds) in results.items():
        terminalreporter.write_line(f"{status:<7} {label} ({seconds:.1f}s)")
