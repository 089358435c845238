import sys

import pytest
from hypothesis import settings, strategies as st

from schur0.core import OrbitMatrix

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@st.composite
def orbit_matrices(draw, n=None, r=None, max_n=3, max_r=6):
    """A random element of Xi(n, r) built from a random weak composition of r."""
    n = draw(st.integers(1, max_n)) if n is None else n
    r = draw(st.integers(0, max_r)) if r is None else r
    cuts = sorted(draw(st.lists(st.integers(0, r), min_size=n * n - 1, max_size=n * n - 1)))
    bounds = [0] + cuts + [r]
    return OrbitMatrix(bounds[k + 1] - bounds[k] for k in range(n * n))


@st.composite
def matrix_pairs(draw, max_n=3, max_r=5):
    n = draw(st.integers(1, max_n))
    r = draw(st.integers(0, max_r))
    return draw(orbit_matrices(n=n, r=r)), draw(orbit_matrices(n=n, r=r))


@pytest.fixture
def worked_example():
    return OrbitMatrix.from_rows([[0, 1, 2], [3, 0, 4], [5, 6, 0]])


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    if module is None or not module.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(module.RESULTS):
        terminalreporter.write_line(module.RESULTS[number])
