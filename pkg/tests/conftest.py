from fractions import Fraction

import pytest
from hypothesis import strategies as st

from e9paths.lattice import FUNDAMENTAL_WEIGHTS, SIMPLE_ROOTS, RationalVector10
from e9paths.littelmann import generate_basis_truncated

_ACCEPTANCE = []


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(num, text): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is not None and rep.when == "call":
        num, text = marker.args
        _ACCEPTANCE.append((num, "PASS" if rep.passed else "FAIL", text))


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for num, status, text in sorted(_ACCEPTANCE):
        terminalreporter.write_line(f"[{status}] criterion {num:2d}: {text}")


@pytest.fixture(scope="session")
def basis3():
    return generate_basis_truncated(3)


@pytest.fixture(scope="session")
def basis2():
    return generate_basis_truncated(2)


half_integers = st.integers(-12, 12).map(lambda n: Fraction(n, 2))
vectors = st.lists(half_integers, min_size=10, max_size=10).map(RationalVector10)
rationals = st.fractions(min_value=-5, max_value=5, max_denominator=7)

# integer combinations of fundamental weights and simple roots: the span where k is integral
lattice_vectors = st.lists(st.integers(-4, 4), min_size=18, max_size=18).map(
    lambda cs: sum(
        (w * c for w, c in zip(FUNDAMENTAL_WEIGHTS + SIMPLE_ROOTS, cs)),
        RationalVector10.zero(),
    )
)
