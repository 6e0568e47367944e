import numpy as np
import pytest
from hypothesis import strategies as st

finite = st.floats(min_value=-10.0, max_value=10.0, allow_nan=False, allow_infinity=False)
angles = st.floats(min_value=-2 * np.pi, max_value=2 * np.pi, allow_nan=False)


@st.composite
def unit_vectors(draw):
    v = np.array([draw(finite), draw(finite), draw(finite)])
    n = np.linalg.norm(v)
    if n < 1e-3:
        return np.array([0.0, 0.0, 1.0])
    return v / n


@st.composite
def momenta(draw, p_min=0.01, p_max=10.0):
    direction = draw(unit_vectors())
    magnitude = draw(st.floats(min_value=p_min, max_value=p_max))
    mass = draw(st.floats(min_value=0.1, max_value=10.0))
    return magnitude * direction, mass


@st.composite
def states2(draw):
    parts = [draw(finite) for _ in range(4)]
    v = np.array([parts[0] + 1j * parts[1], parts[2] + 1j * parts[3]])
    n = np.linalg.norm(v)
    if n < 1e-3:
        return np.array([1.0 + 0j, 0.0])
    return v / n


@pytest.fixture
def rng():
    return np.random.default_rng(20261019)


def random_hermitian(rng, n):
    a = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    return a + a.conj().T


def random_unit(rng):
    v = rng.normal(size=3)
    return v / np.linalg.norm(v)


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
