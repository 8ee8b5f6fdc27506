import numpy as np
import pytest
from hypothesis import strategies as st

from qperceptron import StateVector, make_qubit

_RESULTS = []


@pytest.fixture
def criterion():
    """Record one acceptance line; printed in the terminal summary."""

    def record(label, passed, detail=""):
        _RESULTS.append((label, passed, detail))
        return passed

    return record


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for label, passed, detail in _RESULTS:
        terminalreporter.write_line(f"{'PASS' if passed else 'FAIL'}  {label}  {detail}")


finite = st.floats(-10, 10, allow_nan=False, allow_infinity=False)
complexes = st.builds(complex, finite, finite)
states = st.builds(StateVector, complexes, complexes)
nonzero_states = states.filter(lambda v: v.norm_sq() > 1e-6)
qubits = nonzero_states.map(lambda v: make_qubit(v.c0, v.c1))
matrices = st.lists(complexes, min_size=4, max_size=4).map(lambda v: np.array(v).reshape(2, 2))


def random_qubits(rng, n):
    z = rng.normal(size=(n, 2)) + 1j * rng.normal(size=(n, 2))
    return [make_qubit(*row) for row in z]
