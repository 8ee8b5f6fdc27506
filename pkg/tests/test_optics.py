import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from qperceptron.optics import (
    FIELDS,
    ZERO_CIRCUIT,
    BeamSplitter,
    OpticalCircuit,
    PhaseShifter,
    decompose_weight,
    is_passive,
    phase_matrix,
    recompose,
    singular_values,
    unitarity_deviation,
)

from conftest import matrices
from oracles import spectral_norm

SWAP = np.array([[0, 1], [1, 0]])


def fro(a):
    return np.linalg.norm(np.asarray(a))


def test_identity_decomposition():
    c = decompose_weight(np.eye(2))
    assert c.gain == 1 and c.attenuations == (1, 1)
    rec = c.to_record()
    assert all(rec[k] == 0 for k in FIELDS if k not in ("gain", "att_0", "att_1"))


def test_swap_decomposition():
    c = decompose_weight(SWAP)
    assert c.gain == pytest.approx(1, abs=1e-12)
    assert c.attenuations == pytest.approx((1, 1), abs=1e-12)
    assert fro(recompose(c) - SWAP) < 1e-10


def test_diagonal_attenuation():
    w = np.diag([0.5, 0.25])
    c = decompose_weight(w)
    expected = sorted(np.sqrt(np.linalg.eigvalsh(w.T @ w)), reverse=True)
    assert c.gain == pytest.approx(expected[0], abs=1e-12)
    assert c.attenuations == pytest.approx((1, expected[1] / expected[0]), abs=1e-12)
    assert c.gain == pytest.approx(0.5) and c.attenuations[1] == pytest.approx(0.5)


def test_zero_matrix():
    c = decompose_weight(np.zeros((2, 2)))
    assert c == ZERO_CIRCUIT
    assert np.array_equal(recompose(c), np.zeros((2, 2)))


def test_identity_circuit_recomposes_to_identity():
    c = OpticalCircuit(1.0, (0, 0), BeamSplitter(0), (1, 1), (0, 0), BeamSplitter(0), (0, 0), 0.0)
    assert np.array_equal(recompose(c), np.eye(2))


def test_recompose_order():
    c = OpticalCircuit(
        2.0, (0.1, 0.2), BeamSplitter(0.3), (1.0, 0.5), (0.0, 0.4), BeamSplitter(0.7), (0.5, 0.6), 0.8
    )
    bs = lambda t: np.array([[math.cos(t), -math.sin(t)], [math.sin(t), math.cos(t)]])
    expected = (
        2.0
        * np.exp(0.8j)
        * phase_matrix(0.5, 0.6)
        @ bs(0.7)
        @ phase_matrix(0.0, 0.4)
        @ np.diag([1.0, 0.5])
        @ bs(0.3)
        @ phase_matrix(0.1, 0.2)
    )
    assert fro(recompose(c) - expected) < 1e-14


def test_rank_one_matrices():
    for w in ([[0, 0], [1, 0]], [[1, 1j], [2, 2j]]):
        c = decompose_weight(w)
        assert c.attenuations[1] == pytest.approx(0, abs=1e-12)
        assert fro(recompose(c) - np.asarray(w)) < 1e-10


def test_near_degenerate_singular_values():
    rng = np.random.default_rng(0)
    for _ in range(200):
        q, _ = np.linalg.qr(rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2)))
        w = 3.0 * q + 1e-9 * rng.normal(size=(2, 2))
        assert fro(recompose(decompose_weight(w)) - w) < 1e-10


def test_canonical_ranges():
    rng = np.random.default_rng(1)
    for _ in range(200):
        c = decompose_weight(rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2)))
        assert max(c.attenuations) == 1
        assert c.pre_phases[0] == c.mid_phases[0] == c.post_phases[0] == 0
        for ang in (c.pre_bs.angle, c.post_bs.angle):
            assert 0 <= ang <= math.pi / 2
        rec = c.to_record()
        for k in FIELDS:
            if "phase" in k:
                assert 0 <= rec[k] < 2 * math.pi


def test_record_round_trip():
    c = decompose_weight([[0.3, 0.1j], [-0.2, 0.7 + 0.1j]])
    assert OpticalCircuit.from_record(c.to_record()) == c
    assert list(c.to_record()) == list(FIELDS)


def test_phase_shifter_wraps():
    assert PhaseShifter(-0.5).theta == pytest.approx(2 * math.pi - 0.5)
    assert PhaseShifter(-1e-18).theta == 0.0


def test_beam_splitter_range():
    with pytest.raises(ValueError):
        BeamSplitter(2.0)
    m = BeamSplitter(0.4).matrix()
    assert fro(m.T @ m - np.eye(2)) < 1e-15


def test_circuit_validation():
    with pytest.raises(ValueError):
        OpticalCircuit(-1, (0, 0), BeamSplitter(0), (1, 1), (0, 0), BeamSplitter(0), (0, 0), 0)
    with pytest.raises(ValueError):
        OpticalCircuit(1, (0, 0), BeamSplitter(0), (1, 1.5), (0, 0), BeamSplitter(0), (0, 0), 0)


@pytest.mark.parametrize("w, expected", [(np.eye(2), 0.0), (SWAP, 0.0), (0.5 * np.eye(2), math.sqrt(2 * 0.75**2))])
def test_unitarity_deviation(w, expected):
    assert unitarity_deviation(w) == pytest.approx(expected, abs=1e-12)


def test_unitarity_deviation_oracle_value():
    assert unitarity_deviation(0.5 * np.eye(2)) == pytest.approx(1.0606601717798212, abs=1e-15)


def test_is_passive():
    assert is_passive(decompose_weight(np.eye(2)))
    assert not is_passive(decompose_weight(2 * np.eye(2)))
    assert is_passive(decompose_weight([[0, 0], [1, 0]]))
    assert decompose_weight([[0, 0], [1, 0]]).gain == pytest.approx(1.0, abs=1e-12)
    with pytest.raises(ValueError):
        is_passive(ZERO_CIRCUIT, -1)


@given(matrices)
def test_round_trip_property(w):
    c = decompose_weight(w)
    scale = 1 + fro(w)
    assert fro(recompose(c) - w) < 1e-10 * scale
    assert c.gain == pytest.approx(spectral_norm(w), abs=1e-10 * scale)


@given(matrices)
def test_singular_values_oracle(w):
    s1, s2 = singular_values(w)
    ref = np.sqrt(np.clip(np.linalg.eigvalsh(w.conj().T @ w), 0, None))[::-1]
    scale = 1 + fro(w)
    assert s1 == pytest.approx(ref[0], abs=1e-10 * scale)
    assert s2 == pytest.approx(ref[1], abs=1e-7 * scale)


def test_unit_gain_circuits_are_unitary():
    rng = np.random.default_rng(2)
    for _ in range(200):
        a, b, c, d, e, f, g = rng.uniform(0, 2 * math.pi, size=7)
        t1, t2 = rng.uniform(0, math.pi / 2, size=2)
        circ = OpticalCircuit(1.0, (a, b), BeamSplitter(t1), (1, 1), (c, d), BeamSplitter(t2), (e, f), g)
        assert unitarity_deviation(recompose(circ)) < 1e-12


@given(matrices, st.integers(0, 2**32 - 1))
def test_unitarity_deviation_invariant_under_optical_unitaries(w, seed):
    rng = np.random.default_rng(seed)
    a, b, c, d = rng.uniform(0, 2 * math.pi, size=4)
    left = phase_matrix(a, b) @ BeamSplitter(rng.uniform(0, math.pi / 2)).matrix()
    right = BeamSplitter(rng.uniform(0, math.pi / 2)).matrix() @ phase_matrix(c, d)
    scale = 1 + fro(w) ** 2
    assert unitarity_deviation(left @ w @ right) == pytest.approx(unitarity_deviation(w), abs=1e-12 * scale)
