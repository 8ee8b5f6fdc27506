"""Realize 2x2 weight matrices with linear-optical elements.

A weight ``W`` is written as

    W = gain * exp(i*global_phase)
        * P(post_phases) @ BS(post_bs) @ P(mid_phases) @ diag(att)
        @ BS(pre_bs) @ P(pre_phases)

with ``P(a, b) = diag(e^{ia}, e^{ib})`` and ``BS(t) = [[cos t, -sin t],
[sin t, cos t]]``.  This is a singular-value factorization ``U S V^H``
where each unitary is split as phases-rotation-phases and the two inner
phase pairs are merged (they commute with the diagonal attenuation).

Canonical form: every phase pair has its first phase at 0 (common phases
move into ``global_phase``), beam-splitter angles lie in ``[0, pi/2]`` and
all phases in ``[0, 2*pi)``.  ``mid_phases[1]`` is zeroed when ``att[1]``
is zero since it then has no effect.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

TWO_PI = 2 * math.pi

# unitary entries this small are treated as exact zeros
_SNAP = 1e-14

FIELDS = (
    "gain",
    "global_phase",
    "pre_phase_0",
    "pre_phase_1",
    "pre_bs_angle",
    "att_0",
    "att_1",
    "mid_phase_0",
    "mid_phase_1",
    "post_bs_angle",
    "post_phase_0",
    "post_phase_1",
)


def _wrap(theta: float) -> float:
    theta = math.fmod(theta, TWO_PI)
    if theta < 0:
        theta += TWO_PI
    # tiny negatives wrap to exactly 2*pi in floating point
    if theta >= TWO_PI:
        theta = 0.0
    return theta


@dataclass(frozen=True)
class PhaseShifter:
    theta: float

    def __post_init__(self):
        if not math.isfinite(self.theta):
            raise ValueError("phase must be finite")
        object.__setattr__(self, "theta", _wrap(float(self.theta)))

    @property
    def factor(self) -> complex:
        return cmath.exp(1j * self.theta)


@dataclass(frozen=True)
class BeamSplitter:
    angle: float

    def __post_init__(self):
        if not 0.0 <= self.angle <= math.pi / 2:
            raise ValueError(f"beam-splitter angle must lie in [0, pi/2], got {self.angle}")

    def matrix(self) -> np.ndarray:
        c, s = math.cos(self.angle), math.sin(self.angle)
        return np.array([[c, -s], [s, c]], dtype=complex)


def phase_matrix(a: float, b: float) -> np.ndarray:
    return np.diag([cmath.exp(1j * a), cmath.exp(1j * b)])


@dataclass(frozen=True)
class OpticalCircuit:
    gain: float
    pre_phases: tuple[float, float]
    pre_bs: BeamSplitter
    attenuations: tuple[float, float]
    mid_phases: tuple[float, float]
    post_bs: BeamSplitter
    post_phases: tuple[float, float]
    global_phase: float

    def __post_init__(self):
        if not self.gain >= 0:
            raise ValueError(f"gain must be >= 0, got {self.gain}")
        if not all(0.0 <= a <= 1.0 for a in self.attenuations):
            raise ValueError(f"attenuations must lie in [0, 1], got {self.attenuations}")
        for name in ("pre_phases", "mid_phases", "post_phases"):
            a, b = getattr(self, name)
            object.__setattr__(self, name, (_wrap(a), _wrap(b)))
        object.__setattr__(self, "global_phase", _wrap(self.global_phase))

    def to_record(self) -> dict[str, float]:
        """Flat record keyed by :data:`FIELDS`."""
        return {
            "gain": self.gain,
            "global_phase": self.global_phase,
            "pre_phase_0": self.pre_phases[0],
            "pre_phase_1": self.pre_phases[1],
            "pre_bs_angle": self.pre_bs.angle,
            "att_0": self.attenuations[0],
            "att_1": self.attenuations[1],
            "mid_phase_0": self.mid_phases[0],
            "mid_phase_1": self.mid_phases[1],
            "post_bs_angle": self.post_bs.angle,
            "post_phase_0": self.post_phases[0],
            "post_phase_1": self.post_phases[1],
        }

    @classmethod
    def from_record(cls, rec: dict[str, float]) -> OpticalCircuit:
        return cls(
            gain=float(rec["gain"]),
            pre_phases=(float(rec["pre_phase_0"]), float(rec["pre_phase_1"])),
            pre_bs=BeamSplitter(float(rec["pre_bs_angle"])),
            attenuations=(float(rec["att_0"]), float(rec["att_1"])),
            mid_phases=(float(rec["mid_phase_0"]), float(rec["mid_phase_1"])),
            post_bs=BeamSplitter(float(rec["post_bs_angle"])),
            post_phases=(float(rec["post_phase_0"]), float(rec["post_phase_1"])),
            global_phase=float(rec["global_phase"]),
        )


ZERO_CIRCUIT = OpticalCircuit(
    gain=0.0,
    pre_phases=(0.0, 0.0),
    pre_bs=BeamSplitter(0.0),
    attenuations=(1.0, 1.0),
    mid_phases=(0.0, 0.0),
    post_bs=BeamSplitter(0.0),
    post_phases=(0.0, 0.0),
    global_phase=0.0,
)


def singular_values(w) -> tuple[float, float]:
    """Closed-form singular values of a 2x2 matrix, largest first."""
    w = np.asarray(w, dtype=complex)
    h = w.conj().T @ w
    p, r = h[0, 0].real, h[1, 1].real
    det = abs(w[0, 0] * w[1, 1] - w[0, 1] * w[1, 0])
    # largest eigenvalue of w^H w; the smaller one follows from det(w^H w)
    s1 = math.sqrt((p + r) / 2 + math.hypot((p - r) / 2, abs(h[0, 1])))
    if s1 == 0.0:
        return 0.0, 0.0
    return s1, min(det / s1, s1)


def _split_unitary(u: np.ndarray) -> tuple[float, float, float, float]:
    """Write unitary ``u`` as ``e^{ig} P(0, b) BS(t) P(0, c)``; returns (g, b, t, c)."""
    a00, a10 = abs(u[0, 0]), abs(u[1, 0])
    if a10 <= _SNAP:
        # diagonal: only b + c is defined, keep b = 0
        g = cmath.phase(u[0, 0])
        return g, 0.0, 0.0, cmath.phase(u[1, 1]) - g
    if a00 <= _SNAP:
        # anti-diagonal: only g + b is defined, keep b = 0
        g = cmath.phase(u[1, 0])
        return g, 0.0, math.pi / 2, cmath.phase(-u[0, 1]) - g
    g = cmath.phase(u[0, 0])
    return g, cmath.phase(u[1, 0]) - g, math.atan2(a10, a00), cmath.phase(-u[0, 1]) - g


def _svd(w: np.ndarray, s1: float):
    """Return ``u, s2, vh`` with ``w = u @ diag(s1, s2) @ vh`` and s2 >= 0."""
    h = w.conj().T @ w
    p, r, q = h[0, 0].real, h[1, 1].real, h[0, 1]
    psi = cmath.phase(q) if q != 0 else 0.0
    phi = 0.5 * math.atan2(2 * abs(q), p - r)
    c, s = math.cos(phi), math.sin(phi)
    # columns are eigenvectors of h for the larger / smaller eigenvalue
    v = np.array([[c, -s], [s * cmath.exp(-1j * psi), c * cmath.exp(-1j * psi)]])
    u0 = w @ v[:, 0] / s1
    u0 = u0 / np.linalg.norm(u0)
    perp = np.array([-np.conj(u0[1]), np.conj(u0[0])])
    z = np.vdot(perp, w @ v[:, 1])
    s2 = abs(z)
    u1 = perp * (z / s2) if s2 > 0 else perp
    u = np.column_stack([u0, u1])
    return u, s2, v.conj().T


def decompose_weight(w) -> OpticalCircuit:
    """Factor a 2x2 complex matrix into an :class:`OpticalCircuit`."""
    w = np.asarray(w, dtype=complex)
    if w.shape != (2, 2) or not np.all(np.isfinite(w)):
        raise ValueError("weight must be a finite 2x2 matrix")
    s1, _ = singular_values(w)
    if s1 == 0.0:
        return ZERO_CIRCUIT
    u, s2, vh = _svd(w, s1)
    gu, bu, tu, cu = _split_unitary(u)
    gv, bv, tv, cv = _split_unitary(vh)
    att1 = min(s2 / s1, 1.0)
    mid = cu + bv if att1 > 0 else 0.0
    return OpticalCircuit(
        gain=s1,
        pre_phases=(0.0, cv),
        pre_bs=BeamSplitter(tv),
        attenuations=(1.0, float(att1)),
        mid_phases=(0.0, mid),
        post_bs=BeamSplitter(tu),
        post_phases=(0.0, bu),
        global_phase=gu + gv,
    )


def recompose(c: OpticalCircuit) -> np.ndarray:
    """Transfer matrix of the circuit, elements multiplied right to left."""
    m = (
        phase_matrix(*c.post_phases)
        @ c.post_bs.matrix()
        @ phase_matrix(*c.mid_phases)
        @ np.diag(np.asarray(c.attenuations, dtype=complex))
        @ c.pre_bs.matrix()
        @ phase_matrix(*c.pre_phases)
    )
    return c.gain * cmath.exp(1j * c.global_phase) * m


def unitarity_deviation(w) -> float:
    """Frobenius norm of ``W^H W - I``; zero exactly for lossless optics."""
    w = np.asarray(w, dtype=complex)
    return float(np.linalg.norm(w.conj().T @ w - np.eye(2)))


def is_passive(c: OpticalCircuit, tol: float = 1e-12) -> bool:
    """True when the circuit needs no amplification (``gain <= 1 + tol``)."""
    if tol < 0:
        raise ValueError("tol must be >= 0")
    return c.gain <= 1.0 + tol
