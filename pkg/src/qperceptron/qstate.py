"""Single-qubit state algebra.

States are pairs of Python complex amplitudes over the basis |0>, |1>.
Global phase is kept: ``StateVector(1, 0)`` and ``StateVector(1j, 0)`` are
different values.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import UnmeasurableStateError, UnnormalizableError

ATOL = 1e-12


@dataclass(frozen=True)
class StateVector:
    """Unnormalized complex 2-vector."""

    c0: complex
    c1: complex

    def __post_init__(self):
        c0, c1 = complex(self.c0), complex(self.c1)
        if not all(math.isfinite(v) for v in (c0.real, c0.imag, c1.real, c1.imag)):
            raise ValueError(f"non-finite amplitude in ({c0}, {c1})")
        object.__setattr__(self, "c0", c0)
        object.__setattr__(self, "c1", c1)

    @classmethod
    def from_array(cls, a) -> StateVector:
        a = np.asarray(a).reshape(2)
        return cls(complex(a[0]), complex(a[1]))

    def __array__(self, dtype=None, copy=None):
        return np.array([self.c0, self.c1], dtype=dtype or complex)

    def __iter__(self):
        yield self.c0
        yield self.c1

    def __getitem__(self, i):
        return (self.c0, self.c1)[i]

    def __add__(self, other):
        return StateVector(self.c0 + other.c0, self.c1 + other.c1)

    def __sub__(self, other):
        return StateVector(self.c0 - other.c0, self.c1 - other.c1)

    def __mul__(self, k):
        return StateVector(self.c0 * k, self.c1 * k)

    __rmul__ = __mul__

    def norm_sq(self) -> float:
        return abs(self.c0) ** 2 + abs(self.c1) ** 2

    def norm(self) -> float:
        return math.hypot(abs(self.c0), abs(self.c1))


@dataclass(frozen=True)
class Qubit(StateVector):
    """Unit-norm state ``a0|0> + a1|1>``.

    Build through :func:`make_qubit` unless the amplitudes are already
    normalized; the constructor only checks the norm.
    """

    def __post_init__(self):
        super().__post_init__()
        if abs(self.norm_sq() - 1.0) > ATOL:
            raise UnnormalizableError(
                f"qubit amplitudes ({self.c0}, {self.c1}) have norm^2 {self.norm_sq()!r}"
            )

    @property
    def a0(self) -> complex:
        return self.c0

    @property
    def a1(self) -> complex:
        return self.c1


KET0 = Qubit(1, 0)
KET1 = Qubit(0, 1)


def make_qubit(a0: complex, a1: complex) -> Qubit:
    """Rescale ``(a0, a1)`` to unit norm."""
    a0, a1 = complex(a0), complex(a1)
    nrm = math.hypot(abs(a0), abs(a1))
    if nrm == 0.0 or not math.isfinite(nrm):
        raise UnnormalizableError(f"unnormalizable amplitude pair ({a0}, {a1})")
    if nrm == 1.0:
        return Qubit(a0, a1)
    return Qubit(a0 / nrm, a1 / nrm)


def inner(bra: StateVector, ket: StateVector) -> complex:
    """<bra|ket>, conjugate-linear in ``bra``."""
    return bra.c0.conjugate() * ket.c0 + bra.c1.conjugate() * ket.c1


def outer(ket: StateVector, bra: StateVector) -> np.ndarray:
    """|ket><bra| as a 2x2 complex array."""
    return np.array(
        [
            [ket.c0 * bra.c0.conjugate(), ket.c0 * bra.c1.conjugate()],
            [ket.c1 * bra.c0.conjugate(), ket.c1 * bra.c1.conjugate()],
        ]
    )


def apply(m, v: StateVector) -> StateVector:
    """Matrix-vector product returning a StateVector."""
    m = np.asarray(m)
    return StateVector(
        complex(m[0, 0] * v.c0 + m[0, 1] * v.c1),
        complex(m[1, 0] * v.c0 + m[1, 1] * v.c1),
    )


def born_probs(y: StateVector) -> tuple[float, float]:
    """Outcome probabilities of measuring ``y`` in the computational basis."""
    p0, p1 = abs(y.c0) ** 2, abs(y.c1) ** 2
    total = p0 + p1
    if total == 0.0:
        raise UnmeasurableStateError("unmeasurable state: zero vector")
    return p0 / total, p1 / total


def normalized(y: StateVector) -> Qubit:
    """Project an unnormalized output back onto the qubit sphere."""
    if isinstance(y, Qubit):
        return y
    try:
        return make_qubit(y.c0, y.c1)
    except UnnormalizableError as exc:
        raise UnmeasurableStateError("unmeasurable state: zero vector") from exc
