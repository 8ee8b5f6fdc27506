"""Quantum perceptron with matrix-valued weights.

The output for inputs ``x_1..x_n`` is ``F @ sum_j W_j x_j`` where each
``W_j`` is an arbitrary (not necessarily unitary) 2x2 complex matrix and
``F`` defaults to the identity.  Training uses the outer-product rule

    W_j <- W_j + eta * (d - y) <x_j|

which, for identity ``F`` and fixed inputs, contracts the squared residual
by exactly ``(1 - eta * S)**2`` per step with ``S = sum_j <x_j|x_j>``.

Weights are held as ``np.clongdouble``.  On x86-64 that is 80-bit extended
precision, which keeps the residual ``d - y`` accurate to ~1e-19 absolute so
the per-step contraction ratio can be checked at 1e-9 relative well past
the point where a float64 residual has lost most of its digits.
"""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from typing import NamedTuple, Optional, Sequence

import numpy as np

from .errors import ArityError, OutputOperatorError, StepSizeError, WiringError
from .qstate import Qubit, StateVector, normalized

logger = logging.getLogger(__name__)

DTYPE = np.clongdouble

# measured ratios are not recorded when the previous squared error is below this
RATIO_FLOOR = 1e-20


def _frozen(a: np.ndarray) -> np.ndarray:
    a.setflags(write=False)
    return a


@dataclass(frozen=True)
class OutputOperator:
    m: np.ndarray = field(default_factory=lambda: np.eye(2, dtype=complex))
    label: str = "identity"

    def __post_init__(self):
        m = np.array(self.m, dtype=complex)
        if m.shape != (2, 2) or not np.all(np.isfinite(m)):
            raise ValueError("output operator must be a finite 2x2 matrix")
        object.__setattr__(self, "m", _frozen(m))

    @property
    def is_identity(self) -> bool:
        return bool(np.array_equal(self.m, np.eye(2)))


IDENTITY = OutputOperator()


@dataclass(frozen=True, eq=False)
class Perceptron:
    """``weights`` is stored as a read-only ``(n, 2, 2)`` array."""

    weights: np.ndarray
    output_op: OutputOperator = IDENTITY

    def __post_init__(self):
        w = np.array(self.weights, dtype=DTYPE)
        if w.ndim == 2:
            w = w[None]
        if w.ndim != 3 or w.shape[1:] != (2, 2) or w.shape[0] < 1:
            raise ValueError(f"weights must have shape (n, 2, 2) with n >= 1, got {w.shape}")
        if not np.all(np.isfinite(w)):
            raise ValueError("weights must be finite")
        object.__setattr__(self, "weights", _frozen(w))

    @property
    def n(self) -> int:
        return self.weights.shape[0]

    def weight_list(self) -> list[np.ndarray]:
        """Weights as ordinary complex128 2x2 arrays."""
        return [np.array(w, dtype=complex) for w in self.weights]

    def __eq__(self, other):
        if not isinstance(other, Perceptron):
            return NotImplemented
        return (
            np.array_equal(self.weights, other.weights)
            and np.array_equal(self.output_op.m, other.output_op.m)
            and self.output_op.label == other.output_op.label
        )


@dataclass(frozen=True)
class LearningConfig:
    eta: float
    max_steps: int = 1000
    tolerance: float = 1e-12
    seed: int = 0
    init_radius: float = 0.1

    def __post_init__(self):
        if not self.eta > 0:
            raise StepSizeError(f"eta must be > 0, got {self.eta}")
        if self.max_steps < 1:
            raise ValueError(f"max_steps must be >= 1, got {self.max_steps}")
        if not self.tolerance >= 0:
            raise ValueError(f"tolerance must be >= 0, got {self.tolerance}")
        if not self.init_radius >= 0:
            raise ValueError(f"init_radius must be >= 0, got {self.init_radius}")


class TraceStep(NamedTuple):
    t: int
    error_sq: float
    measured_ratio: Optional[float]
    predicted_ratio: Optional[float]


@dataclass
class TrainingTrace:
    """One row per time step ``t = 0..T``; row 0 is the untrained error.

    ``n_updates`` is the number of learning steps actually taken.
    """

    steps: list[TraceStep]
    converged: bool = False
    eta_warning: bool = False

    @property
    def n_updates(self) -> int:
        return len(self.steps) - 1

    @property
    def final_error_sq(self) -> float:
        return self.steps[-1].error_sq

    @property
    def initial_error_sq(self) -> float:
        return self.steps[0].error_sq


def _input_array(inputs: Sequence[StateVector], n: int) -> np.ndarray:
    if len(inputs) != n:
        raise ArityError(f"perceptron has {n} input channels, got {len(inputs)} inputs")
    return np.array([[x.c0, x.c1] for x in inputs], dtype=DTYPE)


def _flat(weights: np.ndarray) -> np.ndarray:
    """``(n, 2, 2)`` -> ``(2, 2n)`` with ``m[a, 2j+b] = W_j[a, b]``."""
    n = weights.shape[0]
    return weights.transpose(1, 0, 2).reshape(2, 2 * n)


def _raw_sum(weights: np.ndarray, xs: np.ndarray) -> np.ndarray:
    return _flat(weights) @ xs.reshape(-1)


def forward(p: Perceptron, inputs: Sequence[StateVector]) -> StateVector:
    """``F @ sum_j W_j x_j``; the result is generally unnormalized."""
    xs = _input_array(inputs, p.n)
    y = _raw_sum(p.weights, xs)
    if not p.output_op.is_identity:
        y = p.output_op.m.astype(DTYPE) @ y
    return StateVector.from_array(y.astype(complex))


def _check_learnable(p: Perceptron, eta: float):
    if not p.output_op.is_identity:
        raise OutputOperatorError(
            f"learning is only defined for the identity output operator, got {p.output_op.label!r}"
        )
    if not eta > 0:
        raise StepSizeError(f"eta must be > 0, got {eta}")


def learn_step(
    p: Perceptron, inputs: Sequence[StateVector], desired: StateVector, eta: float
) -> Perceptron:
    """One application of ``W_j <- W_j + eta (d - y) <x_j|``."""
    _check_learnable(p, eta)
    xs = _input_array(inputs, p.n)
    d = np.array([desired.c0, desired.c1], dtype=DTYPE)
    r = d - _raw_sum(p.weights, xs)
    w = p.weights + r[None, :, None] * (np.longdouble(eta) * xs.conj())[:, None, :]
    return Perceptron(w, p.output_op)


def predicted_ratio(n: int, eta: float, input_norms_sq: Sequence[float]) -> float:
    """Per-step contraction factor ``(1 - eta * sum(norms))**2``."""
    if n < 1 or len(input_norms_sq) != n:
        raise ArityError(f"expected {n} input norms, got {len(input_norms_sq)}")
    s = math.fsum(input_norms_sq)
    return (1.0 - eta * s) ** 2


def train(
    p: Perceptron,
    inputs: Sequence[StateVector],
    desired: StateVector,
    cfg: LearningConfig,
) -> tuple[Perceptron, TrainingTrace]:
    """Iterate :func:`learn_step` on a single fixed pattern.

    Stops once the squared error drops below ``cfg.tolerance`` or after
    ``cfg.max_steps`` updates.  ``eta >= 1/S`` is allowed but flagged in the
    trace since the error no longer shrinks.
    """
    _check_learnable(p, cfg.eta)
    xs = _input_array(inputs, p.n)
    norms = [x.norm_sq() for x in inputs]
    pred = predicted_ratio(p.n, cfg.eta, norms)
    s = math.fsum(norms)
    eta_warning = cfg.eta * s >= 1.0
    if eta_warning:
        logger.info("eta=%g is outside the convergent range (0, 1/S) with S=%g", cfg.eta, s)

    m = _flat(p.weights).copy()
    xv = xs.reshape(-1)
    step_row = np.longdouble(cfg.eta) * xv.conj()
    d = np.array([desired.c0, desired.c1], dtype=DTYPE)
    r = d - m @ xv
    e = np.vdot(r, r).real
    steps = [TraceStep(0, float(e), None, pred)]
    t = 0
    while not e < cfg.tolerance and t < cfg.max_steps:
        m += r[:, None] * step_row
        r = d - m @ xv
        e_next = np.vdot(r, r).real
        t += 1
        measured = float(e_next / e) if e >= RATIO_FLOOR else None
        steps.append(TraceStep(t, float(e_next), measured, pred))
        e = e_next
    w = m.reshape(2, p.n, 2).transpose(1, 0, 2)
    trace = TrainingTrace(steps, converged=bool(e < cfg.tolerance), eta_warning=eta_warning)
    return Perceptron(w, p.output_op), trace


def train_cyclic(
    p: Perceptron,
    patterns: Sequence[tuple[Sequence[StateVector], StateVector]],
    cfg: LearningConfig,
) -> tuple[Perceptron, TrainingTrace]:
    """Present several patterns in turn, one learning step each per epoch.

    No contraction law applies here; ``predicted_ratio`` is left empty and
    ``error_sq`` is the summed squared error over all patterns at the start
    of each epoch.
    """
    if not patterns:
        raise ValueError("at least one pattern is required")

    def total_error(q):
        return math.fsum((forward(q, x_in) - d).norm_sq() for x_in, d in patterns)

    e = total_error(p)
    steps = [TraceStep(0, e, None, None)]
    t = 0
    while not e < cfg.tolerance and t < cfg.max_steps:
        for x_in, d in patterns:
            p = learn_step(p, x_in, d, cfg.eta)
        e_next = total_error(p)
        t += 1
        steps.append(TraceStep(t, e_next, e_next / e if e >= RATIO_FLOOR else None, None))
        e = e_next
    return p, TrainingTrace(steps, converged=e < cfg.tolerance)


def init_weights(n: int, init_radius: float, seed: int) -> list[np.ndarray]:
    """``n`` matrices with entries uniform on the complex disc of radius ``init_radius``."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if not init_radius >= 0:
        raise ValueError(f"init_radius must be >= 0, got {init_radius}")
    rng = np.random.default_rng(seed)
    radius = init_radius * np.sqrt(rng.uniform(size=(n, 2, 2)))
    angle = rng.uniform(0.0, 2 * np.pi, size=(n, 2, 2))
    w = radius * np.exp(1j * angle)
    return [w[j] for j in range(n)]


@dataclass(frozen=True)
class _Layer:
    perceptrons: tuple[Perceptron, ...]
    fanin: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class LayeredNetwork:
    """Feed-forward stack of perceptrons, evaluation only.

    Signals are numbered on a single bus: ``0..n_inputs-1`` are the network
    inputs, followed by every perceptron output of each layer in order.  A
    perceptron output is renormalized to a qubit whenever a later layer
    reads it; the final layer's outputs are returned raw.
    """

    n_inputs: int
    layers: tuple[_Layer, ...] = ()

    @property
    def n_signals(self) -> int:
        return self.n_inputs + sum(len(layer.perceptrons) for layer in self.layers)

    def forward(self, inputs: Sequence[Qubit]) -> list[StateVector]:
        if len(inputs) != self.n_inputs:
            raise ArityError(f"network has {self.n_inputs} inputs, got {len(inputs)}")
        bus: list[StateVector] = list(inputs)
        outputs: list[StateVector] = []
        for layer in self.layers:
            outputs = []
            for p, idx in zip(layer.perceptrons, layer.fanin):
                outputs.append(forward(p, [normalized(bus[i]) for i in idx]))
            bus.extend(outputs)
        return outputs


def compose_layer(
    ps: Sequence[Perceptron],
    fanin: Sequence[Sequence[int]],
    *,
    n_inputs: Optional[int] = None,
    base: Optional[LayeredNetwork] = None,
) -> LayeredNetwork:
    """Append a layer to ``base`` (or start a network with ``n_inputs`` inputs)."""
    if base is None:
        if n_inputs is None:
            raise WiringError("n_inputs is required when starting a new network")
        base = LayeredNetwork(n_inputs)
    if len(ps) != len(fanin) or not ps:
        raise WiringError("need one fan-in list per perceptron and at least one perceptron")
    available = base.n_signals
    for k, (p, idx) in enumerate(zip(ps, fanin)):
        if len(idx) != p.n:
            raise WiringError(f"perceptron {k} takes {p.n} inputs but is wired to {len(idx)}")
        for i in idx:
            if not 0 <= i < available:
                raise WiringError(f"perceptron {k}: dangling fan-in index {i} (bus has {available})")
    layer = _Layer(tuple(ps), tuple(tuple(int(i) for i in idx) for idx in fanin))
    return LayeredNetwork(base.n_inputs, base.layers + (layer,))
