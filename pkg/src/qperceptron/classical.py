"""Real-valued Rosenblatt perceptron, kept as a baseline for the quantum one.

There is no bias weight; append a constant ``1`` input channel to get one.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import ArityError, StepSizeError
from .perceptron import LearningConfig, TraceStep, TrainingTrace


class Activation(str, enum.Enum):
    STEP = "step"
    IDENTITY = "identity"


@dataclass(frozen=True)
class ClassicalPerceptron:
    weights: tuple[float, ...]
    activation: Activation = Activation.STEP

    def __post_init__(self):
        w = tuple(float(v) for v in self.weights)
        if not w:
            raise ValueError("a classical perceptron needs at least one weight")
        if not all(math.isfinite(v) for v in w):
            raise ValueError("weights must be finite")
        object.__setattr__(self, "weights", w)
        object.__setattr__(self, "activation", Activation(self.activation))

    @property
    def n(self) -> int:
        return len(self.weights)


def cl_forward(p: ClassicalPerceptron, x: Sequence[float]) -> float:
    """``f(sum_j w_j x_j)``; the step function maps 0 to 0."""
    if len(x) != p.n:
        raise ArityError(f"perceptron has {p.n} inputs, got {len(x)}")
    s = math.fsum(w * xj for w, xj in zip(p.weights, x))
    if p.activation is Activation.STEP:
        return 1.0 if s > 0 else 0.0
    return s


def cl_learn_step(p: ClassicalPerceptron, x: Sequence[float], d: float, eta: float) -> ClassicalPerceptron:
    if not 0 < eta < 1:
        raise StepSizeError(f"classical step size must lie in (0, 1), got {eta}")
    y = cl_forward(p, x)
    if d == y:
        return p
    return ClassicalPerceptron(
        tuple(w + eta * (d - y) * xj for w, xj in zip(p.weights, x)), p.activation
    )


def cl_train(
    p: ClassicalPerceptron,
    patterns: Sequence[tuple[Sequence[float], float]],
    cfg: LearningConfig,
) -> tuple[ClassicalPerceptron, TrainingTrace]:
    """Cycle through ``patterns`` until an epoch makes no update.

    Each trace row is one epoch; ``error_sq`` is the summed ``(d - y)**2``
    seen while presenting that epoch.  ``cfg.max_steps`` bounds the number
    of epochs.
    """
    if not patterns:
        raise ValueError("at least one pattern is required")
    steps = []
    converged = False
    for epoch in range(1, cfg.max_steps + 1):
        err = 0.0
        updates = 0
        for x, d in patterns:
            y = cl_forward(p, x)
            if y != d:
                err += (d - y) ** 2
                updates += 1
                p = cl_learn_step(p, x, d, cfg.eta)
        steps.append(TraceStep(epoch, err, None, None))
        if updates == 0:
            converged = True
            break
    return p, TrainingTrace(steps, converged=converged)


def cl_init_weights(n: int, init_radius: float, seed: int) -> tuple[float, ...]:
    """Small random start, uniform on ``[-init_radius, init_radius]``."""
    rng = np.random.default_rng(seed)
    return tuple(float(v) for v in rng.uniform(-init_radius, init_radius, size=n))
