"""Experiment orchestration behind the CLI."""
from __future__ import annotations

import logging
import sys
from dataclasses import dataclass
from typing import Optional

from ..classical import ClassicalPerceptron, cl_init_weights, cl_train
from ..errors import ConfigError
from ..perceptron import Perceptron, init_weights, train, train_cyclic
from . import report
from .config import ExperimentConfig
from .patterns import PatternFile, load_classical_patterns, load_pattern_set, random_pattern

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_NOT_CONVERGED = 2
EXIT_INVALID = 3
EXIT_IO = 4

RATIO_RTOL = 1e-9
# denominator floor for the relative ratio check; only matters at eta ~ 1/S
PREDICTED_FLOOR = 1e-12


def ratio_deviation(measured: float, predicted: float) -> float:
    return abs(measured - predicted) / max(predicted, PREDICTED_FLOOR)


@dataclass
class Verification:
    rows: list
    first_violation: Optional[int]

    @property
    def ok(self) -> bool:
        return self.first_violation is None


def verify_trace(trace, rtol: float = RATIO_RTOL) -> Verification:
    rows = []
    first = None
    for s in trace.steps:
        if s.measured_ratio is None:
            rows.append((s.t, s.error_sq, None, s.predicted_ratio, None, True))
            continue
        dev = ratio_deviation(s.measured_ratio, s.predicted_ratio)
        ok = dev < rtol
        if not ok and first is None:
            first = s.t
        rows.append((s.t, s.error_sq, s.measured_ratio, s.predicted_ratio, dev, ok))
    return Verification(rows, first)


def _quantum_patterns(cfg: ExperimentConfig) -> list[PatternFile]:
    if cfg.pattern_path:
        pats = load_pattern_set(cfg.pattern_path)
        if cfg.n_inputs and cfg.n_inputs != pats[0].n:
            raise ConfigError(f"n_inputs = {cfg.n_inputs} but the pattern file has {pats[0].n} inputs")
        return pats
    return [random_pattern(cfg.n_inputs, cfg.seed)]


def _train_quantum(cfg: ExperimentConfig):
    pats = _quantum_patterns(cfg)
    lcfg = cfg.learning_config()
    p0 = Perceptron(init_weights(pats[0].n, cfg.init_radius, cfg.seed))
    if len(pats) == 1:
        p, trace = train(p0, pats[0].inputs, pats[0].desired, lcfg)
    else:
        logger.warning("multi-pattern training: no convergence guarantee applies")
        p, trace = train_cyclic(p0, [(x.inputs, x.desired) for x in pats], lcfg)
    if trace.eta_warning:
        logger.warning("eta=%s is outside the guaranteed-convergence range (0, 1/S)", cfg.eta)
    return pats, p, trace


def _summary(trace) -> dict:
    return {
        "converged": trace.converged,
        "eta_warning": trace.eta_warning,
        "final_error_sq": trace.final_error_sq,
        "n_updates": trace.n_updates,
    }


def run_experiment(cfg: ExperimentConfig) -> int:
    """Run one mode and write its artifacts; returns the process exit code."""
    cfg.validate()
    out = cfg.output_path

    if cfg.mode == "train-quantum":
        _, p, trace = _train_quantum(cfg)
        report.emit_curve(trace, out)
        report.write_weights(report.sidecar(out, ".weights.json"), p.weight_list(), **_summary(trace))
        if not trace.converged:
            print(f"not converged after {trace.n_updates} steps", file=sys.stderr)
            return EXIT_NOT_CONVERGED
        return EXIT_OK

    if cfg.mode == "verify-convergence":
        pats = _quantum_patterns(cfg)
        if len(pats) != 1:
            raise ConfigError("verify-convergence takes a single-pattern file")
        p0 = Perceptron(init_weights(pats[0].n, cfg.init_radius, cfg.seed))
        _, trace = train(p0, pats[0].inputs, pats[0].desired, cfg.learning_config())
        result = verify_trace(trace)
        report.write_verification_report(result.rows, out)
        if not result.ok:
            print(f"contraction ratio violated first at step {result.first_violation}", file=sys.stderr)
            return EXIT_VERIFY_FAILED
        return EXIT_OK

    if cfg.mode == "decompose":
        _, p, trace = _train_quantum(cfg)
        weights = p.weight_list()
        report.write_circuits(weights, out)
        report.write_weights(report.sidecar(out, ".weights.json"), weights, **_summary(trace))
        return EXIT_OK

    # train-classical
    pats = load_classical_patterns(cfg.pattern_path)
    n = len(pats[0][0])
    if cfg.n_inputs and cfg.n_inputs != n:
        raise ConfigError(f"n_inputs = {cfg.n_inputs} but the pattern file has {n} inputs")
    p0 = ClassicalPerceptron(cl_init_weights(n, cfg.init_radius, cfg.seed))
    p, trace = cl_train(p0, pats, cfg.learning_config())
    report.emit_curve(trace, out)
    report.write_weights(
        report.sidecar(out, ".weights.json"),
        [],
        classical_weights=list(p.weights),
        converged=trace.converged,
        epochs=len(trace.steps),
    )
    if not trace.converged:
        print(f"not converged after {len(trace.steps)} epochs", file=sys.stderr)
        return EXIT_NOT_CONVERGED
    return EXIT_OK
