"""CSV and JSON writers.  Floats are rendered with 17 significant digits."""
from __future__ import annotations

import json
from pathlib import Path
from typing import Iterable, Optional, Sequence

import numpy as np

from ..optics import FIELDS, decompose_weight, is_passive, unitarity_deviation
from ..perceptron import TrainingTrace

CURVE_HEADER = "step,error_sq,measured_ratio,predicted_ratio"
REPORT_HEADER = "step,error_sq,measured_ratio,predicted_ratio,rel_deviation,status"
CIRCUIT_HEADER = "index," + ",".join(FIELDS) + ",unitarity_deviation,passive"


def fmt(x: Optional[float]) -> str:
    if x is None:
        return ""
    return format(float(x), ".17g")


def _write_lines(path, header: str, rows: Iterable[str]):
    path = Path(path)
    with path.open("w", newline="") as fh:
        fh.write(header + "\n")
        for row in rows:
            fh.write(row + "\n")
    return path


def emit_curve(trace: TrainingTrace, path) -> Path:
    """Write ``trace`` as CSV; absent ratios become empty fields."""
    if not trace.steps:
        raise ValueError("cannot emit an empty trace")
    rows = (
        ",".join([str(s.t), fmt(s.error_sq), fmt(s.measured_ratio), fmt(s.predicted_ratio)])
        for s in trace.steps
    )
    return _write_lines(path, CURVE_HEADER, rows)


def write_verification_report(rows: Sequence[tuple], path) -> Path:
    """``rows`` hold (step, error_sq, measured, predicted, deviation, ok)."""

    def line(r):
        t, e, m, p, dev, ok = r
        status = "" if m is None else ("ok" if ok else "FAIL")
        return ",".join([str(t), fmt(e), fmt(m), fmt(p), fmt(dev), status])

    return _write_lines(path, REPORT_HEADER, (line(r) for r in rows))


def write_circuits(weights: Sequence[np.ndarray], path, tol: float = 1e-12) -> Path:
    rows = []
    for j, w in enumerate(weights):
        c = decompose_weight(w)
        rec = c.to_record()
        cells = [str(j)] + [fmt(rec[k]) for k in FIELDS]
        cells += [fmt(unitarity_deviation(w)), "true" if is_passive(c, tol) else "false"]
        rows.append(",".join(cells))
    return _write_lines(path, CIRCUIT_HEADER, rows)


def _enc(z) -> list[float]:
    z = complex(z)
    return [z.real, z.imag]


def write_weights(path, weights: Sequence[np.ndarray], **meta) -> Path:
    doc = dict(meta)
    doc["weights"] = [[[_enc(z) for z in row] for row in np.asarray(w)] for w in weights]
    path = Path(path)
    path.write_text(json.dumps(doc, indent=2, sort_keys=True) + "\n")
    return path


def read_weights(path) -> list[np.ndarray]:
    doc = json.loads(Path(path).read_text())
    return [np.array([[complex(*z) for z in row] for row in w]) for w in doc["weights"]]


def sidecar(path, suffix: str) -> Path:
    """``out/trace.csv`` -> ``out/trace.<suffix>``."""
    path = Path(path)
    return path.with_name(path.stem + suffix)
