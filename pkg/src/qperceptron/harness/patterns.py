"""JSON pattern files.

Quantum patterns::

    {"inputs": [[[re, im], [re, im]], ...], "desired": [[re, im], [re, im]]}

or several of them under ``{"patterns": [...]}``.  Classical patterns are
``{"patterns": [{"inputs": [x1, ..., xn], "desired": d}, ...]}`` with real
numbers.
"""
from __future__ import annotations

import json
import math
import warnings
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from ..errors import PatternError, UnnormalizableError
from ..qstate import Qubit, StateVector, make_qubit

RENORM_TOL = 1e-9


class RenormalizationWarning(UserWarning):
    pass


@dataclass(frozen=True)
class PatternFile:
    inputs: tuple[Qubit, ...]
    desired: StateVector
    renormalized: bool = False

    @property
    def n(self) -> int:
        return len(self.inputs)


def _read_json(path):
    path = Path(path)
    text = path.read_text()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise PatternError(exc.msg, path=path, line=exc.lineno) from exc


def _complex(node, field, path) -> complex:
    if (
        not isinstance(node, list)
        or len(node) != 2
        or not all(isinstance(v, (int, float)) and not isinstance(v, bool) for v in node)
    ):
        raise PatternError("expected a complex number [re, im]", path=path, field=field)
    z = complex(node[0], node[1])
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise PatternError("non-finite amplitude", path=path, field=field)
    return z


def _pair(node, field, path) -> tuple[complex, complex]:
    if not isinstance(node, list) or len(node) != 2:
        n = len(node) if isinstance(node, list) else "non-list"
        raise PatternError(f"expected an amplitude pair of 2 entries, got {n}", path=path, field=field)
    return _complex(node[0], f"{field}[0]", path), _complex(node[1], f"{field}[1]", path)


def _quantum_pattern(obj, prefix, path) -> PatternFile:
    if not isinstance(obj, dict):
        raise PatternError("expected an object with 'inputs' and 'desired'", path=path, field=prefix or None)
    for key in ("inputs", "desired"):
        if key not in obj:
            raise PatternError("missing field", path=path, field=prefix + key)
    raw_inputs = obj["inputs"]
    if not isinstance(raw_inputs, list) or not raw_inputs:
        raise PatternError("expected a non-empty list of amplitude pairs", path=path, field=prefix + "inputs")
    inputs = []
    renormalized = False
    for j, node in enumerate(raw_inputs):
        field = f"{prefix}inputs[{j}]"
        a0, a1 = _pair(node, field, path)
        try:
            q = make_qubit(a0, a1)
        except UnnormalizableError as exc:
            raise PatternError(str(exc), path=path, field=field) from exc
        norm = math.hypot(abs(a0), abs(a1))
        if abs(norm - 1.0) > RENORM_TOL:
            renormalized = True
            warnings.warn(
                f"{path}: {field} had norm {norm:.17g}; renormalized",
                RenormalizationWarning,
                stacklevel=3,
            )
        inputs.append(q)
    d = StateVector(*_pair(obj["desired"], prefix + "desired", path))
    if abs(d.norm_sq() - 1.0) > RENORM_TOL:
        raise PatternError(
            f"desired state must be unit-norm, has norm^2 {d.norm_sq():.17g}",
            path=path,
            field=prefix + "desired",
        )
    return PatternFile(tuple(inputs), d, renormalized)


def load_pattern_set(path) -> list[PatternFile]:
    """All quantum patterns in a file, single or multi-pattern form."""
    obj = _read_json(path)
    if isinstance(obj, dict) and "patterns" in obj:
        items = obj["patterns"]
        if not isinstance(items, list) or not items:
            raise PatternError("expected a non-empty list", path=path, field="patterns")
        pats = [_quantum_pattern(item, f"patterns[{k}].", path) for k, item in enumerate(items)]
        n = pats[0].n
        for k, pat in enumerate(pats):
            if pat.n != n:
                raise PatternError(f"has {pat.n} inputs, expected {n}", path=path, field=f"patterns[{k}].inputs")
        return pats
    return [_quantum_pattern(obj, "", path)]


def load_patterns(path) -> PatternFile:
    """Load a single-pattern quantum file."""
    pats = load_pattern_set(path)
    if len(pats) != 1:
        raise PatternError(f"expected a single pattern, found {len(pats)}", path=path, field="patterns")
    return pats[0]


def load_classical_patterns(path) -> list[tuple[tuple[float, ...], float]]:
    obj = _read_json(path)
    if not isinstance(obj, dict) or not isinstance(obj.get("patterns"), list) or not obj["patterns"]:
        raise PatternError("expected a non-empty 'patterns' list", path=path, field="patterns")
    out = []
    n = None
    for k, item in enumerate(obj["patterns"]):
        field = f"patterns[{k}]"
        if not isinstance(item, dict) or "inputs" not in item or "desired" not in item:
            raise PatternError("expected an object with 'inputs' and 'desired'", path=path, field=field)
        x = item["inputs"]
        if not isinstance(x, list) or not x or not all(_is_real(v) for v in x):
            raise PatternError("expected a non-empty list of reals", path=path, field=field + ".inputs")
        if n is None:
            n = len(x)
        elif len(x) != n:
            raise PatternError(f"has {len(x)} inputs, expected {n}", path=path, field=field + ".inputs")
        if not _is_real(item["desired"]):
            raise PatternError("expected a real number", path=path, field=field + ".desired")
        out.append((tuple(float(v) for v in x), float(item["desired"])))
    return out


def _is_real(v) -> bool:
    return isinstance(v, (int, float)) and not isinstance(v, bool) and math.isfinite(v)


def random_pattern(n: int, seed: int) -> PatternFile:
    """Unit-norm inputs and target drawn from complex Gaussians."""
    rng = np.random.default_rng([seed, 1])
    z = rng.normal(size=(n + 1, 2)) + 1j * rng.normal(size=(n + 1, 2))
    qs = [make_qubit(*row) for row in z]
    return PatternFile(tuple(qs[:n]), StateVector(qs[n].c0, qs[n].c1))


def dump_pattern(p: PatternFile) -> str:
    def enc(v):
        return [[v.c0.real, v.c0.imag], [v.c1.real, v.c1.imag]]

    return json.dumps({"inputs": [enc(x) for x in p.inputs], "desired": enc(p.desired)}, indent=2) + "\n"
