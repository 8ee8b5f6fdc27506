"""Flat ``key = value`` experiment configuration."""
from __future__ import annotations

import dataclasses
from dataclasses import dataclass, fields
from pathlib import Path

from ..errors import ConfigError
from ..perceptron import LearningConfig

MODES = ("train-quantum", "train-classical", "verify-convergence", "decompose")


@dataclass(frozen=True)
class ExperimentConfig:
    mode: str = "train-quantum"
    n_inputs: int = 0  # 0: take the arity from the pattern file
    eta: float = 0.1
    max_steps: int = 1000
    tolerance: float = 1e-12
    seed: int = 0
    init_radius: float = 0.1
    pattern_path: str = ""
    output_path: str = ""

    def validate(self) -> ExperimentConfig:
        if self.mode not in MODES:
            raise ConfigError(f"mode must be one of {', '.join(MODES)}; got {self.mode!r}")
        if self.n_inputs < 0:
            raise ConfigError(f"n_inputs must be >= 0, got {self.n_inputs}")
        if self.n_inputs == 0 and not self.pattern_path:
            raise ConfigError("either n_inputs or pattern_path must be set")
        if self.mode == "train-classical" and not self.pattern_path:
            raise ConfigError("train-classical needs a pattern_path")
        if not self.output_path:
            raise ConfigError("output_path must be set")
        try:
            self.learning_config()
        except ValueError as exc:
            raise ConfigError(str(exc)) from exc
        return self

    def learning_config(self) -> LearningConfig:
        return LearningConfig(
            eta=self.eta,
            max_steps=self.max_steps,
            tolerance=self.tolerance,
            seed=self.seed,
            init_radius=self.init_radius,
        )

    def replace(self, **changes) -> ExperimentConfig:
        return dataclasses.replace(self, **changes)


_TYPES = {f.name: f.type for f in fields(ExperimentConfig)}
_CASTS = {"int": int, "float": float, "str": str}


def coerce(key: str, raw: str):
    """Convert a textual value to the type of field ``key``."""
    if key not in _TYPES:
        raise ConfigError(f"unknown config key {key!r}")
    try:
        return _CASTS[_TYPES[key]](raw)
    except ValueError as exc:
        raise ConfigError(f"bad value for {key!r}: {raw!r}") from exc


def parse_config(text: str, source: str = "<config>") -> ExperimentConfig:
    values = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, raw = line.partition("=")
        if not sep:
            raise ConfigError(f"{source}:{lineno}: expected 'key = value', got {line!r}")
        key = key.strip()
        if key in values:
            raise ConfigError(f"{source}:{lineno}: duplicate key {key!r}")
        try:
            values[key] = coerce(key, raw.strip())
        except ConfigError as exc:
            raise ConfigError(f"{source}:{lineno}: {exc}") from exc
    return ExperimentConfig(**values)


def load_config(path) -> ExperimentConfig:
    path = Path(path)
    return parse_config(path.read_text(), str(path))


def dump_config(cfg: ExperimentConfig) -> str:
    lines = []
    for f in fields(cfg):
        value = getattr(cfg, f.name)
        lines.append(f"{f.name} = {value!r}" if isinstance(value, float) else f"{f.name} = {value}")
    return "\n".join(lines) + "\n"
