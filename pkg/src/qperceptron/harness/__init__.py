from .config import ExperimentConfig, dump_config, load_config, parse_config
from .experiment import run_experiment, verify_trace
from .patterns import PatternFile, load_classical_patterns, load_pattern_set, load_patterns
from .report import emit_curve

__all__ = [
    "ExperimentConfig",
    "PatternFile",
    "dump_config",
    "emit_curve",
    "load_classical_patterns",
    "load_config",
    "load_pattern_set",
    "load_patterns",
    "parse_config",
    "run_experiment",
    "verify_trace",
]
