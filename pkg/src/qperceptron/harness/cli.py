"""Command-line entry point: ``qperceptron <mode> --config FILE [--key value ...]``."""
from __future__ import annotations

import argparse
import logging
import sys
from dataclasses import fields

from ..errors import QPerceptronError
from .config import MODES, ExperimentConfig, coerce, load_config
from .experiment import EXIT_INVALID, EXIT_IO, run_experiment

_ALIASES = {"n": "n_inputs", "steps": "max_steps"}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        # usage errors share the validation exit code; 2 means nonconvergence here
        self.print_usage(sys.stderr)
        self.exit(EXIT_INVALID, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="qperceptron", description=__doc__, allow_abbrev=False)
    sub = parser.add_subparsers(dest="mode", required=True, parser_class=_Parser)
    for mode in MODES:
        sp = sub.add_parser(mode, allow_abbrev=False)
        sp.add_argument("--config", help="key = value config file")
        for f in fields(ExperimentConfig):
            if f.name == "mode":
                continue
            names = [f"--{f.name}"]
            if "_" in f.name:
                names.append(f"--{f.name.replace('_', '-')}")
            sp.add_argument(*names, dest=f.name, default=None, metavar="VALUE")
        sp.add_argument("--n", dest="n", default=None, metavar="N", help="alias of --n_inputs")
        sp.add_argument("--steps", dest="steps", default=None, metavar="N", help="alias of --max_steps")
    return parser


def config_from_args(args: argparse.Namespace) -> ExperimentConfig:
    cfg = load_config(args.config) if args.config else ExperimentConfig()
    overrides = {"mode": args.mode}
    for key, value in vars(args).items():
        if key in ("mode", "config") or value is None:
            continue
        key = _ALIASES.get(key, key)
        overrides[key] = coerce(key, value)
    return cfg.replace(**overrides)


def main(argv=None) -> int:
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s: %(message)s")
    args = build_parser().parse_args(argv)
    try:
        cfg = config_from_args(args)
        return run_experiment(cfg)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except QPerceptronError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
