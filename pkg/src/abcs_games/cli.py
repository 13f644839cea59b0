"""Command-line entry point for running experiments.

    abcs-run --env kuhn --algo abcs --seed 0 --budget-nodes 1000000 \
             --eval-every-nodes 50000 --out results.csv

`--config FILE` loads `key = value` defaults first; `--set key=value` applies
final overrides; `--sweep-seeds a..b` expands one run per seed (rows from all
runs are appended into one CSV, distinguished by the seed column). Setting
the environment variable ABCS_LOG enables progress logging to stderr.
"""

from __future__ import annotations

import argparse
import logging
import os
import sys
from dataclasses import replace

from .errors import ConfigError
from .harness import RunConfig, parse_config, run_experiment, write_csv


def _parse_sweep(text: str):
    try:
        lo, _, hi = text.partition("..")
        lo_i, hi_i = int(lo), int(hi)
    except ValueError:
        raise ConfigError(f"--sweep-seeds: expected `a..b`, got {text!r}")
    if hi_i < lo_i:
        raise ConfigError("--sweep-seeds: empty range")
    return range(lo_i, hi_i + 1)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="abcs-run",
        description="Run one learning experiment and write a metrics CSV.")
    parser.add_argument("--env", help="environment name")
    parser.add_argument("--algo", help="algorithm name")
    parser.add_argument("--seed", type=int, default=None)
    parser.add_argument("--budget-nodes", type=int, default=None,
                        help="stop after this many nodes touched")
    parser.add_argument("--eval-every-nodes", type=int, default=None,
                        help="evaluation cadence in nodes touched")
    parser.add_argument("--out", default="results.csv",
                        help="output CSV path")
    parser.add_argument("--config", help="key = value config file")
    parser.add_argument("--set", action="append", default=[],
                        metavar="KEY=VALUE", help="override any config key")
    parser.add_argument("--sweep-seeds", metavar="A..B",
                        help="run seeds A..B inclusive into one CSV")
    return parser


def _resolve_config(args) -> RunConfig:
    cfg = RunConfig()
    if args.config:
        with open(args.config, encoding="utf-8") as fh:
            cfg = parse_config(fh.read(), defaults=cfg)
    overrides = []
    if args.env:
        overrides.append(f"env = {args.env}")
    if args.algo:
        overrides.append(f"algo = {args.algo}")
    if args.seed is not None:
        overrides.append(f"seed = {args.seed}")
    if args.budget_nodes is not None:
        overrides.append(f"node_budget = {args.budget_nodes}")
    if args.eval_every_nodes is not None:
        overrides.append(f"eval_interval_nodes = {args.eval_every_nodes}")
    for item in args.set:
        if "=" not in item:
            raise ConfigError(f"--set: expected KEY=VALUE, got {item!r}")
        overrides.append(item)
    return parse_config("\n".join(overrides), defaults=cfg)


def main(argv=None) -> int:
    if os.environ.get("ABCS_LOG"):
        logging.basicConfig(stream=sys.stderr, level=logging.INFO,
                            format="%(asctime)s %(message)s")
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        try:
            cfg = _resolve_config(args)
        except ConfigError as exc:
            # surface missing env/algo as a usage error rather than a config one
            if args.env is None and str(exc).startswith("env:"):
                parser.error("--env is required")
            if args.algo is None and str(exc).startswith("algo:"):
                parser.error("--algo is required")
            raise
        seeds = [cfg.seed]
        if args.sweep_seeds:
            seeds = list(_parse_sweep(args.sweep_seeds))
        rows = []
        for seed in seeds:
            rows.extend(run_experiment(replace(cfg, seed=seed)))
        write_csv(rows, args.out)
    except (ConfigError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
