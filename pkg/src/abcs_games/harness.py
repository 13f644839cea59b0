"""Experiment orchestration: configs, seeded runs, metric grids, CSV output.

A run is fully determined by its RunConfig: (environment, algorithm, seed,
node budget, evaluation cadence, hyperparameters). Learning pauses on a
nodes-touched grid to evaluate — exploitability of the average policy for the
two-player games (greedy policy for tictactoe), greedy regret for cartpole,
per-phase metrics for the stacked environment, plus the detector's
nonstationary-flag fraction for the adaptive learner. Evaluation itself
never advances the node counter and draws from its own per-evaluation RNG,
so result rows are byte-reproducible.
"""

from __future__ import annotations

import logging
import sys
import threading
from dataclasses import dataclass, fields, replace

from . import evaluation
from .detector import ChiSquaredDetector, oracle_detector
from .errors import ConfigError
from .games.registry import ENV_NAMES, build_environment
from .learners import (AbcsLearner, BootCfrLearner, BqlLearner,
                       EsMccfrLearner, GeometricSchedule, HedgeSchedule,
                       MaxCfrLearner, OsMccfrLearner, ALGO_NAMES)

log = logging.getLogger("abcs_games")

_DEEP_STACK_BYTES = 512 * 1024 * 1024
_RECURSION_LIMIT = 200_000


@dataclass(frozen=True)
class RunConfig:
    env: str = ""
    algo: str = ""
    seed: int = 0
    node_budget: int = 1_000_000
    eval_interval_nodes: int = 50_000
    eval_episodes: int = 200
    gamma: float = 1.0
    # BQL temperature schedule: base * decay ** (n // interval)
    bql_tau_base: float = 10.0
    bql_tau_decay: float = 0.99
    bql_tau_interval: int = 50
    # MAX-CFR / ES-MCCFR / BOOTCFR Hedge temperature
    maxcfr_tau: float = 1.0
    # OS-MCCFR exploration
    os_epsilon: float = 0.6
    # Adaptive-branching hyperparameters
    abcs_stat_tau_base: float = 1.0
    abcs_stat_tau_decay: float = 0.99
    abcs_stat_tau_interval: int = 20
    abcs_nonstat_tau: float = 1.0
    abcs_epsilon: float = 0.0
    alpha_s: float = 0.05
    p_check: float = 0.05
    min_samples: int = 8
    oracle: str = "none"        # none | always_stationary | always_nonstationary
    dual_tables: bool = False
    # Environment variants
    termination_probability: float = -1.0   # <0 means the environment default

    def validate(self) -> "RunConfig":
        if self.env not in ENV_NAMES:
            raise ConfigError(f"env: unknown environment {self.env!r}")
        if self.algo not in ALGO_NAMES:
            raise ConfigError(f"algo: unknown algorithm {self.algo!r}")
        if self.node_budget <= 0:
            raise ConfigError("node_budget: must be positive")
        if self.eval_interval_nodes <= 0:
            raise ConfigError("eval_interval_nodes: must be positive")
        if self.eval_episodes <= 0:
            raise ConfigError("eval_episodes: must be positive")
        if not 0.0 < self.alpha_s < 1.0:
            raise ConfigError("alpha_s: must be in (0, 1)")
        if not 0.0 <= self.p_check <= 1.0:
            raise ConfigError("p_check: must be in [0, 1]")
        if self.oracle not in ("none", "always_stationary",
                               "always_nonstationary"):
            raise ConfigError(f"oracle: unknown mode {self.oracle!r}")
        if not 0.0 < self.os_epsilon <= 1.0:
            raise ConfigError("os_epsilon: must be in (0, 1]")
        if not 0.0 <= self.abcs_epsilon <= 1.0:
            raise ConfigError("abcs_epsilon: must be in [0, 1]")
        return self


@dataclass(frozen=True)
class ResultRow:
    algo: str
    env: str
    seed: int
    iteration: int
    nodes_touched: int
    metric: str
    value: float


_FIELD_TYPES = {f.name: f.type for f in fields(RunConfig)}
_TTT_OVERRIDES = dict(bql_tau_interval=100, abcs_stat_tau_base=10.0,
                      abcs_stat_tau_interval=50)


def _parse_value(key: str, text: str):
    ftype = _FIELD_TYPES[key]
    text = text.strip()
    try:
        if ftype == "bool":
            low = text.lower()
            if low in ("true", "1", "yes"):
                return True
            if low in ("false", "0", "no"):
                return False
            raise ValueError(text)
        if ftype == "int":
            return int(text)
        if ftype == "float":
            return float(text)
        return text
    except ValueError as exc:
        raise ConfigError(f"{key}: cannot parse value {text!r}") from exc


def parse_config(text: str, defaults: RunConfig | None = None) -> RunConfig:
    """Parse line-oriented `key = value` text ('#' comments, blank lines ok)."""
    values = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"line {lineno}: expected `key = value`, got {raw!r}")
        key, _, val = line.partition("=")
        key = key.strip()
        if key not in _FIELD_TYPES:
            raise ConfigError(f"line {lineno}: unknown key {key!r}")
        values[key] = _parse_value(key, val)
    cfg = replace(defaults or RunConfig(), **values)
    if cfg.env == "tictactoe":
        untouched = {k: v for k, v in _TTT_OVERRIDES.items() if k not in values}
        cfg = replace(cfg, **untouched)
    return cfg.validate()


def build_learner(config: RunConfig, game, num=float):
    seed = config.seed
    gamma = config.gamma
    algo = config.algo
    if algo == "bql":
        return BqlLearner(game, seed, gamma, num, GeometricSchedule(
            config.bql_tau_base, config.bql_tau_decay, config.bql_tau_interval))
    if algo == "es-mccfr":
        return EsMccfrLearner(game, seed, gamma, num,
                              GeometricSchedule(config.maxcfr_tau))
    if algo == "os-mccfr":
        return OsMccfrLearner(game, seed, gamma, num, config.os_epsilon)
    if algo == "max-cfr":
        return MaxCfrLearner(game, seed, gamma, num,
                             GeometricSchedule(config.maxcfr_tau))
    if algo == "bootcfr":
        return BootCfrLearner(game, seed, gamma, num,
                              GeometricSchedule(config.maxcfr_tau))
    if algo == "abcs":
        if config.oracle == "none":
            detector = ChiSquaredDetector(config.alpha_s, config.p_check,
                                          config.min_samples)
        else:
            detector = oracle_detector(config.oracle)
        schedule = HedgeSchedule(
            tau_stationary=GeometricSchedule(config.abcs_stat_tau_base,
                                             config.abcs_stat_tau_decay,
                                             config.abcs_stat_tau_interval),
            tau_nonstationary=GeometricSchedule(config.abcs_nonstat_tau),
            epsilon=config.abcs_epsilon)
        return AbcsLearner(game, seed, detector, gamma, num, schedule,
                           config.dual_tables)
    raise ConfigError(f"algo: unknown algorithm {algo!r}")


def _build_game(config: RunConfig):
    tp = config.termination_probability
    return build_environment(config.env, tp if tp > 0 else None)


def _evaluate(config: RunConfig, game, learner, eval_index: int):
    """One metrics snapshot; returns {metric: value}."""
    import random as _random

    rng = _random.Random(f"{config.seed}:eval:{eval_index}")
    out = {}
    env = config.env
    if env in ("wrps", "kuhn", "leduc"):
        out["exploitability"] = evaluation.exploitability(
            game, learner.average_policy())
    elif env == "tictactoe":
        out["exploitability"] = evaluation.exploitability(
            game, learner.greedy_policy())
    elif env == "cartpole":
        ret = evaluation.greedy_episode_return(game, learner.q, rng,
                                               config.eval_episodes)
        out["episode_return"] = ret
        out["regret"] = game.optimal_return() - ret
    elif env == "stacked":
        ret = evaluation.stacked_cartpole_phase_return(
            game, learner.q, rng, config.eval_episodes)
        out["cartpole_return"] = ret
        out["cartpole_regret"] = game.cartpole.optimal_return() - ret
        out["leduc_exploitability"] = evaluation.stacked_leduc_exploitability(
            learner.avg)
    if learner.detector is not None:
        tags = None
        if env == "stacked":
            tags = {"cartpole": game.cartpole.tag, "leduc": game.leduc.tag}
        out.update(evaluation.detector_fractions(learner.detector, tags))
    return out


def run_experiment(config: RunConfig) -> list[ResultRow]:
    """Run one (env, algo, seed) learning run; returns metric rows in order."""
    config = config.validate()
    game = _build_game(config)
    learner = build_learner(config, game)
    rows = []
    next_mark = config.eval_interval_nodes
    eval_index = 0

    def emit():
        nonlocal eval_index
        metrics = _evaluate(config, game, learner, eval_index)
        eval_index += 1
        for metric, value in metrics.items():
            rows.append(ResultRow(config.algo, config.env, config.seed,
                                  learner.iteration, learner.nodes_touched,
                                  metric, float(value)))
        log.info("%s/%s seed=%d nodes=%d %s", config.algo, config.env,
                 config.seed, learner.nodes_touched,
                 " ".join(f"{k}={v:.6g}" for k, v in metrics.items()))

    def learn():
        nonlocal next_mark
        while learner.nodes_touched < config.node_budget:
            learner.run_iteration()
            if learner.nodes_touched >= next_mark:
                emit()
                while next_mark <= learner.nodes_touched:
                    next_mark += config.eval_interval_nodes

    run_deep(learn)
    if not rows or rows[-1].nodes_touched < learner.nodes_touched:
        emit()
    return rows


def run_deep(fn):
    """Run ``fn`` on a large-stack thread (deep episode recursion needs it)."""
    result = {}

    def target():
        sys.setrecursionlimit(_RECURSION_LIMIT)
        try:
            result["value"] = fn()
        except BaseException as exc:  # surfaced below
            result["error"] = exc

    old = threading.stack_size(_DEEP_STACK_BYTES)
    try:
        thread = threading.Thread(target=target)
        thread.start()
        thread.join()
    finally:
        threading.stack_size(old)
    if "error" in result:
        raise result["error"]
    return result.get("value")


def format_value(x: float) -> str:
    return f"{x:.9g}"


CSV_HEADER = "algo,env,seed,iteration,nodes_touched,metric,value"


def write_csv(rows, path: str) -> None:
    """Write rows in emission order; reals carry 9 significant digits."""
    try:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(CSV_HEADER + "\n")
            for r in rows:
                fh.write(f"{r.algo},{r.env},{r.seed},{r.iteration},"
                         f"{r.nodes_touched},{r.metric},{format_value(r.value)}\n")
    except OSError as exc:
        raise OSError(f"cannot write results to {path!r}: {exc}") from exc


def read_csv(path: str) -> list[ResultRow]:
    with open(path, encoding="utf-8") as fh:
        header = fh.readline().strip()
        if header != CSV_HEADER:
            raise ValueError(f"{path}: unexpected header {header!r}")
        rows = []
        for line in fh:
            algo, env, seed, it, nodes, metric, value = line.rstrip("\n").split(",")
            rows.append(ResultRow(algo, env, int(seed), int(it), int(nodes),
                                  metric, float(value)))
    return rows
