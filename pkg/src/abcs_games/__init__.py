"""Tabular game-tree learners unifying Boltzmann Q-learning and CFR.

Environments (weighted RPS, Kuhn and Leduc poker, discretized cartpole, a
stacked cartpole+Leduc game, tictactoe) share one extensive-form abstraction;
learners (BQL, ES/OS-MCCFR, MAX-CFR, BOOTCFR, and the adaptive-branching
learner gated by chi-squared child-stationarity detection) share tabular
machinery; evaluation computes exact best responses and exploitability; the
harness reproduces the benchmark protocol on a nodes-touched grid.
"""

from . import evaluation, harness, stats
from .detector import (ChiSquaredDetector, OracleDetector, SampleLog,
                       nonstationary_fraction, oracle_detector)
from .errors import ConfigError
from .games import (CHANCE, Cartpole, Game, GameState, KuhnPoker, LeducPoker,
                    StackedCartpoleLeduc, TicTacToe, WeightedRps,
                    build_environment)
from .harness import RunConfig, ResultRow, parse_config, run_experiment, write_csv
from .learners import (AbcsLearner, BootCfrLearner, BqlLearner,
                       EsMccfrLearner, MaxCfrLearner, OsMccfrLearner)

__version__ = "0.1.0"
