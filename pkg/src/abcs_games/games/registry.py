"""Environment construction by name."""

from __future__ import annotations

from ..errors import ConfigError
from .cartpole import Cartpole
from .kuhn import KuhnPoker
from .leduc import LeducPoker
from .stacked import StackedCartpoleLeduc
from .tictactoe import TicTacToe
from .wrps import WeightedRps

ENV_NAMES = ("wrps", "kuhn", "leduc", "cartpole", "stacked", "tictactoe")


def build_environment(name: str, termination_probability: float | None = None):
    """Build a game by harness name; unknown names raise ConfigError."""
    if name == "wrps":
        return WeightedRps()
    if name == "kuhn":
        return KuhnPoker()
    if name == "leduc":
        return LeducPoker()
    if name == "cartpole":
        return Cartpole(termination_probability
                        if termination_probability is not None else 1.0 / 200.0)
    if name == "stacked":
        return StackedCartpoleLeduc(termination_probability
                                    if termination_probability is not None else 1.0 / 100.0)
    if name == "tictactoe":
        return TicTacToe()
    raise ConfigError(f"unknown environment {name!r}; expected one of {ENV_NAMES}")
