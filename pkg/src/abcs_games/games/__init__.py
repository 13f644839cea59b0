from .base import CHANCE, Game, GameState, enumerate_states, replay, terminal_rewards
from .cartpole import Cartpole, discretize, physics_step
from .kuhn import KuhnPoker
from .leduc import LeducPoker
from .registry import ENV_NAMES, build_environment
from .stacked import StackedCartpoleLeduc
from .tictactoe import TicTacToe
from .wrps import WeightedRps

__all__ = [
    "CHANCE", "Game", "GameState", "enumerate_states", "replay",
    "terminal_rewards", "Cartpole", "discretize", "physics_step", "KuhnPoker",
    "LeducPoker", "ENV_NAMES", "build_environment", "StackedCartpoleLeduc",
    "TicTacToe", "WeightedRps",
]
