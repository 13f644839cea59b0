"""Discretized Markovian cartpole.

Classic cart-pole control with the reference physics constants, Euler
integration, and two actions (push left / push right). Episodes start from
a root chance node over a fixed table of near-upright states (the reference
environment draws each coordinate uniformly from +-0.05). Every push earns
reward 1 and is followed by an explicit chance gate that ends the episode
with a fixed probability (1/200 standalone), which replaces the usual
hard step limit and makes the environment Markovian; the episode also ends
when the pole angle or cart position leaves its bound. Observations are the
4-tuple of bin indices (10 equal-width bins per dimension, out-of-range
values clamped into the end bins), with no history: the game does not
satisfy perfect recall.
"""

from __future__ import annotations

import math

from .base import CHANCE, Game, GameState

GRAVITY = 9.8
CART_MASS = 1.0
POLE_MASS = 0.1
TOTAL_MASS = CART_MASS + POLE_MASS
POLE_HALF_LENGTH = 0.5
POLEMASS_LENGTH = POLE_MASS * POLE_HALF_LENGTH
FORCE_MAG = 10.0
INTEGRATION_STEP = 0.02

X_THRESHOLD = 2.4
THETA_THRESHOLD = 12 * 2 * math.pi / 360

# Binning ranges: (low, high), 10 equal-width half-open bins each, clamped.
BIN_RANGES = ((-2.4, 2.4), (-3.0, 3.0), (-0.5, 0.5), (-2.0, 2.0))
NUM_BINS = 10

_PUSHES = (0, 1)
CONTINUE, STOP = 0, 1

# The reference environment draws each start coordinate uniformly from
# +-0.05. A fixed equidistributed table keeps episodes reproducible and
# histories identified by their action paths; the root is a chance node
# over these starts.
NUM_INITS = 256


def _init_table():
    import random as _random

    rng = _random.Random("cartpole-init-table")
    return tuple(
        tuple(rng.uniform(-0.05, 0.05) for _ in range(4))
        for _ in range(NUM_INITS))


INIT_STATES = _init_table()


def physics_step(state, action):
    """One Euler step of the reference dynamics; returns (state', failed)."""
    x, x_dot, theta, theta_dot = state
    force = FORCE_MAG if action == 1 else -FORCE_MAG
    costheta = math.cos(theta)
    sintheta = math.sin(theta)
    temp = (force + POLEMASS_LENGTH * theta_dot * theta_dot * sintheta) / TOTAL_MASS
    theta_acc = (GRAVITY * sintheta - costheta * temp) / (
        POLE_HALF_LENGTH * (4.0 / 3.0 - POLE_MASS * costheta * costheta / TOTAL_MASS)
    )
    x_acc = temp - POLEMASS_LENGTH * theta_acc * costheta / TOTAL_MASS
    x = x + INTEGRATION_STEP * x_dot
    x_dot = x_dot + INTEGRATION_STEP * x_acc
    theta = theta + INTEGRATION_STEP * theta_dot
    theta_dot = theta_dot + INTEGRATION_STEP * theta_acc
    failed = abs(x) > X_THRESHOLD or abs(theta) > THETA_THRESHOLD
    return (x, x_dot, theta, theta_dot), failed


def discretize(continuous):
    """Map a continuous 4-tuple to bin indices in 0..9 (clamped)."""
    bins = []
    for value, (lo, hi) in zip(continuous, BIN_RANGES):
        i = int((value - lo) * NUM_BINS / (hi - lo))
        if i < 0:
            i = 0
        elif i > NUM_BINS - 1:
            i = NUM_BINS - 1
        bins.append(i)
    return tuple(bins)


class CartpoleState(GameState):
    __slots__ = ("game", "continuous", "at_gate", "dead", "_bins")

    def __init__(self, game, parent, last_action, continuous, at_gate, dead):
        super().__init__(parent, last_action)
        self.game = game
        self.continuous = continuous       # None until the start is drawn
        self.at_gate = at_gate
        self.dead = dead
        self._bins = None

    def is_terminal(self):
        return self.dead

    def current_player(self):
        if self.at_gate or self.continuous is None:
            return CHANCE
        return 0

    def legal_actions(self):
        return _PUSHES

    def chance_outcomes(self):
        if self.continuous is None:
            return self.game.init_outcomes
        if not self.at_gate:
            raise ValueError("chance outcomes queried at a player node")
        return self.game.gate_outcomes

    def apply_action(self, action):
        game = self.game
        if self.continuous is None:
            child = CartpoleState(game, self, action, INIT_STATES[action],
                                  False, False)
            return child, game.zero_rewards()
        if self.at_gate:
            child = CartpoleState(game, self, action, self.continuous,
                                  False, action == STOP)
            return child, game.zero_rewards()
        nxt, failed = physics_step(self.continuous, action)
        child = CartpoleState(game, self, action, nxt, not failed, failed)
        return child, game.one_reward

    def bins(self):
        if self._bins is None:
            self._bins = discretize(self.continuous)
        return self._bins

    def infostate_key(self, player):
        return (self.game.tag, 0) + self.bins()

    def hidden_repr(self):
        # Pearson's test needs categorical data; the bin cell is the
        # declared surrogate for the continuous hidden state.
        return (self.dead,) + self.bins()


class Cartpole(Game):
    name = "cartpole"
    tag = 4
    num_agents = 1
    perfect_recall = False

    def __init__(self, termination_probability: float = 1.0 / 200.0):
        if not 0.0 < termination_probability < 1.0:
            raise ValueError("termination_probability must be in (0, 1)")
        self.termination_probability = termination_probability
        self.gate_outcomes = (
            (CONTINUE, 1.0 - termination_probability),
            (STOP, termination_probability),
        )
        self.init_outcomes = tuple(
            (i, 1.0 / NUM_INITS) for i in range(NUM_INITS))
        self.one_reward = (1.0,)

    def initial_state(self):
        return CartpoleState(self, None, None, None, False, False)

    def optimal_return(self) -> float:
        """Expected pushes of a never-failing policy (geometric mean length)."""
        return 1.0 / self.termination_probability
