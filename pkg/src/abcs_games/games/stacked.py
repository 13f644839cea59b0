"""Stacked environment: one cartpole episode followed by one Leduc hand.

Agent 0 plays the cartpole phase alone (termination probability 1/100 by
default); when that phase ends (gate stop or physics failure) the state
rolls straight into a fresh Leduc hand between agents 0 and 1, so every
episode decomposes into a cartpole prefix and a Leduc suffix and agent 1
acts (and earns reward) only in the suffix.

Infostate keys and hidden-state categories delegate to the inner games, so
Leduc-phase keys are byte-compatible with the standalone Leduc game (which
is how the harness evaluates the Leduc subgame in isolation) and cartpole
keys with standalone cartpole.
"""

from __future__ import annotations

from .base import CHANCE, Game, GameState
from .cartpole import Cartpole
from .leduc import LeducPoker

CARTPOLE_PHASE, LEDUC_PHASE = 0, 1


class StackedState(GameState):
    __slots__ = ("game", "phase", "inner")

    def __init__(self, game, parent, last_action, phase, inner):
        super().__init__(parent, last_action)
        self.game = game
        self.phase = phase
        self.inner = inner

    def is_terminal(self):
        return self.phase == LEDUC_PHASE and self.inner.is_terminal()

    def current_player(self):
        return self.inner.current_player()

    def legal_actions(self):
        return self.inner.legal_actions()

    def chance_outcomes(self):
        return self.inner.chance_outcomes()

    def apply_action(self, action):
        inner_child, rew = self.inner.apply_action(action)
        if self.phase == CARTPOLE_PHASE:
            if inner_child.is_terminal():
                child = StackedState(self.game, self, action, LEDUC_PHASE,
                                     self.game.leduc.initial_state())
            else:
                child = StackedState(self.game, self, action, CARTPOLE_PHASE,
                                     inner_child)
            return child, (rew[0], 0.0)
        child = StackedState(self.game, self, action, LEDUC_PHASE, inner_child)
        return child, rew

    def infostate_key(self, player):
        return self.inner.infostate_key(player)

    def hidden_repr(self):
        return self.inner.hidden_repr()


class StackedCartpoleLeduc(Game):
    name = "stacked"
    tag = 6
    num_agents = 2
    perfect_recall = False

    def __init__(self, termination_probability: float = 1.0 / 100.0):
        self.cartpole = Cartpole(termination_probability)
        self.leduc = LeducPoker()

    def initial_state(self):
        return StackedState(self, None, None, CARTPOLE_PHASE,
                            self.cartpole.initial_state())
