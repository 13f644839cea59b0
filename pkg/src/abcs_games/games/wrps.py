"""Weighted rock-paper-scissors.

Simultaneous-move RPS encoded sequentially with imperfect information: agent 0
commits first, agent 1 moves without observing agent 0's choice (agent 1's
infostate key excludes the committed action). Winning with Rock pays 2, any
other win pays 1, draws pay 0; losses mirror wins (zero-sum).
"""

from __future__ import annotations

from .base import CHANCE, Game, GameState

ROCK, PAPER, SCISSORS = 0, 1, 2

# payoff[a0][a1] = agent 0's terminal reward
PAYOFF = (
    (0.0, -1.0, 2.0),
    (1.0, 0.0, -1.0),
    (-2.0, 1.0, 0.0),
)

_ACTIONS = (0, 1, 2)


class WrpsState(GameState):
    __slots__ = ("game", "moves")

    def __init__(self, game, parent, last_action, moves):
        super().__init__(parent, last_action)
        self.game = game
        self.moves = moves

    def is_terminal(self):
        return len(self.moves) == 2

    def current_player(self):
        return len(self.moves)

    def legal_actions(self):
        return _ACTIONS

    def chance_outcomes(self):
        raise ValueError("weighted RPS has no chance nodes")

    def apply_action(self, action):
        moves = self.moves + (action,)
        child = WrpsState(self.game, self, action, moves)
        if len(moves) == 2:
            r0 = PAYOFF[moves[0]][moves[1]]
            return child, (r0, -r0)
        return child, self.game.zero_rewards()

    def infostate_key(self, player):
        # Neither player has observed anything when acting.
        return (self.game.tag, player)


class WeightedRps(Game):
    name = "wrps"
    tag = 1
    num_agents = 2
    perfect_recall = True

    def initial_state(self):
        return WrpsState(self, None, None, ())
