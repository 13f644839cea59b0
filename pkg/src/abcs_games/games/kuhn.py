"""Kuhn poker.

Three cards (J=0, Q=1, K=2), one card each, no duplicates, ante 1. Player 0
checks or bets 1; facing a bet the opponent folds or calls; after a check
player 1 may bet 1, and player 0 then folds or calls. Showdown pays the pot
to the higher card. The deal is a single chance node over the 6 ordered card
pairs (1/6 each).
"""

from __future__ import annotations

from .base import CHANCE, Game, GameState

DEALS = ((0, 1), (0, 2), (1, 0), (1, 2), (2, 0), (2, 1))
_DEAL_OUTCOMES = tuple((i, 1.0 / 6.0) for i in range(6))
_TWO_ACTIONS = (0, 1)

# Betting grammar (actions are dense 0/1 at every decision):
#   ()              player 0: 0=check 1=bet
#   (check,)        player 1: 0=check 1=bet
#   (bet,)          player 1: 0=fold  1=call
#   (check, bet)    player 0: 0=fold  1=call
CHECK, BET = 0, 1
FOLD, CALL = 0, 1


class KuhnState(GameState):
    __slots__ = ("game", "cards", "bets")

    def __init__(self, game, parent, last_action, cards, bets):
        super().__init__(parent, last_action)
        self.game = game
        self.cards = cards          # None before the deal, else (card0, card1)
        self.bets = bets            # betting actions so far

    def is_terminal(self):
        b = self.bets
        n = len(b)
        if n == 2:
            return b != (CHECK, BET)
        return n == 3

    def current_player(self):
        if self.cards is None:
            return CHANCE
        return len(self.bets) % 2

    def legal_actions(self):
        return _TWO_ACTIONS

    def chance_outcomes(self):
        if self.cards is not None:
            raise ValueError("chance outcomes queried at a player node")
        return _DEAL_OUTCOMES

    def apply_action(self, action):
        if self.cards is None:
            child = KuhnState(self.game, self, action, DEALS[action], ())
            return child, self.game.zero_rewards()
        bets = self.bets + (action,)
        child = KuhnState(self.game, self, action, self.cards, bets)
        if child.is_terminal():
            return child, self._terminal_rewards(bets)
        return child, self.game.zero_rewards()

    def _terminal_rewards(self, bets):
        c0, c1 = self.cards
        if bets == (BET, FOLD):
            r0 = 1.0
        elif bets == (CHECK, BET, FOLD):
            r0 = -1.0
        else:
            pot = 2.0 if bets in ((BET, CALL), (CHECK, BET, CALL)) else 1.0
            r0 = pot if c0 > c1 else -pot
        return (r0, -r0)

    def infostate_key(self, player):
        return (self.game.tag, player, self.cards[player], self.bets)


class KuhnPoker(Game):
    name = "kuhn"
    tag = 2
    num_agents = 2
    perfect_recall = True

    def initial_state(self):
        return KuhnState(self, None, None, None, ())
