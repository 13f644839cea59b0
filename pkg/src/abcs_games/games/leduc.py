"""Leduc poker.

Six cards (three ranks, two suits), one private card each, ante 1, two betting
rounds with at most two raises per round; raises add 2 chips in round one and
4 in round two. After round one a public board card is revealed from the four
remaining cards. At showdown a private card pairing the board wins; otherwise
the higher rank wins and equal ranks split (net 0).

Betting within a round (player 0 acts first in both rounds):
  nothing owed:  0=check 1=raise
  facing a bet:  0=fold  1=call  2=raise (while raises remain)
A round ends on a call or on the second consecutive check.
"""

from __future__ import annotations

from .base import CHANCE, Game, GameState

NUM_CARDS = 6
RAISE_SIZE = (2, 4)
MAX_RAISES = 2

# Phases of play.
DEAL0, DEAL1, ROUND1, BOARD, ROUND2, OVER = range(6)

# Semantic betting tokens recorded in observation histories.
K_CHECK, K_CALL, K_RAISE, K_FOLD = "k", "c", "r", "f"

_CHECK_OR_RAISE = (0, 1)
_FOLD_CALL = (0, 1)
_FOLD_CALL_RAISE = (0, 1, 2)


def rank(card: int) -> int:
    return card >> 1


class LeducState(GameState):
    __slots__ = (
        "game", "phase", "cards", "board", "bets1", "bets2",
        "owed", "raises", "to_act", "contrib", "fold_loser",
    )

    def __init__(self, game, parent, last_action, phase, cards, board, bets1,
                 bets2, owed, raises, to_act, contrib, fold_loser):
        super().__init__(parent, last_action)
        self.game = game
        self.phase = phase
        self.cards = cards
        self.board = board
        self.bets1 = bets1
        self.bets2 = bets2
        self.owed = owed
        self.raises = raises
        self.to_act = to_act
        self.contrib = contrib
        self.fold_loser = fold_loser

    # -- structure ----------------------------------------------------------
    def is_terminal(self):
        return self.phase == OVER

    def current_player(self):
        if self.phase in (DEAL0, DEAL1, BOARD):
            return CHANCE
        return self.to_act

    def legal_actions(self):
        if self.owed == 0:
            return _CHECK_OR_RAISE
        if self.raises < MAX_RAISES:
            return _FOLD_CALL_RAISE
        return _FOLD_CALL

    def _remaining(self):
        used = set()
        if self.cards is not None:
            used.update(c for c in self.cards if c is not None)
        return [c for c in range(NUM_CARDS) if c not in used]

    def chance_outcomes(self):
        if self.phase not in (DEAL0, DEAL1, BOARD):
            raise ValueError("chance outcomes queried at a player node")
        remaining = self._remaining()
        p = 1.0 / len(remaining)
        return tuple((i, p) for i in range(len(remaining)))

    # -- transitions ----------------------------------------------------------
    def apply_action(self, action):
        game = self.game
        phase = self.phase
        if phase == DEAL0:
            card = self._remaining()[action]
            child = LeducState(game, self, action, DEAL1, (card, None), None,
                               (), (), 0, 0, 0, (1, 1), None)
            return child, game.zero_rewards()
        if phase == DEAL1:
            card = self._remaining()[action]
            child = LeducState(game, self, action, ROUND1,
                               (self.cards[0], card), None,
                               (), (), 0, 0, 0, self.contrib, None)
            return child, game.zero_rewards()
        if phase == BOARD:
            card = self._remaining()[action]
            child = LeducState(game, self, action, ROUND2, self.cards, card,
                               self.bets1, (), 0, 0, 0, self.contrib, None)
            return child, game.zero_rewards()
        return self._apply_bet(action)

    def _apply_bet(self, action):
        game = self.game
        me = self.to_act
        opp = 1 - me
        in_round1 = self.phase == ROUND1
        bets = self.bets1 if in_round1 else self.bets2
        contrib = list(self.contrib)
        owed, raises = self.owed, self.raises
        round_over = False
        fold_loser = None
        phase = self.phase

        if owed == 0:
            if action == 0:
                token = K_CHECK
                round_over = bool(bets) and bets[-1] == K_CHECK
            else:
                token = K_RAISE
                contrib[me] += RAISE_SIZE[0 if in_round1 else 1]
                owed = RAISE_SIZE[0 if in_round1 else 1]
                raises += 1
        else:
            if action == 0:
                token = K_FOLD
                fold_loser = me
            elif action == 1:
                token = K_CALL
                contrib[me] += owed
                owed = 0
                round_over = True
            else:
                token = K_RAISE
                size = RAISE_SIZE[0 if in_round1 else 1]
                contrib[me] += owed + size
                owed = size
                raises += 1

        bets = bets + (token,)
        bets1 = bets if in_round1 else self.bets1
        bets2 = self.bets2 if in_round1 else bets

        if fold_loser is not None:
            phase = OVER
        elif round_over:
            phase = BOARD if in_round1 else OVER
            owed, raises = 0, 0
        child = LeducState(self.game, self, action, phase, self.cards,
                           self.board, bets1, bets2, owed, raises, opp,
                           tuple(contrib), fold_loser)
        if phase == OVER:
            return child, self._terminal_rewards(tuple(contrib), fold_loser)
        return child, game.zero_rewards()

    def _terminal_rewards(self, contrib, fold_loser):
        if fold_loser is not None:
            r0 = contrib[1] if fold_loser == 1 else -contrib[0]
            return (float(r0), float(-r0))
        winner = self._showdown_winner()
        if winner is None:
            return (0.0, 0.0)
        r = float(contrib[1 - winner])
        return (r, -r) if winner == 0 else (-r, r)

    def _showdown_winner(self):
        r0, r1, rb = rank(self.cards[0]), rank(self.cards[1]), rank(self.board)
        if r0 == rb:
            return 0
        if r1 == rb:
            return 1
        if r0 == r1:
            return None
        return 0 if r0 > r1 else 1

    # -- observations ---------------------------------------------------------
    def infostate_key(self, player):
        return (self.game.tag, player, self.cards[player], self.board,
                self.bets1, self.bets2)


class LeducPoker(Game):
    name = "leduc"
    tag = 3
    num_agents = 2
    perfect_recall = True

    def initial_state(self):
        return LeducState(self, None, None, DEAL0, None, None, (), (),
                          0, 0, 0, (1, 1), None)
