"""TicTacToe with board-keyed infostates.

Perfect-information; both players observe the board. Infostates depend only
on the current board (not the move order), so the game does not satisfy
perfect recall and branching learners deduplicate per-iteration expansion.
Action ids are dense indices into the ordered list of empty cells.
"""

from __future__ import annotations

from .base import Game, GameState

LINES = (
    (0, 1, 2), (3, 4, 5), (6, 7, 8),
    (0, 3, 6), (1, 4, 7), (2, 5, 8),
    (0, 4, 8), (2, 4, 6),
)

_RANGES = tuple(tuple(range(n)) for n in range(10))


def winner(board):
    for a, b, c in LINES:
        v = board[a]
        if v and v == board[b] and v == board[c]:
            return v - 1
    return None


class TicTacToeState(GameState):
    __slots__ = ("game", "board", "to_move", "win")

    def __init__(self, game, parent, last_action, board, to_move, win):
        super().__init__(parent, last_action)
        self.game = game
        self.board = board          # 9-tuple: 0 empty, 1 = player 0, 2 = player 1
        self.to_move = to_move
        self.win = win

    def is_terminal(self):
        return self.win is not None or 0 not in self.board

    def current_player(self):
        return self.to_move

    def empty_cells(self):
        return [i for i, v in enumerate(self.board) if v == 0]

    def legal_actions(self):
        return _RANGES[self.board.count(0)]

    def chance_outcomes(self):
        raise ValueError("tictactoe has no chance nodes")

    def apply_action(self, action):
        cell = self.empty_cells()[action]
        board = list(self.board)
        board[cell] = self.to_move + 1
        board = tuple(board)
        win = winner(board)
        child = TicTacToeState(self.game, self, action, board,
                               1 - self.to_move, win)
        if win is not None:
            r0 = 1.0 if win == 0 else -1.0
            return child, (r0, -r0)
        return child, self.game.zero_rewards()

    def infostate_key(self, player):
        return (self.game.tag, player, self.board)


class TicTacToe(Game):
    name = "tictactoe"
    tag = 5
    num_agents = 2
    perfect_recall = False

    def initial_state(self):
        return TicTacToeState(self, None, None, (0,) * 9, 0, None)

    def br_memo_key(self, state):
        # The board is a sufficient state: move order never affects the future.
        return state.board
