"""Core extensive-form game abstraction shared by every environment and learner.

A ``Game`` is an immutable rule object; all per-episode data lives in state
objects produced by ``initial_state`` / ``apply_action``. States are immutable:
applying an action returns a fresh successor plus the per-player immediate
rewards of that transition. Each state keeps a link to its parent, so the
canonical identity of a history (the action path from the root) can be
reconstructed without storing it on every node.

Conventions used throughout the package:

* agents are numbered ``0 .. num_agents-1``; the chance player is ``CHANCE``;
* action ids are dense per decision point: ``0 .. len(legal_actions)-1``;
* infostate keys are hashable tuples whose first element is an environment
  tag and whose second element is the acting player, so keys from different
  players or environments never collide;
* terminal states expose no legal actions and must not be asked for a player.
"""

from __future__ import annotations

CHANCE = -1


class GameState:
    """Base class for immutable environment states.

    Subclasses add their own payload slots and implement the query methods.
    ``parent`` / ``last_action`` form a linked list back to the root and are
    only walked by non-hot-path helpers (canonical keys, tests, evaluation).
    """

    __slots__ = ("parent", "last_action", "step_index")

    def __init__(self, parent, last_action):
        self.parent = parent
        self.last_action = last_action
        self.step_index = 0 if parent is None else parent.step_index + 1

    # -- queries ------------------------------------------------------------
    def is_terminal(self) -> bool:
        raise NotImplementedError

    def current_player(self) -> int:
        """Acting player (an agent index or CHANCE). Undefined on terminals."""
        raise NotImplementedError

    def legal_actions(self):
        """Non-empty tuple of dense action ids, in a deterministic order."""
        raise NotImplementedError

    def chance_outcomes(self):
        """Tuple of (action, probability) pairs; only at chance nodes."""
        raise NotImplementedError

    def apply_action(self, action: int):
        """Return (successor state, per-player immediate reward tuple)."""
        raise NotImplementedError

    def infostate_key(self, player: int):
        """Hashable observation identity for ``player`` (the acting agent)."""
        raise NotImplementedError

    def hidden_repr(self):
        """Canonical hidden-state identity used for detector categories.

        Discrete games return the full action path; continuous-state games
        return their discretized surrogate.
        """
        return self.action_path()

    # -- derived helpers ----------------------------------------------------
    def action_path(self) -> tuple:
        """Action indices taken from the root to reach this history."""
        rev = []
        node = self
        while node.parent is not None:
            rev.append(node.last_action)
            node = node.parent
        rev.reverse()
        return tuple(rev)

    def canonical_key(self) -> bytes:
        """Injective byte identity of this history within its environment.

        Format: one environment tag byte, a 4-byte big-endian path length,
        then one byte per action index.
        """
        path = self.action_path()
        return bytes([self.game.tag]) + len(path).to_bytes(4, "big") + bytes(path)

    # Subclasses must expose a ``game`` attribute referencing their rule object.


class Game:
    """Immutable rule object. Safe to share across runs and threads."""

    name: str = "game"
    tag: int = 0
    num_agents: int = 1
    # Environments where infostates do not satisfy perfect recall; learners
    # that branch (ABCs / MAX-CFR) deduplicate per-iteration expansion there.
    perfect_recall: bool = True

    _zero_cache = None

    def initial_state(self) -> GameState:
        raise NotImplementedError

    def zero_rewards(self) -> tuple:
        z = self._zero_cache
        if z is None:
            z = self._zero_cache = (0.0,) * self.num_agents
        return z

    def br_memo_key(self, state: GameState):
        """Memoization identity for best-response evaluation.

        Defaults to the exact history; games whose future depends on a
        smaller sufficient state (e.g. a board) may override.
        """
        return state.action_path()


def replay(game: Game, actions) -> GameState:
    """Apply a sequence of actions from the initial state; return the end state."""
    state = game.initial_state()
    for a in actions:
        state, _ = state.apply_action(a)
    return state


def enumerate_states(game: Game):
    """Yield every reachable state (depth-first, deterministic order)."""
    stack = [game.initial_state()]
    while stack:
        state = stack.pop()
        yield state
        if state.is_terminal():
            continue
        if state.current_player() == CHANCE:
            actions = [a for a, _ in state.chance_outcomes()]
        else:
            actions = state.legal_actions()
        for a in reversed(actions):
            child, _ = state.apply_action(a)
            stack.append(child)


def terminal_rewards(game: Game):
    """Yield (terminal state, cumulative per-player reward) over the full tree."""
    zero = game.zero_rewards()

    def walk(state, acc):
        if state.is_terminal():
            yield state, acc
            return
        if state.current_player() == CHANCE:
            actions = [a for a, _ in state.chance_outcomes()]
        else:
            actions = state.legal_actions()
        for a in actions:
            child, rew = state.apply_action(a)
            yield from walk(child, tuple(x + y for x, y in zip(acc, rew)))

    yield from walk(game.initial_state(), zero)
