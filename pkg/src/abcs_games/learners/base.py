"""Shared learner machinery: RNG streams, frozen policies, GetChild.

Multi-agent protocol: one iteration freezes every player's policy, then runs
one episode per player in player order. Each episode simulates the other
players and chance from the frozen policies, so from the updating player's
point of view the environment is a single-agent POMDP for that iteration.

RNG draw order (per run, three independent streams; this documented order is
what makes shared-seed equivalence tests exact):

* ``world``  — chance outcomes and opponent-action draws, one uniform per
  sampled move, in traversal order;
* ``agent``  — the updating player's own draws: BQL/OS behavior actions and
  the adaptive learner's trajectory action (an epsilon draw first when
  epsilon > 0, then the action draw);
* ``detector`` — one uniform per stationarity check, in action order.

Freezing is done copy-on-first-use rather than by copying tables: every
learner computes (and thereby caches) an infostate's distribution before the
first mutation it performs there, so a cached entry always holds the
iteration-start distribution and later readers — including the other
player's episode — see frozen values.
"""

from __future__ import annotations

import random

from ..games.base import CHANCE
from .policies import argmax_index, sample_index, sample_outcome
from .tables import AveragePolicyTable, QTable


class Streams:
    """Named, independently seeded RNG streams for one run."""

    def __init__(self, seed):
        self.world = random.Random(f"{seed}:world")
        self.agent = random.Random(f"{seed}:agent")
        self.detector = random.Random(f"{seed}:detector")


class FrozenPolicyCache:
    """Iteration-start distributions, captured on first use per infostate."""

    def __init__(self, compute):
        self._compute = compute
        self._probs = {}

    def begin_iteration(self) -> None:
        self._probs.clear()

    def probs(self, player, skey, n_actions):
        p = self._probs.get(skey)
        if p is None:
            p = self._probs[skey] = self._compute(player, skey, n_actions)
        return p


class Learner:
    """Base class owning one run's tables, streams, and node accounting."""

    name = "learner"

    def __init__(self, game, seed, gamma: float = 1.0, num=float):
        self.game = game
        self.num = num
        self.zero = num(0.0)
        self.gamma = num(gamma)
        self.streams = Streams(seed)
        self.cache = FrozenPolicyCache(self._policy_probs)
        self.q = QTable(self.zero)
        self.avg = AveragePolicyTable()
        self.nodes_touched = 0
        self.iteration = 0
        self.detector = None
        # Branching learners deduplicate per-iteration expansion on games
        # without perfect recall.
        self.dedup = not game.perfect_recall

    # -- iteration protocol ---------------------------------------------------
    def run_iteration(self) -> None:
        self.iteration += 1
        self.cache.begin_iteration()
        for player in range(self.game.num_agents):
            self._episode(player)

    def run_until(self, node_budget: int) -> None:
        while self.nodes_touched < node_budget:
            self.run_iteration()

    def _episode(self, player: int) -> None:
        raise NotImplementedError

    def _policy_probs(self, player, skey, n_actions):
        """Current distribution at an infostate, from live tables."""
        raise NotImplementedError

    # -- traversal helpers ------------------------------------------------------
    def skip_to_decision(self, player, state, action):
        """Apply ``action`` and sample through to ``player``'s next turn.

        Chance and other agents move under the frozen policies; returns
        (next state, accumulated reward for ``player`` discounted within the
        skip, terminal flag). Every produced state counts one node.
        """
        world = self.streams.world
        cache = self.cache
        num = self.num
        g = self.gamma
        state, rew = state.apply_action(action)
        self.nodes_touched += 1
        r = num(rew[player])
        factor = g
        while not state.is_terminal():
            p = state.current_player()
            if p == player:
                return state, r, False
            if p == CHANCE:
                a = sample_outcome(state.chance_outcomes(), world.random())
            else:
                probs = cache.probs(p, state.infostate_key(p),
                                    len(state.legal_actions()))
                a = sample_index(probs, world.random())
            state, rew = state.apply_action(a)
            self.nodes_touched += 1
            r = r + factor * num(rew[player])
            factor = factor * g
        return state, r, True

    def get_child(self, player, state, action, q_sa, child_table=None):
        """One-step lookahead of Algorithm GetChild.

        Samples (h', s') through the frozen policies, then forms the
        bootstrapped temporal difference against the greedy child value:
        nabla = (r + gamma * Q(s', a*)) - Q(s, a), with Q(s', .) identically
        zero at terminals. Returns (h', s' key or None, a* or None, nabla,
        r, terminal flag).
        """
        child, r, terminal = self.skip_to_decision(player, state, action)
        if terminal:
            return child, None, None, r - q_sa, r, True
        skey2 = child.infostate_key(player)
        table = self.q if child_table is None else child_table
        row2 = table.row(skey2, len(child.legal_actions()))
        a_star = argmax_index(row2)
        nabla = (r + self.gamma * row2[a_star]) - q_sa
        return child, skey2, a_star, nabla, r, False

    def _traj_action(self, probs, n_actions):
        """Sample the trajectory action from the frozen policy (agent stream)."""
        return sample_index(probs, self.streams.agent.random())

    def advance_to_decision(self, player):
        """Fresh episode start: initial state, skipped to ``player``'s turn.

        Returns the decision state, or None if the episode ended first.
        """
        state = self.game.initial_state()
        self.nodes_touched += 1
        world = self.streams.world
        cache = self.cache
        while not state.is_terminal():
            p = state.current_player()
            if p == player:
                return state
            if p == CHANCE:
                a = sample_outcome(state.chance_outcomes(), world.random())
            else:
                probs = cache.probs(p, state.infostate_key(p),
                                    len(state.legal_actions()))
                a = sample_index(probs, world.random())
            state, _ = state.apply_action(a)
            self.nodes_touched += 1
        return None

    # -- evaluation accessors ---------------------------------------------------
    def average_policy(self):
        """Normalized average policy: fn(player, skey, n_actions) -> probs."""
        avg = self.avg

        def probs(player, skey, n_actions):
            return avg.probs(skey, n_actions)

        return probs

    def greedy_policy(self):
        """Deterministic argmax-Q policy (lowest index breaks ties)."""
        table = self.q

        def probs(player, skey, n_actions):
            row = table.q.get(skey)
            out = [0.0] * n_actions
            out[0 if row is None else argmax_index(row)] = 1.0
            return out

        return probs

