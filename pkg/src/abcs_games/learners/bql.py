"""Boltzmann Q-learning.

Each iteration freezes all policies, then samples one trajectory per agent;
every visited (s, a) gets the temporal-difference update
Q <- (1-a) Q + a (r + gamma * max_a' Q(s', a')) with a = 1/visits, so the
table holds exact running averages of the targets. The behavior policy is a
softmax over the average Q values at the scheduled temperature; targets read
live Q (classic off-policy Q-learning).
"""

from __future__ import annotations

from ..games.base import CHANCE
from .base import Learner
from .policies import sample_index, sample_outcome, softmax_policy
from .schedules import GeometricSchedule, bql_temperature_default


class BqlLearner(Learner):
    name = "bql"

    def __init__(self, game, seed, gamma: float = 1.0, num=float,
                 temperature: GeometricSchedule | None = None):
        super().__init__(game, seed, gamma, num)
        self.temperature = temperature or bql_temperature_default()

    def _policy_probs(self, player, skey, n_actions):
        row = self.q.q.get(skey)
        if row is None:
            row = [self.zero] * n_actions
        return softmax_policy(row, self.temperature(self.iteration))

    def _episode(self, player):
        game = self.game
        num = self.num
        g = self.gamma
        world = self.streams.world
        agent = self.streams.agent
        cache = self.cache
        state = game.initial_state()
        self.nodes_touched += 1
        pending = None          # (skey, action, n_actions, reward acc, factor)
        reach = 1.0
        while True:
            if state.is_terminal():
                if pending is not None:
                    self._td(pending, None)
                return
            p = state.current_player()
            if p == player:
                skey = state.infostate_key(player)
                n_actions = len(state.legal_actions())
                if pending is not None:
                    self._td(pending, skey)
                probs = cache.probs(player, skey, n_actions)
                self.avg.add(skey, probs, reach)
                a = sample_index(probs, agent.random())
                reach *= probs[a]
                state, rew = state.apply_action(a)
                self.nodes_touched += 1
                pending = [skey, a, n_actions, num(rew[player]), g]
            else:
                if p == CHANCE:
                    a = sample_outcome(state.chance_outcomes(), world.random())
                else:
                    probs = cache.probs(p, state.infostate_key(p),
                                        len(state.legal_actions()))
                    a = sample_index(probs, world.random())
                state, rew = state.apply_action(a)
                self.nodes_touched += 1
                if pending is not None:
                    pending[3] = pending[3] + pending[4] * num(rew[player])
                    pending[4] = pending[4] * g

    def _td(self, pending, next_skey):
        skey, a, n_actions, r, _ = pending
        if next_skey is None:
            target = r
        else:
            row2 = self.q.q.get(next_skey)
            target = r if row2 is None else r + self.gamma * max(row2)
        counts = self.q.pair_counts(skey, n_actions)
        counts[a] += 1
        row = self.q.row(skey, n_actions)
        row[a] = row[a] + (target - row[a]) / counts[a]
