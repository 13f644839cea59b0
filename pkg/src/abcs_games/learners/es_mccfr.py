"""External-sampling MCCFR with Hedge.

For the updating player every action is branched; all other players and
chance are sampled from the frozen policies. Sampled counterfactual values
(utility-to-go weighted by the player's own policy below the child) are
folded into per-(s, a) running averages, so Q * CNT is the cumulative value
and the Hedge policy softmax(Q * tau_n * CNT) is a softmax over cumulative
values — which shift-invariance makes equivalent to Hedge on cumulative
regrets.
"""

from __future__ import annotations

from ..games.base import CHANCE
from .base import Learner
from .policies import field_probs, hedge_policy, sample_index, sample_outcome
from .schedules import GeometricSchedule, maxcfr_temperature_default


class EsMccfrLearner(Learner):
    name = "es-mccfr"

    def __init__(self, game, seed, gamma: float = 1.0, num=float,
                 temperature: GeometricSchedule | None = None):
        super().__init__(game, seed, gamma, num)
        self.temperature = temperature or maxcfr_temperature_default()

    def _policy_probs(self, player, skey, n_actions):
        row = self.q.q.get(skey)
        if row is None:
            row = [self.zero] * n_actions
        return hedge_policy(row, self.temperature(self.iteration),
                            self.q.state_count(skey))

    def _episode(self, player):
        state = self.game.initial_state()
        self.nodes_touched += 1
        self._walk(player, state, 1.0)

    def _walk(self, player, state, reach):
        """Sampled value-to-go of ``state`` for ``player``; updates en route."""
        if state.is_terminal():
            return self.zero
        num = self.num
        g = self.gamma
        p = state.current_player()
        if p != player:
            world = self.streams.world
            if p == CHANCE:
                a = sample_outcome(state.chance_outcomes(), world.random())
            else:
                probs = self.cache.probs(p, state.infostate_key(p),
                                         len(state.legal_actions()))
                a = sample_index(probs, world.random())
            child, rew = state.apply_action(a)
            self.nodes_touched += 1
            return num(rew[player]) + g * self._walk(player, child, reach)
        skey = state.infostate_key(player)
        n_actions = len(state.legal_actions())
        probs = self.cache.probs(player, skey, n_actions)
        cnt = self.q.bump_state(skey)
        self.avg.add(skey, probs, reach)
        row = self.q.row(skey, n_actions)
        fprobs = field_probs(probs, num)
        total = self.zero
        for a in range(n_actions):
            child, rew = state.apply_action(a)
            self.nodes_touched += 1
            v = num(rew[player]) + g * self._walk(player, child, reach * probs[a])
            row[a] = row[a] + (v - row[a]) / cnt
            total = total + fprobs[a] * v
        return total
