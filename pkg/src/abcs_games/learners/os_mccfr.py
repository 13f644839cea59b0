"""Outcome-sampling MCCFR with Hedge.

One trajectory per episode. The updating player acts from the epsilon-mixed
behavior policy b = (1 - eps) * pi + eps * uniform; opponents and chance are
sampled from the frozen policies. Each visited (s, a) accumulates the
importance-corrected sampled counterfactual value
    u(from s onward) * (own pi-reach below the child) / (own b-reach of the
    whole trajectory),
into a cumulative table; the policy is a softmax over those cumulative
values (Hedge, tau_n = 1). Full support of b makes the correction finite.
"""

from __future__ import annotations

from ..games.base import CHANCE
from .base import Learner
from .policies import hedge_policy, sample_index, sample_outcome
from .schedules import OS_MCCFR_EPSILON_DEFAULT


class OsMccfrLearner(Learner):
    name = "os-mccfr"

    def __init__(self, game, seed, gamma: float = 1.0, num=float,
                 epsilon_explore: float = OS_MCCFR_EPSILON_DEFAULT):
        super().__init__(game, seed, gamma, num)
        if not 0.0 < epsilon_explore <= 1.0:
            raise ValueError("epsilon_explore must be in (0, 1]")
        self.epsilon_explore = epsilon_explore

    def _policy_probs(self, player, skey, n_actions):
        row = self.q.q.get(skey)
        if row is None:
            row = [self.zero] * n_actions
        return hedge_policy(row, 1.0, 1)

    def _episode(self, player):
        num = self.num
        g = self.gamma
        eps = self.epsilon_explore
        world = self.streams.world
        agent = self.streams.agent
        state = self.game.initial_state()
        self.nodes_touched += 1
        rewards = []            # player's reward per transition, in order
        own_steps = []          # (transition index, skey, n_actions, a, pi_a, b_a)
        reach_pi = 1.0
        behavior_reach = 1.0
        while not state.is_terminal():
            p = state.current_player()
            if p == player:
                skey = state.infostate_key(player)
                n_actions = len(state.legal_actions())
                probs = self.cache.probs(player, skey, n_actions)
                mix = eps / n_actions
                keep = 1.0 - eps
                behavior = [keep * x + mix for x in probs]
                a = sample_index(behavior, agent.random())
                self.avg.add(skey, probs, reach_pi)
                own_steps.append((len(rewards), skey, n_actions, a, probs[a],
                                  behavior[a]))
                reach_pi *= probs[a]
                behavior_reach *= behavior[a]
            elif p == CHANCE:
                a = sample_outcome(state.chance_outcomes(), world.random())
            else:
                probs = self.cache.probs(p, state.infostate_key(p),
                                         len(state.legal_actions()))
                a = sample_index(probs, world.random())
            state, rew = state.apply_action(a)
            self.nodes_touched += 1
            rewards.append(rew[player])
        # Suffix values: utility-to-go from each transition onward.
        suffix = [self.zero] * len(rewards)
        acc = self.zero
        for i in range(len(rewards) - 1, -1, -1):
            acc = num(rewards[i]) + g * acc
            suffix[i] = acc
        # Importance-corrected cumulative value updates, deepest first.
        tail_pi = 1.0
        for idx, skey, n_actions, a, pi_a, b_a in reversed(own_steps):
            row = self.q.row(skey, n_actions)
            row[a] = row[a] + suffix[idx] * num(tail_pi / behavior_reach)
            counts = self.q.pair_counts(skey, n_actions)
            counts[a] += 1
            tail_pi *= pi_a
