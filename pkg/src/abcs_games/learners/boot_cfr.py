"""BOOTCFR: external-sampling MCCFR rewritten as bootstrapped deltas.

Traversal and current policy are exactly MAX-CFR's; the one difference is
the evaluation policy used to propagate a child's worth to its parent: the
pre-update softmax over the child's values (the policy the child itself just
played), not the post-update greedy action. With the Hedge policy and
running-average tables this is algebraically identical to external-sampling
MCCFR — the equivalence tests check that identity exactly over rationals.
"""

from __future__ import annotations

from .base import Learner
from .policies import field_probs, hedge_policy
from .schedules import GeometricSchedule, maxcfr_temperature_default


class BootCfrLearner(Learner):
    name = "bootcfr"

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
        state = self.advance_to_decision(player)
        if state is not None:
            self._visit(player, state, 1.0)

    def _visit(self, player, state, reach):
        """Expand one infostate; returns (deltas, pre-update row, probs, CNT)."""
        num = self.num
        g = self.gamma
        skey = state.infostate_key(player)
        n_actions = len(state.legal_actions())
        probs = self.cache.probs(player, skey, n_actions)
        cnt = self.q.bump_state(skey)
        self.avg.add(skey, probs, reach)
        row = self.q.row(skey, n_actions)
        q_old = list(row)
        deltas = []
        for a in range(n_actions):
            child, r, terminal = self.skip_to_decision(player, state, a)
            if terminal:
                delta = (r - row[a]) / cnt
            else:
                d2, q_old2, probs2, cnt2 = self._visit(player, child,
                                                       reach * probs[a])
                pi_eval = field_probs(probs2, num)
                delta = self.zero
                for a2 in range(len(d2)):
                    nabla = (r + g * q_old2[a2]) - row[a]
                    delta = delta + pi_eval[a2] * ((nabla + cnt2 * d2[a2]) / cnt)
            row[a] = row[a] + delta
            deltas.append(delta)
        return deltas, q_old, probs, cnt
