"""MAX-CFR: bootstrapped external-sampling CFR.

Every action at every visited infostate is branched. Each action's one-step
temporal difference from GetChild is corrected by CNT(s') times the child's
returned difference (the nonstationarity correction), and the node reports
the difference at its post-update greedy action. Policy is Hedge over
cumulative values: softmax(Q * CNT) at the scheduled temperature (1 by
default). On games without perfect recall an infostate is expanded at most
once per episode; re-encounters are leaves.
"""

from __future__ import annotations

from .base import Learner
from .policies import argmax_index, hedge_policy
from .schedules import GeometricSchedule, maxcfr_temperature_default


class MaxCfrLearner(Learner):
    name = "max-cfr"

    def __init__(self, game, seed, gamma: float = 1.0, num=float,
                 temperature: GeometricSchedule | None = None):
        super().__init__(game, seed, gamma, num)
        self.temperature = temperature or maxcfr_temperature_default()
        self._seen = set()

    def _policy_probs(self, player, skey, n_actions):
        row = self.q.q.get(skey)
        if row is None:
            row = [self.zero] * n_actions
        return hedge_policy(row, self.temperature(self.iteration),
                            self.q.state_count(skey))

    def _episode(self, player):
        state = self.advance_to_decision(player)
        if state is None:
            return
        if self.dedup:
            self._seen = set()
        self._visit(player, state, 1.0)

    def _visit(self, player, state, reach):
        """Expand one infostate; returns the applied greedy-action delta.

        The recursion hands back the post-step delta actually added to the
        child's greedy entry, so the caller's CNT(s') * delta correction
        reconstructs the child's raw difference and the update telescopes to
        a freshly sampled greedy-continuation value (a pre-step difference
        here would double-count CNT(s') and never converge).
        """
        skey = state.infostate_key(player)
        if self.dedup:
            if skey in self._seen:
                return self.zero
            self._seen.add(skey)
        n_actions = len(state.legal_actions())
        probs = self.cache.probs(player, skey, n_actions)
        cnt = self.q.bump_state(skey)
        self.avg.add(skey, probs, reach)
        row = self.q.row(skey, n_actions)
        deltas = []
        for a in range(n_actions):
            child, skey2, a_star, nabla, r, terminal = self.get_child(
                player, state, a, row[a])
            if not terminal:
                child_delta = self._visit(player, child, reach * probs[a])
                nabla = nabla + self.q.cnt_state.get(skey2, 0) * child_delta
            delta = nabla / cnt
            row[a] = row[a] + delta
            deltas.append(delta)
        return deltas[argmax_index(row)]
