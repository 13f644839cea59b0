"""Adaptive branching through child stationarity.

At every visited infostate the learner samples one trajectory action from
its Hedge policy (with optional epsilon-exploration) and tests every action's
(s, a) pair for child stationarity. Actions flagged nonstationary — and the
trajectory action regardless — are expanded recursively; a nonstationary
action's one-step difference additionally receives the CNT(s') * child-delta
correction that recovers MAX-CFR's bootstrapped counterfactual update, while
stationary actions keep the plain one-step (BQL-style) update. The policy
temperature is 1 / (tau_n * CNT(s)), i.e. a softmax over cumulative values
scaled by tau_n, where tau_n follows the nonstationary schedule iff any
action at the infostate is currently flagged nonstationary.

With an always-nonstationary oracle and no exploration this reduces to
MAX-CFR (checked exactly by the equivalence tests); with an
always-stationary oracle it expands exactly the trajectory, like BQL with an
O(A) per-infostate update overhead.
"""

from __future__ import annotations

from .base import Learner
from .policies import argmax_index, hedge_policy, sample_index, softmax_policy
from .schedules import HedgeSchedule, abcs_schedule_default
from .tables import DualQTables


class AbcsLearner(Learner):
    name = "abcs"

    def __init__(self, game, seed, detector, gamma: float = 1.0, num=float,
                 schedule: HedgeSchedule | None = None,
                 dual_tables: bool = False):
        super().__init__(game, seed, gamma, num)
        self.detector = detector
        self.schedule = schedule or abcs_schedule_default()
        self.tables = DualQTables(dual_tables, self.zero)
        if not dual_tables:
            # Single-table mode: the literal algorithm over one Q table.
            self.q = self.tables.q_stat
        self._seen = set()
        # Structural accounting for the O(A)-overhead bound.
        self.episode_expansions = 0
        self.episode_updates = 0
        self.episode_offtrajectory_branches = 0

    # -- policy ----------------------------------------------------------------
    # Nonstationary infostates play CFR(Hedge): a softmax over cumulative
    # values, temperature 1 / (tau_n * CNT(s)). Stationary infostates play
    # BQL: a softmax over the average values at temperature tau_n directly,
    # whose decaying schedule gives greedy-in-the-limit behavior (scaling
    # average values by tau_n * CNT instead would drive stationary policies
    # toward uniform as the schedule decays, which breaks BQL convergence).
    def _policy_probs(self, player, skey, n_actions):
        n = self.iteration
        if self.tables.enabled:
            return self._policy_probs_dual(skey, n_actions, n)
        row = self.q.q.get(skey)
        if row is None:
            row = [self.zero] * n_actions
        if self.detector.state_nonstationary(skey, n_actions):
            return hedge_policy(row, self.schedule.tau_nonstationary(n),
                                self.q.state_count(skey))
        return softmax_policy(row, self.schedule.tau_stationary(n))

    def _policy_probs_dual(self, skey, n_actions, n):
        det = self.detector
        values = []
        counts = []
        for a in range(n_actions):
            tab = self.tables.view(det.cached_flag(skey, a))
            pair = tab.cnt_pair.get(skey)
            values.append(tab.value(skey, a))
            counts.append(0 if pair is None else pair[a])
        if det.state_nonstationary(skey, n_actions):
            tau = self.schedule.tau_nonstationary(n)
            logits = [float(v) * (tau * c) for v, c in zip(values, counts)]
            return hedge_policy(logits, 1.0, 1)
        return softmax_policy(values, self.schedule.tau_stationary(n))

    # -- episodes ----------------------------------------------------------------
    def _episode(self, player):
        self.episode_expansions = 0
        self.episode_updates = 0
        self.episode_offtrajectory_branches = 0
        state = self.advance_to_decision(player)
        if state is None:
            return
        if self.dedup:
            self._seen = set()
        if self.tables.enabled:
            self._visit_dual(player, state, 1.0)
        else:
            self._visit(player, state, 1.0)

    def _traj_action(self, probs, n_actions):
        """Trajectory action from the policy, with epsilon-exploration."""
        agent = self.streams.agent
        eps = self.schedule.epsilon
        if eps > 0.0:
            if agent.random() < eps:
                a = int(agent.random() * n_actions)
                return a if a < n_actions else n_actions - 1
        return sample_index(probs, agent.random())

    def _visit(self, player, state, reach):
        """Expand one infostate; returns the applied greedy-action delta.

        Branching is gated per (s, a): an action recurses iff its pair is
        flagged nonstationary or it is the trajectory action. The correction
        condition is the pseudocode's "if s is not stationary", resolved at
        the infostate level: the correction applies while any action at s
        carries a nonstationary flag. As in MAX-CFR, the recursion returns
        the post-step delta applied at the child's greedy entry, which the
        CNT(s') factor scales back to the child's raw difference.

        Deduplication (games without perfect recall): the exploratory update
        — stationarity checks and nonstationary branching — runs at most
        once per infostate per episode. Re-encounters still perform the
        plain one-step updates for every action and keep the trajectory
        rolling (the BQL backbone updates at every step), they just never
        branch again.
        """
        skey = state.infostate_key(player)
        if self.dedup:
            if skey in self._seen:
                return self._revisit(player, state, skey, reach)
            self._seen.add(skey)
        n_actions = len(state.legal_actions())
        probs = self.cache.probs(player, skey, n_actions)
        cnt = self.q.bump_state(skey)
        self.avg.add(skey, probs, reach)
        row = self.q.row(skey, n_actions)
        a_traj = self._traj_action(probs, n_actions)
        detector = self.detector
        det_rng = self.streams.detector
        deltas = []
        for a in range(n_actions):
            child, skey2, a_star, nabla, r, terminal = self.get_child(
                player, state, a, row[a])
            detector.record(skey, a, float(r), child.hidden_repr())
            flag = detector.cached_detect(skey, a, det_rng.random())
            if (flag or a == a_traj) and not terminal:
                if flag and a != a_traj:
                    self.episode_offtrajectory_branches += 1
                child_delta = self._visit(player, child, reach * probs[a])
                if detector.state_nonstationary(skey, n_actions):
                    nabla = nabla + self.q.cnt_state.get(skey2, 0) * child_delta
            delta = nabla / cnt
            row[a] = row[a] + delta
            deltas.append(delta)
        self.episode_expansions += 1
        self.episode_updates += n_actions
        return deltas[argmax_index(row)]

    def _revisit(self, player, state, skey, reach):
        """BQL-style pass over a re-encountered infostate.

        One-step updates for every action and the trajectory recursion, but
        no stationarity checks, no branching, no corrections, and no sample
        logging — the exploratory machinery already ran this episode.
        """
        n_actions = len(state.legal_actions())
        probs = self.cache.probs(player, skey, n_actions)
        cnt = self.q.bump_state(skey)
        self.avg.add(skey, probs, reach)
        row = self.q.row(skey, n_actions)
        a_traj = self._traj_action(probs, n_actions)
        deltas = []
        for a in range(n_actions):
            child, skey2, a_star, nabla, r, terminal = self.get_child(
                player, state, a, row[a])
            if a == a_traj and not terminal:
                self._visit(player, child, reach * probs[a])
            delta = nabla / cnt
            row[a] = row[a] + delta
            deltas.append(delta)
        self.episode_expansions += 1
        self.episode_updates += n_actions
        return deltas[argmax_index(row)]

    def _visit_dual(self, player, state, reach):
        """Oracle-mode variant routing updates/reads by the pair's flag."""
        skey = state.infostate_key(player)
        if self.dedup:
            if skey in self._seen:
                return self.zero
            self._seen.add(skey)
        n_actions = len(state.legal_actions())
        probs = self.cache.probs(player, skey, n_actions)
        self.avg.add(skey, probs, reach)
        a_traj = self._traj_action(probs, n_actions)
        detector = self.detector
        det_rng = self.streams.detector
        values = []
        deltas = []
        for a in range(n_actions):
            flag_now = detector.cached_flag(skey, a)
            tab = self.tables.view(flag_now)
            row = tab.row(skey, n_actions)
            child, skey2, a_star, nabla, r, terminal = self.get_child(
                player, state, a, row[a], child_table=tab)
            detector.record(skey, a, float(r), child.hidden_repr())
            flag = detector.cached_detect(skey, a, det_rng.random())
            if (flag or a == a_traj) and not terminal:
                child_delta = self._visit_dual(player, child, reach * probs[a])
                if flag:
                    nabla = nabla + tab.cnt_state.get(skey2, 0) * child_delta
            counts = tab.pair_counts(skey, n_actions)
            counts[a] += 1
            delta = nabla / counts[a]
            row[a] = row[a] + delta
            values.append(row[a])
            deltas.append(delta)
        self.episode_expansions += 1
        self.episode_updates += n_actions
        return deltas[argmax_index(values)]
