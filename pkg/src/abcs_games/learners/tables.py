"""Tabular learner state: value tables, counts, average-policy accumulator.

Infostate keys already embed the acting player and environment tag, so a
single table serves every player of a run. Tables are generic over the
numeric field: production uses floats, the equivalence tests run the same
learners over exact rationals.
"""

from __future__ import annotations


class QTable:
    """Per-(infostate, action) running-average values and visit counts.

    Missing entries read as zero. ``cnt_state`` counts infostate visits
    (the CNT(s) of the branching learners); ``cnt_pair`` counts per-action
    updates. Branching learners update every action on every visit, so for
    them the two coincide.
    """

    def __init__(self, zero=0.0):
        self.zero = zero
        self.q = {}
        self.cnt_state = {}
        self.cnt_pair = {}

    def row(self, skey, n_actions):
        r = self.q.get(skey)
        if r is None:
            r = self.q[skey] = [self.zero] * n_actions
        return r

    def pair_counts(self, skey, n_actions):
        r = self.cnt_pair.get(skey)
        if r is None:
            r = self.cnt_pair[skey] = [0] * n_actions
        return r

    def bump_state(self, skey) -> int:
        """Increment CNT(s); returns the incremented count."""
        c = self.cnt_state.get(skey, 0) + 1
        self.cnt_state[skey] = c
        return c

    def state_count(self, skey) -> int:
        return self.cnt_state.get(skey, 0)

    def value(self, skey, action):
        r = self.q.get(skey)
        return self.zero if r is None else r[action]


class DualQTables:
    """Separate stationary / nonstationary value tables (oracle mode).

    Disabled (the practical configuration) both views alias one table, which
    recovers the single-Q behavior exactly.
    """

    def __init__(self, enabled: bool = False, zero=0.0):
        self.enabled = enabled
        self.q_stat = QTable(zero)
        self.q_nonstat = QTable(zero) if enabled else self.q_stat

    def view(self, nonstationary: bool) -> QTable:
        return self.q_nonstat if nonstationary else self.q_stat


class AveragePolicyTable:
    """Cumulative reach-weighted policy accumulator (floats).

    ``add`` accumulates weight * probs at an infostate; ``probs`` normalizes,
    falling back to uniform where nothing has been accumulated.
    """

    def __init__(self):
        self.acc = {}

    def add(self, skey, probs, weight: float) -> None:
        row = self.acc.get(skey)
        if row is None:
            row = self.acc[skey] = [0.0] * len(probs)
        for i, p in enumerate(probs):
            row[i] += weight * p

    def probs(self, skey, n_actions: int):
        row = self.acc.get(skey)
        if row is None:
            return [1.0 / n_actions] * n_actions
        total = sum(row)
        if total <= 0.0:
            return [1.0 / n_actions] * n_actions
        return [x / total for x in row]
