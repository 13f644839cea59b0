"""Value tables, counts, and the average-policy accumulator."""

from fractions import Fraction

import pytest

from abcs_games.learners.tables import AveragePolicyTable, DualQTables, QTable

KEY = ("env", 0, "s")


def test_missing_entries_read_zero():
    t = QTable()
    assert t.value(KEY, 1) == 0.0
    assert t.state_count(KEY) == 0
    assert t.row(KEY, 3) == [0.0, 0.0, 0.0]


def test_running_mean_property():
    t = QTable()
    targets = [3.0, -1.0, 4.0, 1.5, -0.5, 2.25, 7.0]
    row = t.row(KEY, 1)
    counts = t.pair_counts(KEY, 1)
    for k, target in enumerate(targets, start=1):
        counts[0] += 1
        row[0] = row[0] + (target - row[0]) / counts[0]
        mean = sum(targets[:k]) / k
        assert row[0] == pytest.approx(mean, abs=1e-9)


def test_running_mean_exact_over_rationals():
    t = QTable(zero=Fraction(0))
    targets = [Fraction(3), Fraction(-1), Fraction(1, 3)]
    row = t.row(KEY, 1)
    for k, target in enumerate(targets, start=1):
        row[0] = row[0] + (target - row[0]) / k
    assert row[0] == sum(targets) / 3


def test_bump_state_counts_visits():
    t = QTable()
    assert t.bump_state(KEY) == 1
    assert t.bump_state(KEY) == 2
    assert t.state_count(KEY) == 2


def test_dual_tables_disabled_aliases():
    d = DualQTables(enabled=False)
    d.view(False).row(KEY, 2)[0] = 5.0
    assert d.view(True).value(KEY, 0) == 5.0
    assert d.q_stat is d.q_nonstat


def test_dual_tables_enabled_independent():
    d = DualQTables(enabled=True)
    d.view(False).row(KEY, 2)[0] = 5.0
    d.view(True).row(KEY, 2)[0] = -2.0
    assert d.q_stat.value(KEY, 0) == 5.0
    assert d.q_nonstat.value(KEY, 0) == -2.0
    # stationary-side updates never move the nonstationary view
    d.view(False).row(KEY, 2)[0] = 7.0
    assert d.q_nonstat.value(KEY, 0) == -2.0


def test_average_policy_accumulates_and_normalizes():
    avg = AveragePolicyTable()
    assert avg.probs(KEY, 2) == [0.5, 0.5]      # nothing accumulated yet
    avg.add(KEY, [1.0, 0.0], weight=1.0)
    avg.add(KEY, [0.0, 1.0], weight=3.0)
    assert avg.probs(KEY, 2) == pytest.approx([0.25, 0.75])


def test_average_policy_distribution_valid():
    avg = AveragePolicyTable()
    avg.add(KEY, [0.2, 0.3, 0.5], weight=0.7)
    probs = avg.probs(KEY, 3)
    assert abs(sum(probs) - 1.0) < 1e-9
    assert all(p >= 0 for p in probs)
