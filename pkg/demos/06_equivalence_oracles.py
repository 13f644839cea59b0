"""Exact algorithm equivalences over rational arithmetic:
  - bootstrapped-delta ES-MCCFR (BOOTCFR) equals classic ES-MCCFR,
  - adaptive branching with an always-nonstationary oracle equals MAX-CFR.

Run:  python demos/06_equivalence_oracles.py
"""
from fractions import Fraction

from abcs_games.detector import OracleDetector
from abcs_games.games import KuhnPoker
from abcs_games.learners import (AbcsLearner, BootCfrLearner, EsMccfrLearner,
                                 MaxCfrLearner)

def tables_equal(a, b):
    return (set(a.q) == set(b.q) and all(a.q[k] == b.q[k] for k in a.q)
            and a.cnt_state == b.cnt_state)

es = EsMccfrLearner(KuhnPoker(), seed=0, num=Fraction)
boot = BootCfrLearner(KuhnPoker(), seed=0, num=Fraction)
for n in range(200):
    es.run_iteration()
    boot.run_iteration()
print("BOOTCFR == ES-MCCFR after 200 exact iterations:",
      tables_equal(es.q, boot.q))

mc = MaxCfrLearner(KuhnPoker(), seed=0)
ab = AbcsLearner(KuhnPoker(), seed=0,
                 detector=OracleDetector.always_nonstationary())
for n in range(200):
    mc.run_iteration()
    ab.run_iteration()
print("ABCs(always-nonstationary, eps=0) == MAX-CFR (float64):",
      tables_equal(mc.q, ab.q))
