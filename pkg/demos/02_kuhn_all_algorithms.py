"""Kuhn poker shoot-out: exploitability of every learner on one budget.

Run:  python demos/02_kuhn_all_algorithms.py  (about a minute)
"""
from abcs_games import evaluation as ev
from abcs_games.detector import ChiSquaredDetector
from abcs_games.games import KuhnPoker
from abcs_games.learners import (AbcsLearner, BootCfrLearner, BqlLearner,
                                 EsMccfrLearner, MaxCfrLearner, OsMccfrLearner)

BUDGET = 2_000_000
make = {
    "bql": lambda: BqlLearner(KuhnPoker(), 0),
    "es-mccfr": lambda: EsMccfrLearner(KuhnPoker(), 0),
    "os-mccfr": lambda: OsMccfrLearner(KuhnPoker(), 0),
    "max-cfr": lambda: MaxCfrLearner(KuhnPoker(), 0),
    "bootcfr": lambda: BootCfrLearner(KuhnPoker(), 0),
    "abcs": lambda: AbcsLearner(KuhnPoker(), 0, detector=ChiSquaredDetector()),
}
print(f"exploitability of the average policy after {BUDGET} nodes touched:")
for name, mk in make.items():
    ln = mk()
    while ln.nodes_touched < BUDGET:
        ln.run_iteration()
    explo = ev.exploitability(KuhnPoker(), ln.average_policy())
    print(f"  {name:9}: {explo:.4f}   (iterations: {ln.iteration})")
print("\nthe game value for player 0 is -1/18 = -0.0556 at equilibrium")
