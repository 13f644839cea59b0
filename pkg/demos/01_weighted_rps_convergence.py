"""Weighted rock-paper-scissors: CFR-style learners find the (1/4, 1/2, 1/4)
equilibrium while Boltzmann Q-learning cycles and stays exploitable.

Run:  python demos/01_weighted_rps_convergence.py
"""
from abcs_games import evaluation as ev
from abcs_games.detector import ChiSquaredDetector
from abcs_games.games import WeightedRps
from abcs_games.learners import AbcsLearner, BqlLearner, EsMccfrLearner

BUDGET = 300_000

print(f"{'nodes':>8}  {'bql':>8}  {'es-mccfr':>9}  {'abcs':>8}")
learners = {
    "bql": BqlLearner(WeightedRps(), seed=0),
    "es": EsMccfrLearner(WeightedRps(), seed=0),
    "abcs": AbcsLearner(WeightedRps(), seed=0, detector=ChiSquaredDetector()),
}
for mark in range(50_000, BUDGET + 1, 50_000):
    row = []
    for ln in learners.values():
        while ln.nodes_touched < mark:
            ln.run_iteration()
        row.append(ev.exploitability(WeightedRps(), ln.average_policy()))
    print(f"{mark:>8}  {row[0]:8.4f}  {row[1]:9.4f}  {row[2]:8.4f}")

abcs = learners["abcs"]
probs = abcs.average_policy()(0, (WeightedRps.tag, 0), 3)
print("\nabcs average opening mix (rock, paper, scissors):",
      [round(p, 3) for p in probs], " target (0.25, 0.5, 0.25)")
