"""The stacked cartpole+Leduc environment: adaptive branching allocates
trajectory updates to the stationary phase and CFR updates to the poker
phase. Prints per-phase metrics and the detector's per-phase flag fractions.

Run:  python demos/05_stacked_environment.py  (a few minutes)
"""
import random

from abcs_games import evaluation as ev
from abcs_games.detector import ChiSquaredDetector, nonstationary_fraction
from abcs_games.games import StackedCartpoleLeduc
from abcs_games.harness import run_deep
from abcs_games.learners import AbcsLearner

game = StackedCartpoleLeduc()
ln = AbcsLearner(game, seed=0, detector=ChiSquaredDetector())

def learn():
    for mark in range(2_000_000, 10_000_001, 2_000_000):
        while ln.nodes_touched < mark:
            ln.run_iteration()
        ret = ev.stacked_cartpole_phase_return(game, ln.q, random.Random(1), 100)
        explo = ev.stacked_leduc_exploitability(ln.avg)
        frac_cp = nonstationary_fraction(
            ln.detector, key_filter=lambda k: k[0] == game.cartpole.tag)
        frac_ld = nonstationary_fraction(
            ln.detector, key_filter=lambda k: k[0] == game.leduc.tag)
        print(f"nodes {mark:>9}: cartpole regret {100 - ret:6.1f} | "
              f"leduc exploitability {explo:.3f} | flagged nonstationary: "
              f"cartpole {frac_cp:.2f}, leduc {frac_ld:.2f}")

run_deep(learn)
