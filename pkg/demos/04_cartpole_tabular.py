"""Tabular Q-learning on the Markovian cartpole: greedy regret over training.

Run:  python demos/04_cartpole_tabular.py  (a couple of minutes)
"""
import random

from abcs_games import evaluation as ev
from abcs_games.games import Cartpole
from abcs_games.harness import run_deep
from abcs_games.learners import BqlLearner

game = Cartpole()
ln = BqlLearner(game, seed=0)

def learn():
    for mark in range(1_000_000, 8_000_001, 1_000_000):
        while ln.nodes_touched < mark:
            ln.run_iteration()
        ret = ev.greedy_episode_return(game, ln.q, random.Random(1), 100)
        print(f"nodes {mark:>8}: greedy return {ret:6.1f}  regret {200 - ret:6.1f}")

run_deep(learn)
