"""Exact best response, exploitability, and episode-return metrics.

A policy is a function ``(player, infostate_key, n_actions) -> probs``.
Best response enumerates the full tree twice: the first pass groups the
responder's histories by infostate weighted by opponent-and-chance reach
(eta_{-i}); the second chooses argmax actions bottom-up and propagates
expected utilities. Zero-reach infostates take the lowest action index
(value-irrelevant, reproducibility-relevant). Evaluation traversals never
touch the learning node counter.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .detector import nonstationary_fraction
from .games.base import CHANCE
from .games.cartpole import Cartpole
from .games.leduc import LeducPoker
from .games.stacked import CARTPOLE_PHASE
from .learners.policies import argmax_index, sample_index, sample_outcome


@dataclass(frozen=True)
class EvaluationReport:
    metric: str
    value: float
    nodes_touched_at_eval: int


def uniform_policy(player, skey, n_actions):
    return [1.0 / n_actions] * n_actions


def best_response_value(game, policy, responder: int) -> float:
    """Exact value of the responder's best response against ``policy``.

    ``policy`` supplies every *other* player's behavior; the responder's own
    entries are ignored (its strategy is recomputed).
    """
    infosets = {}

    def collect(state, reach):
        if state.is_terminal():
            return
        p = state.current_player()
        if p == responder:
            skey = state.infostate_key(responder)
            bucket = infosets.get(skey)
            if bucket is None:
                bucket = infosets[skey] = []
            bucket.append((state, reach))
            for a in state.legal_actions():
                child, _ = state.apply_action(a)
                collect(child, reach)
            return
        if p == CHANCE:
            moves = state.chance_outcomes()
        else:
            probs = policy(p, state.infostate_key(p), len(state.legal_actions()))
            moves = list(enumerate(probs))
        for a, pr in moves:
            if pr <= 0.0:
                continue
            child, _ = state.apply_action(a)
            collect(child, reach * pr)

    root = game.initial_state()
    collect(root, 1.0)

    values = {}
    br_actions = {}

    def value(state):
        """Responder's expected utility-to-go under (BR, policy)."""
        if state.is_terminal():
            return 0.0
        memo_key = game.br_memo_key(state)
        cached = values.get(memo_key)
        if cached is not None:
            return cached
        p = state.current_player()
        if p == responder:
            a = br_action(state.infostate_key(responder), state)
            child, rew = state.apply_action(a)
            v = rew[responder] + value(child)
        elif p == CHANCE:
            v = 0.0
            for a, pr in state.chance_outcomes():
                child, rew = state.apply_action(a)
                v += pr * (rew[responder] + value(child))
        else:
            probs = policy(p, state.infostate_key(p), len(state.legal_actions()))
            v = 0.0
            for a, pr in enumerate(probs):
                if pr <= 0.0:
                    continue
                child, rew = state.apply_action(a)
                v += pr * (rew[responder] + value(child))
        values[memo_key] = v
        return v

    def br_action(skey, state):
        a = br_actions.get(skey)
        if a is not None:
            return a
        entries = infosets.get(skey)
        if not entries:
            a = 0  # unreachable under the opponents' policy
        else:
            n_actions = len(entries[0][0].legal_actions())
            best, best_v = 0, None
            for cand in range(n_actions):
                acc = 0.0
                for h, w in entries:
                    child, rew = h.apply_action(cand)
                    acc += w * (rew[responder] + value(child))
                if best_v is None or acc > best_v:
                    best, best_v = cand, acc
            a = best
        br_actions[skey] = a
        return a

    return value(root)


def exploitability(game, policy) -> float:
    """Sum of both players' best-response gains (two-player zero-sum form)."""
    if game.num_agents != 2:
        raise ValueError("exploitability is defined for two-player games")
    return (best_response_value(game, policy, 0)
            + best_response_value(game, policy, 1))


def expected_utility(game, policy, player: int) -> float:
    """Expected utility of ``player`` when everyone follows ``policy``."""
    def walk(state):
        if state.is_terminal():
            return 0.0
        p = state.current_player()
        if p == CHANCE:
            moves = state.chance_outcomes()
        else:
            probs = policy(p, state.infostate_key(p), len(state.legal_actions()))
            moves = list(enumerate(probs))
        v = 0.0
        for a, pr in moves:
            if pr <= 0.0:
                continue
            child, rew = state.apply_action(a)
            v += pr * (rew[player] + walk(child))
        return v

    return walk(game.initial_state())


def rollout_return(game, action_selector, rng, episodes: int, player: int = 0,
                   max_steps: int | None = None,
                   stop_condition=None) -> float:
    """Mean undiscounted return of ``player`` over fresh episodes.

    ``action_selector(state)`` picks the player's action; other agents'
    decisions must not occur (single-agent environments / phases). A
    ``stop_condition(state)`` may end an episode early (used for phase
    returns in the stacked environment).
    """
    total = 0.0
    for _ in range(episodes):
        state = game.initial_state()
        ret = 0.0
        steps = 0
        while not state.is_terminal():
            if stop_condition is not None and stop_condition(state):
                break
            p = state.current_player()
            if p == CHANCE:
                a = sample_outcome(state.chance_outcomes(), rng.random())
            elif p == player:
                a = action_selector(state)
                steps += 1
                if max_steps is not None and steps > max_steps:
                    break
            else:
                raise ValueError("rollout_return met another agent's turn")
            state, rew = state.apply_action(a)
            ret += rew[player]
        total += ret
    return total / episodes


def greedy_selector(qtable, player: int = 0):
    """Argmax-Q action selector (missing rows act 0; ties take lowest index)."""
    def select(state):
        row = qtable.q.get(state.infostate_key(player))
        if row is None:
            return 0
        return argmax_index(row)

    return select


def greedy_episode_return(game, qtable, rng, episodes: int) -> float:
    """Mean greedy-policy return on a single-agent environment."""
    if game.num_agents != 1:
        raise ValueError("greedy_episode_return expects a single-agent game")
    cap = None
    if isinstance(game, Cartpole):
        cap = int(10.0 / game.termination_probability)
    return rollout_return(game, greedy_selector(qtable), rng, episodes,
                          max_steps=cap)


def cartpole_regret(game: Cartpole, qtable, rng, episodes: int) -> float:
    return game.optimal_return() - greedy_episode_return(game, qtable, rng,
                                                         episodes)


# -- stacked-environment phase metrics ---------------------------------------
def stacked_cartpole_phase_return(game, qtable, rng, episodes: int) -> float:
    """Mean cartpole-phase return of the greedy policy on the stacked game."""
    cap = int(10.0 / game.cartpole.termination_probability)
    return rollout_return(
        game, greedy_selector(qtable), rng, episodes,
        max_steps=cap, stop_condition=lambda s: s.phase != CARTPOLE_PHASE)


def leduc_phase_policy(avg_table):
    """Leduc-subgame policy extracted from a stacked run's average table.

    Stacked Leduc-phase keys are byte-compatible with standalone Leduc keys,
    so the accumulated rows evaluate directly on the standalone game.
    """
    def probs(player, skey, n_actions):
        return avg_table.probs(skey, n_actions)

    return probs


def stacked_leduc_exploitability(avg_table) -> float:
    return exploitability(LeducPoker(), leduc_phase_policy(avg_table))


def detector_fractions(detector, phase_tags=None):
    """Overall (and optionally per-tag) nonstationary flag fractions."""
    out = {"nonstationary_fraction": nonstationary_fraction(detector)}
    if phase_tags:
        for name, tag in phase_tags.items():
            out[f"nonstationary_fraction_{name}"] = nonstationary_fraction(
                detector, key_filter=lambda k, t=tag: k[0] == t)
    return out


def kuhn_brute_force_best_response(game, policy, responder: int) -> float:
    """Independent oracle: exhaustive maximization over pure strategies.

    Enumerates every deterministic responder strategy (action per infostate)
    and evaluates it exactly against ``policy``. Exponential; only for
    desk-scale games in tests.
    """
    infosets = []
    seen = {}

    def find_infosets(state):
        if state.is_terminal():
            return
        p = state.current_player()
        if p == CHANCE:
            actions = [a for a, _ in state.chance_outcomes()]
        else:
            actions = state.legal_actions()
            if p == responder:
                skey = state.infostate_key(responder)
                if skey not in seen:
                    seen[skey] = len(actions)
                    infosets.append(skey)
        for a in actions:
            child, _ = state.apply_action(a)
            find_infosets(child)

    find_infosets(game.initial_state())

    def pure_value(assignment):
        def walk(state):
            if state.is_terminal():
                return 0.0
            p = state.current_player()
            if p == responder:
                a = assignment[state.infostate_key(responder)]
                child, rew = state.apply_action(a)
                return rew[responder] + walk(child)
            if p == CHANCE:
                moves = state.chance_outcomes()
            else:
                probs = policy(p, state.infostate_key(p),
                               len(state.legal_actions()))
                moves = list(enumerate(probs))
            v = 0.0
            for a, pr in moves:
                if pr <= 0.0:
                    continue
                child, rew = state.apply_action(a)
                v += pr * (rew[responder] + walk(child))
            return v

        return walk(game.initial_state())

    best = None
    counts = [seen[k] for k in infosets]

    def assign(i, current):
        nonlocal best
        if i == len(infosets):
            v = pure_value(dict(zip(infosets, current)))
            if best is None or v > best:
                best = v
            return
        for a in range(counts[i]):
            assign(i + 1, current + [a])

    assign(0, [])
    return best if best is not None else 0.0
