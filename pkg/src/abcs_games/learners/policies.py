"""Softmax / Hedge policies and sampling helpers.

Every learner computes distributions through these two functions, so policies
are bit-identical wherever the inputs are — which is what the shared-seed
equivalence tests rely on. All distributions are float lists; ``field_probs``
converts one to the learner's numeric field with an exact sum of 1 (the last
entry absorbs the conversion residual), which exact-arithmetic runs need for
the value algebra to telescope.
"""

from __future__ import annotations

import math


def softmax_policy(values, temperature: float):
    """Distribution with entries proportional to exp(value / temperature)."""
    if not temperature > 0.0:
        raise ValueError("temperature must be positive")
    inv = 1.0 / temperature
    return _softmax([float(v) * inv for v in values])


def hedge_policy(q_row, tau_n: float, cnt: int):
    """softmax(Q * tau_n * CNT): Hedge over cumulative values.

    Equivalent to a softmax over average values at temperature
    1 / (tau_n * CNT); CNT = 0 gives the uniform distribution.
    """
    scale = tau_n * cnt
    return _softmax([float(v) * scale for v in q_row])


def _softmax(logits):
    m = max(logits)
    exps = [math.exp(x - m) for x in logits]
    s = sum(exps)
    return [e / s for e in exps]


def sample_index(probs, u: float) -> int:
    """Index of the category a uniform draw u falls into (cumulative scan)."""
    acc = 0.0
    n = len(probs)
    for i in range(n - 1):
        acc += probs[i]
        if u < acc:
            return i
    return n - 1


def sample_outcome(outcomes, u: float) -> int:
    """Sample an (action, probability) list; returns the action."""
    acc = 0.0
    for a, p in outcomes[:-1]:
        acc += p
        if u < acc:
            return a
    return outcomes[-1][0]


def argmax_index(values) -> int:
    """Lowest-index argmax (the deterministic tie-break used everywhere)."""
    best = 0
    bv = values[0]
    for i in range(1, len(values)):
        v = values[i]
        if v > bv:
            bv = v
            best = i
    return best


def field_probs(probs, num):
    """Convert a float distribution into the numeric field, summing to 1."""
    if num is float:
        return probs
    out = [num(p) for p in probs[:-1]]
    out.append(num(1) - sum(out, num(0)))
    return out
