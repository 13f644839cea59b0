"""Chi-squared tail probabilities and the two-sample Pearson test.

The survival function is computed from the regularized incomplete gamma
function using the classic series / continued-fraction split (series for
x < a+1, modified Lentz continued fraction otherwise), accurate to well
below 1e-9 absolute over the ranges the detector uses.
"""

from __future__ import annotations

import math

_EPS = 1e-16
_FPMIN = 1e-300
_MAX_ITER = 500


def _lower_gamma_series(a: float, x: float) -> float:
    """Regularized lower incomplete gamma P(a, x) by series expansion."""
    term = 1.0 / a
    total = term
    n = a
    for _ in range(_MAX_ITER):
        n += 1.0
        term *= x / n
        total += term
        if abs(term) < abs(total) * _EPS:
            break
    return total * math.exp(-x + a * math.log(x) - math.lgamma(a))

def _upper_gamma_contfrac(a: float, x: float) -> float:
    """Regularized upper incomplete gamma Q(a, x) by continued fraction."""
    b = x + 1.0 - a
    c = 1.0 / _FPMIN
    d = 1.0 / b
    h = d
    for i in range(1, _MAX_ITER):
        an = -i * (i - a)
        b += 2.0
        d = an * d + b
        if abs(d) < _FPMIN:
            d = _FPMIN
        c = b + an / c
        if abs(c) < _FPMIN:
            c = _FPMIN
        d = 1.0 / d
        delta = d * c
        h *= delta
        if abs(delta - 1.0) < _EPS:
            break
    return h * math.exp(-x + a * math.log(x) - math.lgamma(a))


def regularized_upper_gamma(a: float, x: float) -> float:
    """Q(a, x) = Gamma(a, x) / Gamma(a) for a > 0, x >= 0."""
    if a <= 0.0:
        raise ValueError("shape parameter must be positive")
    if x < 0.0:
        raise ValueError("x must be nonnegative")
    if x == 0.0:
        return 1.0
    if x < a + 1.0:
        return 1.0 - _lower_gamma_series(a, x)
    return _upper_gamma_contfrac(a, x)


def chi2_survival(statistic: float, df: int) -> float:
    """Upper-tail probability of the chi-squared distribution."""
    if df <= 0:
        raise ValueError("degrees of freedom must be positive")
    if statistic <= 0.0:
        return 1.0
    p = regularized_upper_gamma(0.5 * df, 0.5 * statistic)
    if p < 0.0:
        return 0.0
    return min(p, 1.0)


def two_sample_chi2(counts1, counts2):
    """Pearson homogeneity test of two categorical count mappings.

    Builds the 2xC contingency table over the union of categories, drops
    columns with zero total, and tests against expected counts from the
    row/column marginals. Returns (statistic, df, p_value); a degenerate
    table (all mass in one column) yields (0.0, 0, 1.0) — no evidence of
    change. Both rows must be non-empty.
    """
    n1 = sum(counts1.values())
    n2 = sum(counts2.values())
    if n1 == 0 or n2 == 0:
        raise ValueError("both halves must contain samples")
    columns = set(counts1)
    columns.update(counts2)
    total = n1 + n2
    stat = 0.0
    live_columns = 0
    for cat in sorted(columns):
        c1 = counts1.get(cat, 0)
        c2 = counts2.get(cat, 0)
        col = c1 + c2
        if col == 0:
            continue
        live_columns += 1
        e1 = n1 * col / total
        e2 = n2 * col / total
        d1 = c1 - e1
        d2 = c2 - e2
        stat += d1 * d1 / e1 + d2 * d2 / e2
    if live_columns <= 1:
        return 0.0, 0, 1.0
    df = live_columns - 1
    return stat, df, chi2_survival(stat, df)
