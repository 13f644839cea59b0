"""Child-stationarity detection.

Per (infostate, action) pair the detector keeps an append-only log of
(reward, successor-hidden-state) observations in traversal order. The test
splits the log at floor(N/2) and runs a two-sample Pearson chi-squared
homogeneity test over joint (reward category, hidden category) columns;
child stationarity is the null hypothesis, so a pair is flagged
nonstationary iff p < alpha. Checks run with probability ``p_check`` per
query; otherwise the cached flag answers (pairs default to stationary).

Half counts are maintained incrementally: appending moves the split point
forward by at most one entry, so each entry crosses the boundary exactly
once and a check costs O(categories), not O(log length). Only the pending
second half is buffered (8 bytes per entry).
"""

from __future__ import annotations

from array import array

from .stats import two_sample_chi2

_HIDDEN_SHIFT = 24  # packed column id = reward_cat << SHIFT | hidden_cat

STATIONARY = False
NONSTATIONARY = True


class SampleLog:
    """Append-only (reward, hidden) observation log for one (s, a) pair."""

    __slots__ = ("reward_cats", "hidden_cats", "first", "second",
                 "_pending", "_head", "n")

    def __init__(self):
        self.reward_cats = {}      # exact reward value -> small int
        self.hidden_cats = {}      # hidden identity -> small int
        self.first = {}            # column -> count over entries [0, N//2)
        self.second = {}           # column -> count over entries [N//2, N)
        self._pending = array("q")
        self._head = 0
        self.n = 0

    def __len__(self):
        return self.n

    def record(self, reward, hidden) -> None:
        rc = self.reward_cats.setdefault(reward, len(self.reward_cats))
        hc = self.hidden_cats.setdefault(hidden, len(self.hidden_cats))
        col = (rc << _HIDDEN_SHIFT) | hc
        self.second[col] = self.second.get(col, 0) + 1
        self._pending.append(col)
        self.n += 1
        # Advance the half boundary: one entry crosses when N becomes even.
        if self.n % 2 == 0:
            moved = self._pending[self._head]
            self._head += 1
            left = self.second[moved] - 1
            if left:
                self.second[moved] = left
            else:
                del self.second[moved]
            self.first[moved] = self.first.get(moved, 0) + 1
            if self._head >= 8192 and self._head * 2 >= len(self._pending):
                del self._pending[: self._head]
                self._head = 0

    def halves(self):
        return self.first, self.second


class ChiSquaredDetector:
    """Chi-squared child-stationarity detector (the default detector).

    alpha: significance level (nonstationary iff p < alpha).
    p_check: probability that a query recomputes the test; otherwise the
        cached flag is returned. Fresh pairs read as stationary.
    min_samples: below this log length detect() reports stationary (the
        test is meaningless at tiny counts; 8 gives each half >= 4).
    """

    uses_logs = True

    def __init__(self, alpha: float = 0.05, p_check: float = 0.05,
                 min_samples: int = 8):
        if not 0.0 < alpha < 1.0:
            raise ValueError("alpha must be in (0, 1)")
        if not 0.0 <= p_check <= 1.0:
            raise ValueError("p_check must be in [0, 1]")
        self.alpha = alpha
        self.p_check = p_check
        self.min_samples = min_samples
        self.logs = {}
        self.flags = {}

    def record(self, skey, action, reward, hidden) -> None:
        log = self.logs.get((skey, action))
        if log is None:
            log = self.logs[(skey, action)] = SampleLog()
        log.record(reward, hidden)

    def detect(self, skey, action) -> bool:
        """Recompute the test now; True means nonstationary."""
        log = self.logs.get((skey, action))
        if log is None or log.n < self.min_samples:
            return STATIONARY
        first, second = log.halves()
        _, _, p = two_sample_chi2(first, second)
        return p < self.alpha

    def cached_detect(self, skey, action, rng_draw: float) -> bool:
        """Refresh the cached flag with probability p_check, else return it."""
        pair = (skey, action)
        if rng_draw < self.p_check:
            flag = self.detect(skey, action)
            self.flags[pair] = flag
            return flag
        return self.flags.get(pair, STATIONARY)

    def cached_flag(self, skey, action) -> bool:
        return self.flags.get((skey, action), STATIONARY)

    def state_nonstationary(self, skey, n_actions: int) -> bool:
        """True iff any action at this infostate is flagged nonstationary."""
        flags = self.flags
        for a in range(n_actions):
            if flags.get((skey, a), STATIONARY):
                return True
        return False

    def logged_pairs(self):
        return self.logs.keys()


class OracleDetector:
    """Scripted / constant detector standing in for a perfect oracle.

    Conforms to cached_detect's interface (the rng draw is accepted and
    ignored). ``flags`` maps (skey, action) to True (nonstationary); lookup
    misses default to stationary. Constant modes pass ``constant=``.
    """

    uses_logs = False

    def __init__(self, constant: bool | None = None, flags: dict | None = None):
        self.constant = constant
        self.scripted = flags or {}
        self._seen = {}

    @classmethod
    def always_stationary(cls):
        return cls(constant=STATIONARY)

    @classmethod
    def always_nonstationary(cls):
        return cls(constant=NONSTATIONARY)

    def record(self, skey, action, reward, hidden) -> None:
        self._seen[(skey, action)] = None

    def detect(self, skey, action) -> bool:
        if self.constant is not None:
            return self.constant
        return self.scripted.get((skey, action), STATIONARY)

    def cached_detect(self, skey, action, rng_draw: float) -> bool:
        return self.detect(skey, action)

    def cached_flag(self, skey, action) -> bool:
        return self.detect(skey, action)

    def state_nonstationary(self, skey, n_actions: int) -> bool:
        if self.constant is not None:
            return self.constant
        return any(self.detect(skey, a) for a in range(n_actions))

    def logged_pairs(self):
        return self._seen.keys()


def oracle_detector(mode: str, flags: dict | None = None):
    """Build an oracle detector: always_stationary / always_nonstationary / scripted."""
    if mode == "always_stationary":
        return OracleDetector.always_stationary()
    if mode == "always_nonstationary":
        return OracleDetector.always_nonstationary()
    if mode == "scripted":
        return OracleDetector(flags=flags or {})
    raise ValueError(f"unknown oracle mode {mode!r}")


def nonstationary_fraction(detector, key_filter=None) -> float:
    """Fraction of logged (s, a) pairs whose cached flag is nonstationary.

    ``key_filter`` optionally restricts to pairs whose infostate key matches
    (used for per-phase reporting in the stacked environment). No logged
    pairs -> 0.
    """
    total = 0
    flagged = 0
    for skey, action in detector.logged_pairs():
        if key_filter is not None and not key_filter(skey):
            continue
        total += 1
        if detector.cached_flag(skey, action):
            flagged += 1
    if total == 0:
        return 0.0
    return flagged / total
