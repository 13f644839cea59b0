"""Iteration-indexed temperature schedules and their benchmark defaults."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class GeometricSchedule:
    """tau_n = base * decay ** floor(n / interval); n is the 1-based iteration."""

    base: float
    decay: float = 1.0
    interval: int = 1

    def __post_init__(self):
        if self.base <= 0 or self.decay <= 0 or self.interval <= 0:
            raise ValueError("schedule parameters must be positive")

    def __call__(self, n: int) -> float:
        if self.decay == 1.0:
            return self.base
        return self.base * self.decay ** (n // self.interval)


@dataclass(frozen=True)
class HedgeSchedule:
    """Temperatures and exploration for the adaptive-branching learner."""

    tau_stationary: GeometricSchedule
    tau_nonstationary: GeometricSchedule
    epsilon: float = 0.0

    def __post_init__(self):
        if not 0.0 <= self.epsilon <= 1.0:
            raise ValueError("epsilon must be in [0, 1]")


# Benchmark defaults (single hyperparameter set across environments).
def bql_temperature_default() -> GeometricSchedule:
    return GeometricSchedule(base=10.0, decay=0.99, interval=50)


def maxcfr_temperature_default() -> GeometricSchedule:
    return GeometricSchedule(base=1.0)


def abcs_schedule_default() -> HedgeSchedule:
    return HedgeSchedule(
        tau_stationary=GeometricSchedule(base=1.0, decay=0.99, interval=20),
        tau_nonstationary=GeometricSchedule(base=1.0),
        epsilon=0.0,
    )


# TicTacToe overrides for the larger tree.
def bql_temperature_tictactoe() -> GeometricSchedule:
    return GeometricSchedule(base=10.0, decay=0.99, interval=100)


def abcs_schedule_tictactoe() -> HedgeSchedule:
    return HedgeSchedule(
        tau_stationary=GeometricSchedule(base=10.0, decay=0.99, interval=50),
        tau_nonstationary=GeometricSchedule(base=1.0),
        epsilon=0.0,
    )


OS_MCCFR_EPSILON_DEFAULT = 0.6
