"""Operational cost: instantaneous value and its delayed, blurred observation.

The instantaneous cost is exponential in setpoint, velocity, and gain.  What
reaches the consumption signal is a convolution over lags 5..9, so a change
in the steerings is invisible for four steps and fully absorbed after nine.
"""

from __future__ import annotations

import math

HISTORY_LENGTH = 9

# Kernel over lags 1..9; the recent four lags carry zero weight.
CONVOLUTION_WEIGHTS = (0.0, 0.0, 0.0, 0.0, 1 / 9, 2 / 9, 3 / 9, 2 / 9, 1 / 9)


def operational_cost(setpoint: float, velocity: float, gain: float) -> float:
    """exp((2p + 4v + 2.5g)/100); strictly positive, increasing in each argument."""
    return math.exp((2.0 * setpoint + 4.0 * velocity + 2.5 * gain) / 100.0)


def initial_history(cost: float) -> tuple[float, ...]:
    """Steady-state fill: all nine lags at the given cost, so the convolved
    value starts with no transient."""
    return (cost,) * HISTORY_LENGTH


def push_cost(history: tuple[float, ...], cost: float) -> tuple[float, ...]:
    """Shift lags by one step: the oldest entry drops, ``cost`` becomes lag 1."""
    return (cost,) + history[:HISTORY_LENGTH - 1]


def convolved_cost(history: tuple[float, ...]) -> float:
    """Weighted sum over lags 5..9 with weights (1,2,3,2,1)/9.

    Grouped so a constant history convolves to itself exactly.
    """
    return (history[4] + 2.0 * history[5] + 3.0 * history[6]
            + 2.0 * history[7] + history[8]) / 9.0
