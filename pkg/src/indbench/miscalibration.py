"""Mis-calibration sub-dynamics: rotation state machine over the Goldstone landscape.

Setpoint and shift combine into an effective shift h_e in [-1.5, 1.5].  Three
latent variables react to it each step:

* domain (+1/-1)    — which half of the landscape is active,
* response (+1/-1)  — advantageous (index moves with the shift) or
                      disadvantageous (index pushed back),
* direction (-6..6) — rotation index; its sine is the radius the landscape
                      currently rewards.

Inside the safe band |h_e| <= z the index relaxes toward 0 and the latents
reset once it arrives.  Outside, the index cycles with the shift's sign until
it hits +-6, where the response turns disadvantageous; reaching the opposite
bound -6*domain freezes the index in the high-penalty region until the policy
returns to the safe band.  An agent that oscillates the shift so h_e tracks
sin(pi*direction/12) rides the minimum around the landscape.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .goldstone import SAFE_ZONE
from .goldstone import penalty as goldstone_penalty

DIRECTION_BOUND = 6


def _sgn(x: float) -> int:
    return (x > 0) - (x < 0)


@dataclass(frozen=True)
class RotationState:
    domain: int = 1
    response: int = 1
    direction: int = 0


def effective_shift(shift: float, setpoint: float) -> float:
    """Combine shift and setpoint; clipped to [-1.5, 1.5]."""
    return max(-1.5, min(1.5, shift / 20.0 - setpoint / 50.0 - 1.5))


def direction_sine(direction: int) -> float:
    """sin(pi*direction/12) — the radius an optimal policy would track."""
    return math.sin(math.pi * direction / 12.0)


def advance_rotation(state: RotationState, h_e: float) -> RotationState:
    """One transition of (domain, response, direction) under effective shift h_e.

    Case order matters: the safe-band return step takes precedence over the
    freeze at the opposite bound when both could apply.
    """
    inside = abs(h_e) <= SAFE_ZONE

    domain = state.domain if inside else _sgn(h_e)
    response = 1 if domain != state.domain else state.response

    if inside:
        step = -_sgn(state.direction)
    elif state.direction == -DIRECTION_BOUND * domain:
        step = 0
    else:
        step = response * _sgn(h_e)

    direction = state.direction + step
    if abs(direction) >= DIRECTION_BOUND:
        response = -1
        direction = 12 - (direction + 24) % 24

    if direction == 0 and inside:
        return RotationState(1, 1, 0)
    return RotationState(domain, response, direction)


def penalty(direction: int, h_e: float) -> float:
    """Penalty of holding effective shift h_e at the given rotation index."""
    return goldstone_penalty(direction_sine(direction), h_e)
