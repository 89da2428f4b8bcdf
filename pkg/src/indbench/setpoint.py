"""Setpoint driver: constant, or piecewise-linear segments with reflection.

In variable mode the setpoint changes by a constant rate over a segment of
random length.  Rates come from a mixture: with probability 0.1 the segment
is flat (rate 0), otherwise the magnitude is uniform in (0,1) with an
equiprobable sign.  Hitting a bound flips the rate's sign with probability
one half.  In constant mode this module never touches the random stream.
"""

from __future__ import annotations

from dataclasses import dataclass

from .rng import Sampler

SEGMENT_MIN_STEPS = 1
SEGMENT_MAX_STEPS = 100
ZERO_RATE_PROBABILITY = 0.1

SETPOINT_MIN = 0.0
SETPOINT_MAX = 100.0


@dataclass(frozen=True)
class SetpointSegment:
    steps_remaining: int
    rate: float


def sample_segment(sampler: Sampler) -> SetpointSegment:
    """Draw a fresh segment.

    Draw order (fixed for replay): length, mixture selector, then — only for
    non-flat segments — magnitude and sign selector.
    """
    steps = sampler.randint(SEGMENT_MIN_STEPS, SEGMENT_MAX_STEPS)
    if sampler.uniform01() < ZERO_RATE_PROBABILITY:
        return SetpointSegment(steps, 0.0)
    magnitude = sampler.uniform01()
    rate = -magnitude if sampler.uniform01() < 0.5 else magnitude
    return SetpointSegment(steps, rate)


def advance_setpoint(setpoint: float, segment: SetpointSegment,
                     sampler: Sampler) -> tuple[float, SetpointSegment]:
    """One step of the variable-setpoint dynamics.

    The flip check uses the pre-update setpoint; a flipped rate persists for
    the rest of the segment.  A new segment is sampled once this one is
    exhausted (after the move).
    """
    rate = segment.rate
    if setpoint == SETPOINT_MIN or setpoint == SETPOINT_MAX:
        if sampler.uniform01() < 0.5:
            rate = -rate
    new_setpoint = max(SETPOINT_MIN, min(SETPOINT_MAX, setpoint + rate))
    remaining = segment.steps_remaining - 1
    if remaining <= 0:
        return new_setpoint, sample_segment(sampler)
    return new_setpoint, SetpointSegment(remaining, rate)
