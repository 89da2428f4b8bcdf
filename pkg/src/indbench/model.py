"""Core value types: actions, steerings, observations, and the Markov state.

Actions are proposed deltas in [-1,1]^3; they move the three steerings
(velocity, gain, shift) by fixed scale factors and the result is clipped to
[0,100].  The shift scale is computed, not hard-coded: one full shift action
crosses the mis-calibration safe band with a 0.9 margin.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, fields, replace

from .errors import InvalidActionError

STEERING_MIN = 0.0
STEERING_MAX = 100.0

VELOCITY_SCALE = 1.0
GAIN_SCALE = 10.0
SHIFT_SCALE = 20.0 * math.sin(math.pi * 15.0 / 180.0) / 0.9  # ~5.7515


def clip_steering(value: float) -> float:
    return max(STEERING_MIN, min(STEERING_MAX, value))


@dataclass(frozen=True)
class Action:
    """Proposed steering deltas, each in [-1, 1]."""

    delta_velocity: float
    delta_gain: float
    delta_shift: float

    def as_tuple(self) -> tuple[float, float, float]:
        return (self.delta_velocity, self.delta_gain, self.delta_shift)

    def validated(self) -> "Action":
        """Return self, raising if any component is outside [-1, 1]."""
        for name, value in zip(("delta_velocity", "delta_gain", "delta_shift"), self.as_tuple()):
            if not (-1.0 <= value <= 1.0):
                raise InvalidActionError(f"{name}={value!r} outside [-1, 1]")
        return self

    def clamped(self) -> "Action":
        """Return a copy with each component clamped to [-1, 1]."""
        return Action(*(max(-1.0, min(1.0, v)) for v in self.as_tuple()))


@dataclass(frozen=True)
class Steerings:
    """The three controllable variables, each held in [0, 100]."""

    velocity: float
    gain: float
    shift: float


def apply_action(steerings: Steerings, action: Action) -> Steerings:
    """Move each steering by its scaled delta, then clip to [0, 100]."""
    return Steerings(
        velocity=clip_steering(steerings.velocity + VELOCITY_SCALE * action.delta_velocity),
        gain=clip_steering(steerings.gain + GAIN_SCALE * action.delta_gain),
        shift=clip_steering(steerings.shift + SHIFT_SCALE * action.delta_shift),
    )


OBSERVATION_FIELDS = ("setpoint", "velocity", "gain", "shift", "consumption", "fatigue")


@dataclass(frozen=True)
class Observation:
    """The six observable variables exposed to agents.  No latents leak here."""

    setpoint: float
    velocity: float
    gain: float
    shift: float
    consumption: float
    fatigue: float

    def as_tuple(self) -> tuple[float, ...]:
        return (self.setpoint, self.velocity, self.gain, self.shift,
                self.consumption, self.fatigue)


@dataclass
class MarkovState:
    """Minimal latent state that makes the process Markov.

    Twenty values: the six observables, the nine most recent operational
    costs (most recent first), the three rotation variables, and the two
    fatigue latents.  The setpoint-driver segment (steps remaining, change
    rate) rides along so variable-setpoint runs are resumable.
    """

    setpoint: float
    velocity: float
    gain: float
    shift: float
    consumption: float
    fatigue: float
    cost_history: tuple[float, ...]  # lag 1 .. lag 9
    domain: int        # {-1, +1}
    response: int      # {-1, +1}
    direction: int     # integer in [-6, 6]
    mu_velocity: float
    mu_gain: float
    setpoint_steps_remaining: int
    setpoint_rate: float

    def observation(self) -> Observation:
        return Observation(self.setpoint, self.velocity, self.gain, self.shift,
                           self.consumption, self.fatigue)

    def copy(self) -> "MarkovState":
        return replace(self)

    def to_dict(self) -> dict:
        out = {}
        for f in fields(self):
            value = getattr(self, f.name)
            out[f.name] = list(value) if f.name == "cost_history" else value
        return out

    @classmethod
    def from_dict(cls, payload: dict) -> "MarkovState":
        data = dict(payload)
        data["cost_history"] = tuple(data["cost_history"])
        return cls(**data)
