"""Behavior policies for batch generation and evaluation rollouts.

Policies are stateless: an action is a function of the observation plus an
explicit random stream owned by the calling harness, so the same (policy,
seed) pair always replays the same action sequence.
"""

from __future__ import annotations

from typing import Callable

from .errors import EvaluationError
from .model import (GAIN_SCALE, SHIFT_SCALE, VELOCITY_SCALE, Action,
                    Observation)
from .rng import RandomStream


class BehaviorPolicy:
    def action(self, observation: Observation, stream: RandomStream) -> Action:
        raise NotImplementedError

    def descriptor(self) -> str:
        """Stable text form; batches record it so they can be regenerated."""
        raise NotImplementedError


class RandomUniformPolicy(BehaviorPolicy):
    """Action components i.i.d. uniform in [-1, 1] (three draws per action)."""

    def action(self, observation: Observation, stream: RandomStream) -> Action:
        return Action(stream.uniform(-1.0, 1.0),
                      stream.uniform(-1.0, 1.0),
                      stream.uniform(-1.0, 1.0))

    def descriptor(self) -> str:
        return "random"


class SafeSuboptimalPolicy(BehaviorPolicy):
    """Safe but suboptimal: hold the steerings near fixed targets.

    Velocity and gain are pulled toward 50; shift is pulled toward the center
    of the mis-calibration safe band for the current setpoint (the shift at
    which the effective shift is zero).  Corrections are proportional,
    capped at ``amplitude``, and perturbed by ``noise_scale`` * U(-1,1).
    Holding the safe band is provably penalty-safe but strictly worse than
    riding the rotation cycle.
    """

    def __init__(self, amplitude: float = 0.25, noise_scale: float = 0.05):
        if not (0.0 <= amplitude <= 1.0) or not (0.0 <= noise_scale <= 1.0):
            raise EvaluationError("amplitude and noise_scale must lie in [0, 1]")
        self.amplitude = amplitude
        self.noise_scale = noise_scale

    def _component(self, gap: float, scale: float, stream: RandomStream) -> float:
        pull = max(-self.amplitude, min(self.amplitude, gap / scale))
        value = pull + self.noise_scale * stream.uniform(-1.0, 1.0)
        return max(-1.0, min(1.0, value))

    def action(self, observation: Observation, stream: RandomStream) -> Action:
        shift_target = min(100.0, max(0.0, 20.0 * (observation.setpoint / 50.0 + 1.5)))
        return Action(
            self._component(50.0 - observation.velocity, VELOCITY_SCALE, stream),
            self._component(50.0 - observation.gain, GAIN_SCALE, stream),
            self._component(shift_target - observation.shift, SHIFT_SCALE, stream),
        )

    def descriptor(self) -> str:
        return f"safe:amplitude={self.amplitude!r},noise_scale={self.noise_scale!r}"


class CallbackPolicy(BehaviorPolicy):
    """Adapter for an external controller: any callable observation -> Action."""

    def __init__(self, fn: Callable[[Observation], Action], name: str = "external"):
        self._fn = fn
        self._name = name

    def action(self, observation: Observation, stream: RandomStream) -> Action:
        return self._fn(observation)

    def descriptor(self) -> str:
        return f"external:{self._name}"


def policy_from_descriptor(text: str) -> BehaviorPolicy:
    """Parse ``name[:key=value,...]`` into a policy instance."""
    name, _, params_text = text.partition(":")
    params: dict[str, float] = {}
    if params_text:
        for item in params_text.split(","):
            key, sep, value = item.partition("=")
            if not sep:
                raise EvaluationError(f"malformed policy parameter {item!r}")
            try:
                params[key.strip()] = float(value)
            except ValueError as exc:
                raise EvaluationError(f"non-numeric policy parameter {item!r}") from exc
    if name == "random":
        if params:
            raise EvaluationError("the random policy takes no parameters")
        return RandomUniformPolicy()
    if name == "safe":
        try:
            return SafeSuboptimalPolicy(**params)
        except TypeError as exc:
            raise EvaluationError(f"unknown safe-policy parameter: {exc}") from exc
    raise EvaluationError(f"unknown policy {name!r} (expected 'random' or 'safe')")
