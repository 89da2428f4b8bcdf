"""The benchmark environment: composes the sub-dynamics into step/reset.

Canonical per-step order (fixed so the random stream is reproducible):

1. setpoint update (variable mode only)
2. action applied to the steerings
3. fatigue: effective values -> noise draws -> latent updates -> amplification
4. operational cost: instantaneous value pushed into the lag buffer, convolved
5. mis-calibration: effective shift -> rotation transition -> penalty
6. hidden consumption  c_hat = convolved cost + 25 * penalty
7. observable consumption  c = c_hat + gauss(0, 1 + 0.02 * c_hat)
8. reward  r = -(c + 3f)   (cost-negative convention, the default)

Uniform draws consumed per step (auditable via RandomStream.draw_count):

    fatigue noise               6
    fatigue amplification       2   only while bifurcated (a latent >= 1.2)
    consumption noise           2
    setpoint (variable mode)    1   extra when the setpoint sits on a bound
    segment resample            2 or 4   when a segment is exhausted

Constant-setpoint mode never consults the stream for the setpoint, so replay
streams match between the two modes except for setpoint draws.

Reset computes the first observation's consumption and fatigue with every
noise draw at zero (the test hook's "zero" rules) and without advancing any
latent, so the initial observation is well-defined and deterministic.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, fields

from . import fatigue as fat
from . import miscalibration as miscal
from . import opcost
from . import setpoint as sp
from .errors import ConfigError, SnapshotError
from .model import Action, MarkovState, Observation, Steerings, apply_action
from .rng import RandomStream, Sampler

SNAPSHOT_VERSION = "indbench-snapshot/1"

MISCALIBRATION_WEIGHT = 25.0
FATIGUE_WEIGHT = 3.0
NOISE_BASE_STD = 1.0
NOISE_STD_SLOPE = 0.02

SETPOINT_MODES = ("constant", "variable")
ACTION_MODES = ("strict", "lenient")
REWARD_CONVENTIONS = ("cost_negative", "cost_positive")

_MAX_SEED = 2 ** 64 - 1


@dataclass(frozen=True)
class EnvConfig:
    """Public environment configuration (JSON-schema mirrored in the README)."""

    setpoint_mode: str = "constant"
    setpoint: float = 50.0
    initial_velocity: float = 50.0
    initial_gain: float = 50.0
    initial_shift: float = 50.0
    seed: int = 0
    action_mode: str = "strict"
    reward_convention: str = "cost_negative"

    def validate(self) -> "EnvConfig":
        if self.setpoint_mode not in SETPOINT_MODES:
            raise ConfigError(f"setpoint_mode must be one of {SETPOINT_MODES}, "
                              f"got {self.setpoint_mode!r}")
        if self.action_mode not in ACTION_MODES:
            raise ConfigError(f"action_mode must be one of {ACTION_MODES}, "
                              f"got {self.action_mode!r}")
        if self.reward_convention not in REWARD_CONVENTIONS:
            raise ConfigError(f"reward_convention must be one of {REWARD_CONVENTIONS}, "
                              f"got {self.reward_convention!r}")
        for name in ("setpoint", "initial_velocity", "initial_gain", "initial_shift"):
            value = getattr(self, name)
            if not isinstance(value, (int, float)) or not (0.0 <= value <= 100.0):
                raise ConfigError(f"{name}={value!r} outside [0, 100]")
        if not isinstance(self.seed, int) or isinstance(self.seed, bool) \
                or not (0 <= self.seed <= _MAX_SEED):
            raise ConfigError(f"seed={self.seed!r} is not a 64-bit unsigned integer")
        return self

    def to_dict(self) -> dict:
        return {f.name: getattr(self, f.name) for f in fields(self)}

    @classmethod
    def from_dict(cls, payload: dict) -> "EnvConfig":
        known = {f.name for f in fields(cls)}
        unknown = set(payload) - known
        if unknown:
            raise ConfigError(f"unknown config keys: {sorted(unknown)}")
        return cls(**payload).validate()


@dataclass(frozen=True)
class StepResult:
    observation: Observation
    reward: float
    state: MarkovState  # post-step snapshot, exposed for debugging and oracles


class BenchmarkEnv:
    """One simulator instance.

    Single-owner mutable state: do not call ``step`` concurrently on one
    instance.  Independent instances share nothing and may run in parallel.

    ``noise_suppression`` ("zero" | "mean") is a test-only hook replacing
    every distribution draw by the distribution's zero/mean value without
    consuming the stream.  It is deliberately absent from the public
    configuration schema.
    """

    def __init__(self, config: EnvConfig | None = None, *,
                 noise_suppression: str | None = None):
        self.config = (config or EnvConfig()).validate()
        self._suppress = noise_suppression
        self._stream: RandomStream | None = None
        self._sampler: Sampler | None = None
        self._state: MarkovState | None = None
        self.reset()

    # -- lifecycle -----------------------------------------------------

    def reset(self, seed: int | None = None) -> Observation:
        """Start a fresh trajectory; ``seed`` overrides the configured one."""
        cfg = self.config
        if seed is None:
            seed = cfg.seed
        self._stream = RandomStream(seed)
        self._sampler = Sampler(self._stream, self._suppress)

        p = cfg.setpoint
        if cfg.setpoint_mode == "variable":
            segment = sp.sample_segment(self._sampler)
        else:
            segment = sp.SetpointSegment(0, 0.0)

        v, g, h = cfg.initial_velocity, cfg.initial_gain, cfg.initial_shift
        theta = opcost.operational_cost(p, v, g)
        history = opcost.initial_history(theta)

        v_eff = fat.effective_velocity(v, g, p)
        g_eff = fat.effective_gain(g, p)
        mu_v, mu_g = v_eff, g_eff  # latents anchor at the effective values

        # First observation: one noise-free evaluation (zero-suppressed
        # draws), latents untouched.
        quiet = Sampler(self._stream, "zero")
        noise = fat.sample_noise(v_eff, g_eff, quiet)
        amp = fat.amplification(mu_v, mu_g, noise.eta_velocity,
                                noise.eta_gain, quiet)
        f = fat.fatigue(fat.basic_fatigue(v, g), amp)

        h_e = miscal.effective_shift(h, p)
        hidden = opcost.convolved_cost(history) \
            + MISCALIBRATION_WEIGHT * miscal.penalty(0, h_e)
        c = hidden  # zero-suppressed observation noise

        self._state = MarkovState(
            setpoint=p, velocity=v, gain=g, shift=h, consumption=c, fatigue=f,
            cost_history=history, domain=1, response=1, direction=0,
            mu_velocity=mu_v, mu_gain=mu_g,
            setpoint_steps_remaining=segment.steps_remaining,
            setpoint_rate=segment.rate,
        )
        return self._state.observation()

    def step(self, action: Action) -> StepResult:
        """Advance one time step under the given action."""
        state = self._state
        sampler = self._sampler
        cfg = self.config

        if cfg.action_mode == "strict":
            action = action.validated()
        else:
            action = action.clamped()

        # 1. setpoint
        p = state.setpoint
        if cfg.setpoint_mode == "variable":
            segment = sp.SetpointSegment(state.setpoint_steps_remaining,
                                         state.setpoint_rate)
            p, segment = sp.advance_setpoint(p, segment, sampler)
            state.setpoint_steps_remaining = segment.steps_remaining
            state.setpoint_rate = segment.rate
            state.setpoint = p

        # 2. action
        steerings = apply_action(
            Steerings(state.velocity, state.gain, state.shift), action)
        v, g, h = steerings.velocity, steerings.gain, steerings.shift
        state.velocity, state.gain, state.shift = v, g, h

        # 3. fatigue
        v_eff = fat.effective_velocity(v, g, p)
        g_eff = fat.effective_gain(g, p)
        noise = fat.sample_noise(v_eff, g_eff, sampler)
        state.mu_velocity = fat.update_latent(state.mu_velocity, v_eff,
                                              noise.eta_velocity)
        state.mu_gain = fat.update_latent(state.mu_gain, g_eff, noise.eta_gain)
        amp = fat.amplification(state.mu_velocity, state.mu_gain,
                                noise.eta_velocity, noise.eta_gain, sampler)
        f = fat.fatigue(fat.basic_fatigue(v, g), amp)
        state.fatigue = f

        # 4. operational cost
        theta = opcost.operational_cost(p, v, g)
        state.cost_history = opcost.push_cost(state.cost_history, theta)
        theta_c = opcost.convolved_cost(state.cost_history)

        # 5. mis-calibration
        h_e = miscal.effective_shift(h, p)
        rotation = miscal.advance_rotation(
            miscal.RotationState(state.domain, state.response, state.direction), h_e)
        state.domain = rotation.domain
        state.response = rotation.response
        state.direction = rotation.direction
        m = miscal.penalty(rotation.direction, h_e)

        # 6.-7. consumption
        hidden = theta_c + MISCALIBRATION_WEIGHT * m
        c = hidden + sampler.gauss(0.0, NOISE_BASE_STD + NOISE_STD_SLOPE * hidden)
        state.consumption = c

        # 8. reward
        reward = -(c + FATIGUE_WEIGHT * f)
        if cfg.reward_convention == "cost_positive":
            reward = -reward

        return StepResult(state.observation(), reward, state.copy())

    # -- inspection ----------------------------------------------------

    def observe(self) -> Observation:
        return self._state.observation()

    def markov_state(self) -> MarkovState:
        """Snapshot of the full latent state (debugging / oracle use)."""
        return self._state.copy()

    @property
    def draw_count(self) -> int:
        """Uniform draws consumed so far (stream-position audit)."""
        return self._stream.draw_count

    # -- serialization -------------------------------------------------

    def snapshot(self) -> bytes:
        """Lossless capture of config, Markov state, and stream position."""
        payload = {
            "version": SNAPSHOT_VERSION,
            "config": self.config.to_dict(),
            "state": self._state.to_dict(),
            "rng": self._stream.state_as_json(),
        }
        return json.dumps(payload, sort_keys=True).encode("utf-8")

    @classmethod
    def restore(cls, payload: bytes, *,
                noise_suppression: str | None = None) -> "BenchmarkEnv":
        """Rebuild an environment from :meth:`snapshot` output."""
        try:
            data = json.loads(payload.decode("utf-8"))
        except (UnicodeDecodeError, json.JSONDecodeError) as exc:
            raise SnapshotError(f"malformed snapshot payload: {exc}") from exc
        version = data.get("version")
        if version != SNAPSHOT_VERSION:
            raise SnapshotError(f"snapshot version {version!r} does not match "
                                f"{SNAPSHOT_VERSION!r}")
        try:
            env = cls(EnvConfig.from_dict(data["config"]),
                      noise_suppression=noise_suppression)
            env._state = MarkovState.from_dict(data["state"])
            env._stream.set_state_from_json(data["rng"])
        except (KeyError, TypeError, ValueError) as exc:
            raise SnapshotError(f"incomplete snapshot payload: {exc}") from exc
        return env
