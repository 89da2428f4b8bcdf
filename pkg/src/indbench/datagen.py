"""Batch-data generation, policy evaluation, and transfer layouts.

A batch is a list of (observation, action, next observation, reward)
transitions plus metadata sufficient to regenerate it bit-exactly: the master
seed, the setpoint list, the per-setpoint step count, and the policy
descriptor.  Every per-setpoint rollout owns an independently derived
environment seed and policy stream, so generation order cannot change the
output bytes; records are concatenated in ascending-setpoint order.

The reward stored with a transition is the reward computed from the successor
observation (the environment's step reward).
"""

from __future__ import annotations

import statistics
from dataclasses import dataclass, field

from . import __version__
from .environment import BenchmarkEnv, EnvConfig
from .errors import BatchFormatError, EvaluationError, InvalidActionError
from .model import Action, MarkovState, Observation
from .policies import BehaviorPolicy, RandomUniformPolicy, policy_from_descriptor
from .rng import RandomStream, derive_seed

SCHEMA = "indbench-transitions/1"
BURN_IN_STEPS = 100

CSV_COLUMNS = (
    "setpoint", "velocity", "gain", "shift", "consumption", "fatigue",
    "delta_velocity", "delta_gain", "delta_shift",
    "next_setpoint", "next_velocity", "next_gain", "next_shift",
    "next_consumption", "next_fatigue", "reward",
)


@dataclass(frozen=True)
class TransitionRecord:
    observation: Observation
    action: Action
    next_observation: Observation
    reward: float

    def as_row(self) -> tuple[float, ...]:
        return (self.observation.as_tuple() + self.action.as_tuple()
                + self.next_observation.as_tuple() + (self.reward,))

    @classmethod
    def from_row(cls, row: tuple[float, ...]) -> "TransitionRecord":
        if len(row) != len(CSV_COLUMNS):
            raise BatchFormatError(f"expected {len(CSV_COLUMNS)} values per "
                                   f"record, got {len(row)}")
        return cls(Observation(*row[0:6]), Action(*row[6:9]),
                   Observation(*row[9:15]), row[15])


@dataclass(frozen=True)
class BatchMetadata:
    seed: int
    setpoints: tuple[float, ...]
    steps_per_setpoint: int
    policy: str
    kind: str = "batch"
    schema: str = SCHEMA
    benchmark_version: str = __version__
    experiment: dict | None = None  # e.g. both sides of a transfer layout

    def to_dict(self) -> dict:
        out = {
            "schema": self.schema,
            "benchmark_version": self.benchmark_version,
            "kind": self.kind,
            "seed": self.seed,
            "setpoints": list(self.setpoints),
            "steps_per_setpoint": self.steps_per_setpoint,
            "policy": self.policy,
        }
        if self.experiment is not None:
            out["experiment"] = self.experiment
        return out

    @classmethod
    def from_dict(cls, payload: dict) -> "BatchMetadata":
        try:
            return cls(seed=payload["seed"],
                       setpoints=tuple(payload["setpoints"]),
                       steps_per_setpoint=payload["steps_per_setpoint"],
                       policy=payload["policy"],
                       kind=payload.get("kind", "batch"),
                       schema=payload["schema"],
                       benchmark_version=payload.get("benchmark_version", ""),
                       experiment=payload.get("experiment"))
        except KeyError as exc:
            raise BatchFormatError(f"metadata missing key {exc}") from exc


@dataclass
class Batch:
    records: list[TransitionRecord]
    metadata: BatchMetadata | None = None

    def __len__(self) -> int:
        return len(self.records)


@dataclass(frozen=True)
class TrajectoryStep:
    """One rollout step: the post-step observation, reward, and latent state."""

    t: int
    action: Action
    observation: Observation
    reward: float
    state: MarkovState


def _setpoint_env(setpoint: float, seed: int, base: EnvConfig | None) -> BenchmarkEnv:
    base = base or EnvConfig()
    cfg = EnvConfig(setpoint_mode="constant", setpoint=setpoint,
                    initial_velocity=base.initial_velocity,
                    initial_gain=base.initial_gain,
                    initial_shift=base.initial_shift,
                    seed=seed, action_mode=base.action_mode,
                    reward_convention=base.reward_convention)
    return BenchmarkEnv(cfg)


def generate_batch(setpoints, steps_per_setpoint: int, policy: BehaviorPolicy,
                   seed: int, base_config: EnvConfig | None = None) -> Batch:
    """Roll the policy for ``steps_per_setpoint`` steps at each setpoint.

    Environments start from the default steerings (50 each, unless a base
    config overrides them) at a constant setpoint.  Records are concatenated
    in ascending-setpoint order.
    """
    setpoints = tuple(sorted(float(s) for s in setpoints))
    if not setpoints:
        raise EvaluationError("at least one setpoint is required")
    for s in setpoints:
        if not (0.0 <= s <= 100.0):
            raise EvaluationError(f"setpoint {s!r} outside [0, 100]")
    if steps_per_setpoint < 1:
        raise EvaluationError("steps_per_setpoint must be >= 1")

    records: list[TransitionRecord] = []
    for index, setpoint in enumerate(setpoints):
        env = _setpoint_env(setpoint, derive_seed(seed, f"env:{index}:{setpoint!r}"),
                            base_config)
        stream = RandomStream(derive_seed(seed, f"policy:{index}:{setpoint!r}"))
        obs = env.observe()
        for t in range(steps_per_setpoint):
            act = policy.action(obs, stream)
            try:
                result = env.step(act)
            except InvalidActionError as exc:
                raise InvalidActionError(
                    f"policy emitted an invalid action at setpoint {setpoint}, "
                    f"step {t}: {exc}") from exc
            records.append(TransitionRecord(obs, act, result.observation,
                                            result.reward))
            obs = result.observation

    metadata = BatchMetadata(seed=seed, setpoints=setpoints,
                             steps_per_setpoint=steps_per_setpoint,
                             policy=policy.descriptor())
    return Batch(records, metadata)


def regenerate_batch(metadata: BatchMetadata) -> Batch:
    """Rebuild a batch from its metadata; bit-exact for reconstructable policies."""
    if metadata.schema != SCHEMA:
        raise BatchFormatError(f"metadata schema {metadata.schema!r} does not "
                               f"match {SCHEMA!r}")
    policy = policy_from_descriptor(metadata.policy)
    batch = generate_batch(metadata.setpoints, metadata.steps_per_setpoint,
                           policy, metadata.seed)
    return Batch(batch.records, metadata)


def rollout_trajectory(config: EnvConfig, steps: int,
                       policy: BehaviorPolicy | None = None,
                       actions: list[Action] | None = None,
                       seed: int | None = None) -> list[TrajectoryStep]:
    """Roll one environment, driven by a policy or a fixed action sequence.

    With ``actions`` given, exactly ``len(actions)`` steps run (``steps`` is
    ignored); otherwise the policy stream is derived from the environment
    seed.
    """
    if policy is None and actions is None:
        policy = RandomUniformPolicy()
    env_seed = config.seed if seed is None else seed
    env = BenchmarkEnv(config)
    env.reset(env_seed)
    stream = RandomStream(derive_seed(env_seed, "rollout-policy"))

    if actions is not None:
        plan = list(actions)
    else:
        if steps < 1:
            raise EvaluationError("steps must be >= 1")
        plan = None

    out: list[TrajectoryStep] = []
    obs = env.observe()
    total = len(plan) if plan is not None else steps
    for t in range(total):
        act = plan[t] if plan is not None else policy.action(obs, stream)
        result = env.step(act)
        out.append(TrajectoryStep(t + 1, act, result.observation, result.reward,
                                  result.state))
        obs = result.observation
    return out


@dataclass
class SetpointScore:
    mean_reward: float
    std_reward: float
    episodes: int
    horizon: int


@dataclass
class EvaluationSummary:
    per_setpoint: dict[float, SetpointScore] = field(default_factory=dict)
    mean_reward: float = 0.0
    std_reward: float = 0.0

    def to_dict(self) -> dict:
        return {
            "aggregate": {"mean_reward": self.mean_reward,
                          "std_reward": self.std_reward},
            "per_setpoint": {
                repr(sp): {"mean_reward": s.mean_reward, "std_reward": s.std_reward,
                           "episodes": s.episodes, "horizon": s.horizon}
                for sp, s in self.per_setpoint.items()
            },
        }


def evaluate_policy(policy: BehaviorPolicy, setpoints, horizon: int,
                    episodes: int, seed: int,
                    init_mode: str = "start") -> EvaluationSummary:
    """Mean/std of per-step reward for a policy, per setpoint and aggregate.

    ``init_mode="start"`` begins every episode from the default settings;
    ``"random"`` draws the steerings uniformly from [0,100]^3, re-derives the
    latents exactly as reset does, and runs a 100-step burn-in under the
    evaluated policy before scoring.
    """
    if episodes < 1:
        raise EvaluationError("episodes must be >= 1")
    if horizon < 1:
        raise EvaluationError("horizon must be >= 1")
    if init_mode not in ("start", "random"):
        raise EvaluationError(f"init_mode must be 'start' or 'random', "
                              f"got {init_mode!r}")
    setpoints = tuple(sorted(float(s) for s in setpoints))
    if not setpoints:
        raise EvaluationError("at least one setpoint is required")

    summary = EvaluationSummary()
    all_rewards: list[float] = []
    for index, setpoint in enumerate(setpoints):
        rewards: list[float] = []
        for episode in range(episodes):
            label = f"eval:{index}:{setpoint!r}:{episode}"
            if init_mode == "random":
                init = RandomStream(derive_seed(seed, label + ":init"))
                cfg = EnvConfig(setpoint_mode="constant", setpoint=setpoint,
                                initial_velocity=init.uniform(0.0, 100.0),
                                initial_gain=init.uniform(0.0, 100.0),
                                initial_shift=init.uniform(0.0, 100.0),
                                seed=derive_seed(seed, label))
            else:
                cfg = EnvConfig(setpoint_mode="constant", setpoint=setpoint,
                                seed=derive_seed(seed, label))
            env = BenchmarkEnv(cfg)
            stream = RandomStream(derive_seed(seed, label + ":policy"))
            obs = env.observe()
            burn_in = BURN_IN_STEPS if init_mode == "random" else 0
            for t in range(burn_in + horizon):
                result = env.step(policy.action(obs, stream))
                obs = result.observation
                if t >= burn_in:
                    rewards.append(result.reward)
        mean = statistics.fmean(rewards)
        std = statistics.pstdev(rewards) if len(rewards) > 1 else 0.0
        summary.per_setpoint[setpoint] = SetpointScore(mean, std, episodes, horizon)
        all_rewards.extend(rewards)
    summary.mean_reward = statistics.fmean(all_rewards)
    summary.std_reward = statistics.pstdev(all_rewards) if len(all_rewards) > 1 else 0.0
    return summary


def transfer_layout(source_setpoint: float, source_size: int,
                    target_setpoint: float, target_size: int, seed: int,
                    policy: BehaviorPolicy | None = None) -> tuple[Batch, Batch]:
    """Two independently seeded batches for a transfer experiment: a large
    source batch at one setpoint and a small target batch at another."""
    if source_size < 1 or target_size < 1:
        raise EvaluationError("batch sizes must be >= 1")
    policy = policy or RandomUniformPolicy()
    source = generate_batch([source_setpoint], source_size, policy,
                            derive_seed(seed, "transfer:source"))
    target = generate_batch([target_setpoint], target_size, policy,
                            derive_seed(seed, "transfer:target"))
    layout = {"source_setpoint": float(source_setpoint), "source_size": source_size,
              "target_setpoint": float(target_setpoint), "target_size": target_size}
    source.metadata = BatchMetadata(
        seed=source.metadata.seed, setpoints=source.metadata.setpoints,
        steps_per_setpoint=source_size, policy=policy.descriptor(),
        kind="transfer-source", experiment=layout)
    target.metadata = BatchMetadata(
        seed=target.metadata.seed, setpoints=target.metadata.setpoints,
        steps_per_setpoint=target_size, policy=policy.descriptor(),
        kind="transfer-target", experiment=layout)
    return source, target
