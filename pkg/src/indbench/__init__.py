"""Deterministic, seedable industrial-control benchmark simulator.

A discrete-time stochastic environment with three controllable steerings, an
external setpoint, partially observable latent dynamics (delayed-convolved
operational cost, a rotation state machine over a Goldstone penalty
landscape, spike-noise fatigue with self-amplifying latents), plus tooling to
generate and evaluate offline-RL transition batches.
"""

__version__ = "0.1.0"

from .environment import BenchmarkEnv, EnvConfig, StepResult
from .errors import (BatchFormatError, BenchmarkError, ConfigError,
                     EvaluationError, InvalidActionError, SnapshotError)
from .model import Action, MarkovState, Observation, Steerings, apply_action
from .policies import (BehaviorPolicy, CallbackPolicy, RandomUniformPolicy,
                       SafeSuboptimalPolicy, policy_from_descriptor)
from .datagen import (Batch, BatchMetadata, TransitionRecord,
                      evaluate_policy, generate_batch, regenerate_batch,
                      rollout_trajectory, transfer_layout)
from .io import export_batch, import_batch, load_config

__all__ = [
    "__version__",
    "Action", "Steerings", "Observation", "MarkovState", "apply_action",
    "EnvConfig", "BenchmarkEnv", "StepResult",
    "BenchmarkError", "InvalidActionError", "ConfigError", "SnapshotError",
    "BatchFormatError", "EvaluationError",
    "BehaviorPolicy", "RandomUniformPolicy", "SafeSuboptimalPolicy",
    "CallbackPolicy", "policy_from_descriptor",
    "Batch", "BatchMetadata", "TransitionRecord",
    "generate_batch", "regenerate_batch", "rollout_trajectory",
    "evaluate_policy", "transfer_layout",
    "export_batch", "import_batch", "load_config",
]
