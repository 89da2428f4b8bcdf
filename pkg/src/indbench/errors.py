"""Exception types shared across the package."""


class BenchmarkError(Exception):
    """Base class for all errors raised by this package."""


class InvalidActionError(BenchmarkError):
    """An action component is outside [-1, 1] (strict validation mode)."""


class ConfigError(BenchmarkError):
    """An environment configuration value is out of range or unknown."""


class SnapshotError(BenchmarkError):
    """A serialized environment snapshot is malformed or version-incompatible."""


class BatchFormatError(BenchmarkError):
    """A batch file or its metadata sidecar cannot be parsed or has the wrong schema."""


class EvaluationError(BenchmarkError):
    """Invalid arguments to a rollout or evaluation run."""
