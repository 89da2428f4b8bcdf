"""File interfaces: config documents, batch files, trajectory tables.

Floats are written with ``repr`` (shortest round-trip form), so exports are
byte-deterministic and parse back to the identical IEEE-754 doubles.  Batch
metadata lives in a ``<path>.meta.json`` sidecar: the data file stays a plain
record table (JSONL line count == record count) and the sidecar carries the
schema version that is checked on import.
"""

from __future__ import annotations

import json
import os

from .datagen import (CSV_COLUMNS, SCHEMA, Batch, BatchMetadata,
                      TransitionRecord, TrajectoryStep)
from .environment import EnvConfig
from .errors import BatchFormatError, ConfigError
from .model import Action

TRAJECTORY_COLUMNS = ("t", "setpoint", "velocity", "gain", "shift",
                      "consumption", "fatigue", "reward")
LATENT_COLUMNS = ("domain", "response", "direction", "mu_velocity", "mu_gain")


def load_config(path: str) -> EnvConfig:
    """Read an environment config from a JSON document."""
    try:
        with open(path, "r", encoding="utf-8") as fh:
            payload = json.load(fh)
    except json.JSONDecodeError as exc:
        raise ConfigError(f"config file {path!r} is not valid JSON: {exc}") from exc
    if not isinstance(payload, dict):
        raise ConfigError(f"config file {path!r} must contain a JSON object")
    return EnvConfig.from_dict(payload)


# -- batches -----------------------------------------------------------


def _meta_path(path: str) -> str:
    return path + ".meta.json"


def export_batch(batch: Batch, fmt: str, path: str) -> None:
    """Write a batch as ``csv`` or ``jsonl`` plus its metadata sidecar."""
    if fmt == "csv":
        lines = [",".join(CSV_COLUMNS)]
        lines.extend(",".join(repr(v) for v in rec.as_row()) for rec in batch.records)
        body = "\n".join(lines) + "\n"
    elif fmt == "jsonl":
        body = "".join(
            json.dumps({"observation": list(rec.observation.as_tuple()),
                        "action": list(rec.action.as_tuple()),
                        "next_observation": list(rec.next_observation.as_tuple()),
                        "reward": rec.reward}, separators=(",", ":")) + "\n"
            for rec in batch.records)
    else:
        raise BatchFormatError(f"unknown batch format {fmt!r} (csv or jsonl)")
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(body)
    if batch.metadata is not None:
        with open(_meta_path(path), "w", encoding="utf-8", newline="") as fh:
            fh.write(json.dumps(batch.metadata.to_dict(), indent=2,
                                sort_keys=True) + "\n")


def import_batch(path: str, fmt: str | None = None) -> Batch:
    """Read a batch back; the inverse of :func:`export_batch`."""
    if fmt is None:
        ext = os.path.splitext(path)[1].lstrip(".").lower()
        fmt = ext or None
    if fmt not in ("csv", "jsonl"):
        raise BatchFormatError(f"cannot infer batch format for {path!r}; "
                               f"pass fmt='csv' or 'jsonl'")

    records: list[TransitionRecord] = []
    with open(path, "r", encoding="utf-8") as fh:
        if fmt == "csv":
            header = fh.readline().rstrip("\n")
            if header != ",".join(CSV_COLUMNS):
                raise BatchFormatError(f"unexpected CSV header in {path!r}")
            for line in fh:
                line = line.strip()
                if not line:
                    continue
                try:
                    row = tuple(float(v) for v in line.split(","))
                except ValueError as exc:
                    raise BatchFormatError(f"bad CSV row in {path!r}: {exc}") from exc
                records.append(TransitionRecord.from_row(row))
        else:
            for line in fh:
                line = line.strip()
                if not line:
                    continue
                try:
                    obj = json.loads(line)
                    records.append(TransitionRecord(
                        observation=_obs(obj["observation"]),
                        action=Action(*obj["action"]),
                        next_observation=_obs(obj["next_observation"]),
                        reward=float(obj["reward"])))
                except (json.JSONDecodeError, KeyError, TypeError) as exc:
                    raise BatchFormatError(f"bad JSONL record in {path!r}: {exc}") from exc

    metadata = None
    meta_path = _meta_path(path)
    if os.path.exists(meta_path):
        with open(meta_path, "r", encoding="utf-8") as fh:
            payload = json.load(fh)
        if payload.get("schema") != SCHEMA:
            raise BatchFormatError(f"batch schema {payload.get('schema')!r} does "
                                   f"not match {SCHEMA!r}")
        metadata = BatchMetadata.from_dict(payload)
    return Batch(records, metadata)


def _obs(values):
    from .model import Observation
    return Observation(*values)


# -- trajectories ------------------------------------------------------


def trajectory_lines(steps: list[TrajectoryStep], include_latents: bool = False):
    """Yield CSV lines for a rollout (header first)."""
    columns = TRAJECTORY_COLUMNS + (LATENT_COLUMNS if include_latents else ())
    yield ",".join(columns)
    for step in steps:
        obs = step.observation
        row = [str(step.t), repr(obs.setpoint), repr(obs.velocity), repr(obs.gain),
               repr(obs.shift), repr(obs.consumption), repr(obs.fatigue),
               repr(step.reward)]
        if include_latents:
            st = step.state
            row.extend([str(st.domain), str(st.response), str(st.direction),
                        repr(st.mu_velocity), repr(st.mu_gain)])
        yield ",".join(row)


def write_trajectory(path: str, steps: list[TrajectoryStep],
                     include_latents: bool = False) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        for line in trajectory_lines(steps, include_latents):
            fh.write(line + "\n")


# -- action sequences (rollout replay) ---------------------------------


def read_actions(path: str) -> list[Action]:
    """Read an action sequence: JSONL arrays ``[dv, dg, dh]`` or a CSV with a
    delta_velocity,delta_gain,delta_shift header."""
    ext = os.path.splitext(path)[1].lstrip(".").lower()
    actions: list[Action] = []
    with open(path, "r", encoding="utf-8") as fh:
        if ext == "csv":
            header = fh.readline().strip()
            if header != "delta_velocity,delta_gain,delta_shift":
                raise BatchFormatError(f"unexpected actions CSV header in {path!r}")
            for line in fh:
                line = line.strip()
                if not line:
                    continue
                parts = line.split(",")
                if len(parts) != 3:
                    raise BatchFormatError(f"bad actions row in {path!r}: {line!r}")
                actions.append(Action(*(float(v) for v in parts)))
        else:
            for line in fh:
                line = line.strip()
                if not line:
                    continue
                try:
                    values = json.loads(line)
                    actions.append(Action(*(float(v) for v in values)))
                except (json.JSONDecodeError, TypeError, ValueError) as exc:
                    raise BatchFormatError(f"bad actions line in {path!r}: {exc}") from exc
    return actions
