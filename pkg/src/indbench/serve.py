"""Line-delimited JSON service exposing one environment over stdio.

Foreign-language bindings (the bundled TypeScript package among them) spawn
``indbench serve`` and exchange one JSON object per line.  Floats cross the
boundary as shortest-round-trip decimal strings, so values parse back to the
identical IEEE-754 doubles on the far side.

Requests:  {"id": <any>, "op": <name>, ...}
Responses: {"id": <any>, "ok": true,  "result": {...}}
           {"id": <any>, "ok": false, "error": {"type": ..., "message": ...}}

Ops: make {config} | reset {seed?} | step {action: [dv,dg,dh]} | observe
     | state | close.  One environment per process; the loop ends at EOF.
"""

from __future__ import annotations

import json
import sys

from . import __version__
from .environment import BenchmarkEnv, EnvConfig
from .errors import BenchmarkError
from .model import OBSERVATION_FIELDS, Action

PROTOCOL = "indbench-serve/1"

ACTION_SPACE = {
    "shape": [3],
    "low": [-1.0, -1.0, -1.0],
    "high": [1.0, 1.0, 1.0],
    "names": ["delta_velocity", "delta_gain", "delta_shift"],
}

OBSERVATION_SPACE = {
    "shape": [6],
    "low": [0.0, 0.0, 0.0, 0.0, None, 0.0],
    "high": [100.0, 100.0, 100.0, 100.0, None, None],
    "names": list(OBSERVATION_FIELDS),
}


class ServiceSession:
    """Request dispatcher around a single environment instance."""

    def __init__(self):
        self.env: BenchmarkEnv | None = None
        self.closed = False

    def handle(self, request: dict) -> dict:
        op = request.get("op")
        if not isinstance(op, str):
            raise BenchmarkError("request is missing an 'op' string")
        if self.closed:
            raise BenchmarkError("session is closed")
        if op == "make":
            return self._make(request.get("config") or {})
        if op == "close":
            self.env = None
            self.closed = True
            return {"closed": True}
        if self.env is None:
            raise BenchmarkError(f"no environment: send 'make' before {op!r}")
        if op == "reset":
            seed = request.get("seed")
            obs = self.env.reset(seed)
            return {"observation": list(obs.as_tuple())}
        if op == "step":
            action = request.get("action")
            if not isinstance(action, list) or len(action) != 3:
                raise BenchmarkError("'action' must be a 3-element array")
            result = self.env.step(Action(*(float(v) for v in action)))
            return {
                "observation": list(result.observation.as_tuple()),
                "reward": result.reward,
                "terminated": False,   # the benchmark is non-episodic
                "truncated": False,
                "info": {},
            }
        if op == "observe":
            return {"observation": list(self.env.observe().as_tuple())}
        if op == "state":
            return {"state": self.env.markov_state().to_dict()}
        raise BenchmarkError(f"unknown op {op!r}")

    def _make(self, config: dict) -> dict:
        self.env = BenchmarkEnv(EnvConfig.from_dict(config))
        return {
            "protocol": PROTOCOL,
            "benchmark_version": __version__,
            "action_space": ACTION_SPACE,
            "observation_space": OBSERVATION_SPACE,
            "observation": list(self.env.observe().as_tuple()),
        }


def serve_stdio(stdin=None, stdout=None) -> int:
    """Serve requests line by line until EOF.  Errors are per-request."""
    stdin = stdin if stdin is not None else sys.stdin
    stdout = stdout if stdout is not None else sys.stdout
    session = ServiceSession()
    for line in stdin:
        line = line.strip()
        if not line:
            continue
        request_id = None
        try:
            request = json.loads(line)
            request_id = request.get("id") if isinstance(request, dict) else None
            if not isinstance(request, dict):
                raise BenchmarkError("each request must be a JSON object")
            result = session.handle(request)
            response = {"id": request_id, "ok": True, "result": result}
        except Exception as exc:  # every failure maps to a per-request error
            response = {"id": request_id, "ok": False,
                        "error": {"type": type(exc).__name__, "message": str(exc)}}
        stdout.write(json.dumps(response) + "\n")
        stdout.flush()
    return 0
