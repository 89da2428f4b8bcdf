"""Command-line interface: rollouts, batch generation, evaluation, transfer
layouts, penalty-landscape dumps, and the stdio bindings service.

Exit codes: 0 success, 2 validation error (bad arguments, config, policy, or
file schema), 3 I/O error.
"""

from __future__ import annotations

import argparse
import contextlib
import json
import sys

from . import __version__, io
from .datagen import evaluate_policy, generate_batch, rollout_trajectory, transfer_layout
from .environment import EnvConfig
from .errors import BenchmarkError
from .miscalibration import penalty
from .policies import policy_from_descriptor
from .serve import serve_stdio


def _parse_setpoints(text: str) -> list[float]:
    try:
        return [float(v) for v in text.split(",") if v.strip() != ""]
    except ValueError as exc:
        raise BenchmarkError(f"bad setpoint list {text!r}: {exc}") from exc


def _base_config(args) -> EnvConfig:
    if getattr(args, "config", None):
        cfg = io.load_config(args.config)
    else:
        cfg = EnvConfig()
    if getattr(args, "setpoint", None) is not None:
        cfg = EnvConfig(**{**cfg.to_dict(), "setpoint_mode": "constant",
                           "setpoint": args.setpoint})
    if getattr(args, "variable", False):
        cfg = EnvConfig(**{**cfg.to_dict(), "setpoint_mode": "variable"})
    if getattr(args, "seed", None) is not None:
        cfg = EnvConfig(**{**cfg.to_dict(), "seed": args.seed})
    return cfg.validate()


@contextlib.contextmanager
def _open_out(path: str | None):
    if path is None or path == "-":
        yield sys.stdout
    else:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            yield fh


def cmd_rollout(args) -> int:
    cfg = _base_config(args)
    actions = io.read_actions(args.actions) if args.actions else None
    policy = None if actions is not None else policy_from_descriptor(args.policy)
    steps = rollout_trajectory(cfg, args.steps, policy=policy, actions=actions)
    with _open_out(args.out) as fh:
        for line in io.trajectory_lines(steps, include_latents=args.debug_latents):
            fh.write(line + "\n")
    return 0


def cmd_batch(args) -> int:
    policy = policy_from_descriptor(args.policy)
    setpoints = _parse_setpoints(args.setpoints)
    batch = generate_batch(setpoints, args.steps, policy, args.seed,
                           base_config=_base_config(args))
    io.export_batch(batch, args.format, args.out)
    print(f"wrote {len(batch)} transitions to {args.out}", file=sys.stderr)
    return 0


def cmd_evaluate(args) -> int:
    policy = policy_from_descriptor(args.policy)
    setpoints = _parse_setpoints(args.setpoints)
    summary = evaluate_policy(policy, setpoints, args.steps, args.episodes,
                              args.seed, init_mode=args.init)
    with _open_out(args.out) as fh:
        fh.write(json.dumps(summary.to_dict(), indent=2, sort_keys=True) + "\n")
    return 0


def cmd_transfer(args) -> int:
    policy = policy_from_descriptor(args.policy)
    source, target = transfer_layout(args.source_setpoint, args.source_steps,
                                     args.target_setpoint, args.target_steps,
                                     args.seed, policy=policy)
    io.export_batch(source, args.format, args.out_source)
    io.export_batch(target, args.format, args.out_target)
    print(f"wrote {len(source)} source and {len(target)} target transitions",
          file=sys.stderr)
    return 0


def cmd_landscape(args) -> int:
    if args.step <= 0:
        raise BenchmarkError("--step must be positive")
    n = round(3.0 / args.step)
    with _open_out(args.out) as fh:
        fh.write("direction,effective_shift,penalty\n")
        for direction in range(-6, 7):
            for k in range(n + 1):
                h_e = -1.5 + k * args.step
                fh.write(f"{direction},{h_e!r},{penalty(direction, h_e)!r}\n")
    return 0


def cmd_serve(args) -> int:
    return serve_stdio()


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="indbench",
        description="Industrial-control benchmark simulator and batch-data tools.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, seed_default=None, setpoint=True):
        p.add_argument("--seed", type=int, default=seed_default,
                       help="seed (64-bit unsigned)")
        p.add_argument("--config", help="environment config JSON file")
        if setpoint:
            p.add_argument("--setpoint", type=float, default=None,
                           help="constant setpoint value")
            p.add_argument("--variable", action="store_true",
                           help="variable (time-varying) setpoint mode")

    p = sub.add_parser("rollout", help="roll one trajectory and write it as CSV")
    common(p)
    p.add_argument("--steps", type=int, default=1000)
    p.add_argument("--policy", default="random",
                   help="policy descriptor: random | safe[:k=v,...]")
    p.add_argument("--actions", help="replay actions from a CSV/JSONL file "
                                     "instead of running a policy")
    p.add_argument("--out", default="-", help="output path (default stdout)")
    p.add_argument("--debug-latents", action="store_true",
                   help="append latent-state columns")
    p.set_defaults(handler=cmd_rollout)

    p = sub.add_parser("batch", help="generate a transition batch across setpoints")
    common(p, seed_default=0, setpoint=False)
    p.add_argument("--setpoints", default="10,20,30,40,50,60,70,80,90,100",
                   help="comma-separated setpoint list")
    p.add_argument("--steps", type=int, default=1000, help="steps per setpoint")
    p.add_argument("--policy", default="random")
    p.add_argument("--format", choices=("csv", "jsonl"), default="csv")
    p.add_argument("--out", required=True)
    p.set_defaults(handler=cmd_batch)

    p = sub.add_parser("evaluate", help="score a policy's per-step reward")
    p.add_argument("--setpoints", default="10,20,30,40,50,60,70,80,90,100")
    p.add_argument("--steps", type=int, default=1000, help="scored horizon")
    p.add_argument("--episodes", type=int, default=10)
    p.add_argument("--policy", default="random")
    p.add_argument("--init", choices=("start", "random"), default="start")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", default="-")
    p.set_defaults(handler=cmd_evaluate)

    p = sub.add_parser("transfer", help="source/target batches for transfer learning")
    p.add_argument("--source-setpoint", type=float, default=50.0)
    p.add_argument("--source-steps", type=int, default=10000)
    p.add_argument("--target-setpoint", type=float, default=75.0)
    p.add_argument("--target-steps", type=int, default=500)
    p.add_argument("--policy", default="random")
    p.add_argument("--format", choices=("csv", "jsonl"), default="csv")
    p.add_argument("--out-source", required=True)
    p.add_argument("--out-target", required=True)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(handler=cmd_transfer)

    p = sub.add_parser("landscape", help="dump the penalty landscape grid as CSV")
    p.add_argument("--step", type=float, default=0.01,
                   help="effective-shift grid step")
    p.add_argument("--out", default="-")
    p.set_defaults(handler=cmd_landscape)

    p = sub.add_parser("serve", help="line-JSON bindings service over stdio")
    p.set_defaults(handler=cmd_serve)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except BenchmarkError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
