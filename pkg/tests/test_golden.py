"""Frozen-trajectory regression: the repository carries a golden rollout file
generated once; every build must reproduce it byte for byte."""

import pathlib
import subprocess
import sys

from indbench.datagen import rollout_trajectory
from indbench.environment import EnvConfig
from indbench.io import trajectory_lines

GOLDEN = pathlib.Path(__file__).parent / "data" / "golden_rollout_seed2024.csv"


def test_library_reproduces_golden_trajectory():
    steps = rollout_trajectory(EnvConfig(setpoint=50.0, seed=2024), 200)
    text = "\n".join(trajectory_lines(steps, include_latents=True)) + "\n"
    assert text.encode("utf-8") == GOLDEN.read_bytes()


def test_cli_reproduces_golden_trajectory(tmp_path):
    out = tmp_path / "rollout.csv"
    result = subprocess.run(
        [sys.executable, "-m", "indbench", "rollout", "--seed", "2024",
         "--setpoint", "50", "--steps", "200", "--policy", "random",
         "--debug-latents", "--out", str(out)],
        capture_output=True, text=True)
    assert result.returncode == 0, result.stderr
    assert out.read_bytes() == GOLDEN.read_bytes()
