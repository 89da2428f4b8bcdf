import math
import statistics

from indbench.rng import RandomStream, Sampler
from indbench.setpoint import (SetpointSegment, advance_setpoint,
                               sample_segment)


class ScriptedSampler:
    """uniform01 returns a scripted sequence; only what these tests need."""

    def __init__(self, values):
        self._values = list(values)

    def uniform01(self):
        return self._values.pop(0)

    def randint(self, lo, hi):
        return lo + int(self.uniform01() * (hi - lo + 1))


def test_segment_statistics():
    sampler = Sampler(RandomStream(2024))
    segments = [sample_segment(sampler) for _ in range(100_000)]
    lengths = [s.steps_remaining for s in segments]
    assert all(1 <= l <= 100 for l in lengths)
    assert abs(statistics.fmean(lengths) - 50.5) <= 0.5
    zero_fraction = sum(1 for s in segments if s.rate == 0.0) / len(segments)
    assert abs(zero_fraction - 0.10) <= 0.01
    # non-flat rates: magnitude under 1, both signs present
    rates = [s.rate for s in segments if s.rate != 0.0]
    assert all(-1.0 < r < 1.0 for r in rates)
    negative = sum(1 for r in rates if r < 0) / len(rates)
    assert abs(negative - 0.5) <= 0.01


def test_interior_step_adds_rate():
    p, seg = advance_setpoint(50.0, SetpointSegment(5, 0.5), ScriptedSampler([]))
    assert p == 50.5
    assert seg == SetpointSegment(4, 0.5)


def test_boundary_flip_reflects():
    # scripted z = 0.2 < 0.5 triggers the flip
    p, seg = advance_setpoint(100.0, SetpointSegment(5, 1.0), ScriptedSampler([0.2]))
    assert p == 99.0
    assert seg.rate == -1.0


def test_boundary_without_flip_clamps():
    # scripted z = 0.9 >= 0.5 keeps the rate; the move clamps at the bound
    p, seg = advance_setpoint(100.0, SetpointSegment(5, 1.0), ScriptedSampler([0.9]))
    assert p == 100.0
    assert seg.rate == 1.0


def test_lower_boundary_flip():
    p, seg = advance_setpoint(0.0, SetpointSegment(3, -0.75), ScriptedSampler([0.0]))
    assert p == 0.75
    assert seg.rate == 0.75


def test_flip_checks_pre_update_setpoint_only():
    # p = 99.9 is not at a bound: no draw consumed even though p + rate > 100
    p, seg = advance_setpoint(99.9, SetpointSegment(5, 1.0), ScriptedSampler([]))
    assert p == 100.0
    assert seg.rate == 1.0


def test_segment_traces_arithmetic_progression():
    sampler = Sampler(RandomStream(5))
    p = 40.0
    seg = SetpointSegment(10, 0.25)
    values = [p]
    for _ in range(9):
        p, seg = advance_setpoint(p, seg, sampler)
        values.append(p)
    diffs = [b - a for a, b in zip(values, values[1:])]
    assert all(math.isclose(d, 0.25, rel_tol=1e-12) for d in diffs)


def test_exhausted_segment_resamples():
    sampler = Sampler(RandomStream(6))
    p, seg = advance_setpoint(50.0, SetpointSegment(1, 0.5), sampler)
    assert p == 50.5
    assert 1 <= seg.steps_remaining <= 100  # freshly sampled


def test_setpoint_stays_in_bounds_long_run():
    sampler = Sampler(RandomStream(7))
    p = 50.0
    seg = sample_segment(sampler)
    for _ in range(50_000):
        p, seg = advance_setpoint(p, seg, sampler)
        assert 0.0 <= p <= 100.0
