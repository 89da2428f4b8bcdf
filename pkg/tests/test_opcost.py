import math
import random

import pytest

from indbench.opcost import (CONVOLUTION_WEIGHTS, convolved_cost,
                             initial_history, operational_cost, push_cost)


def test_cost_at_origin_is_one():
    assert operational_cost(0.0, 0.0, 0.0) == 1.0


def test_cost_at_midpoint():
    assert operational_cost(50.0, 50.0, 50.0) == math.exp(4.25)
    assert operational_cost(50.0, 50.0, 50.0) == pytest.approx(70.105, abs=1e-3)


def test_cost_at_maximum():
    assert operational_cost(100.0, 100.0, 100.0) == math.exp(8.5)
    assert operational_cost(100.0, 100.0, 100.0) == pytest.approx(4914.77, abs=1e-2)


def test_cost_monotone_in_each_argument():
    for base in (0.0, 25.0, 70.0):
        assert operational_cost(base + 1, base, base) > operational_cost(base, base, base)
        assert operational_cost(base, base + 1, base) > operational_cost(base, base, base)
        assert operational_cost(base, base, base + 1) > operational_cost(base, base, base)


def test_kernel_weights():
    assert CONVOLUTION_WEIGHTS[:4] == (0.0, 0.0, 0.0, 0.0)
    assert CONVOLUTION_WEIGHTS[4:] == (1 / 9, 2 / 9, 3 / 9, 2 / 9, 1 / 9)
    assert math.fsum(CONVOLUTION_WEIGHTS) == pytest.approx(1.0, abs=1e-15)


def test_constant_history_convolves_to_itself():
    assert convolved_cost(initial_history(1.0)) == 1.0
    assert convolved_cost(initial_history(70.105)) == pytest.approx(70.105, rel=1e-15)


def test_impulse_response_at_lag_seven():
    history = [0.0] * 9
    history[6] = 9.0  # lag 7 carries weight 3/9
    assert convolved_cost(tuple(history)) == 3.0


def test_recent_lags_carry_zero_weight():
    history = (1000.0, 0.0, 0.0, 0.0, 1.0, 1.0, 1.0, 1.0, 1.0)
    assert convolved_cost(history) == 1.0


def test_step_change_first_visible_at_lag_five():
    history = initial_history(0.0)
    seen = []
    for _ in range(10):
        history = push_cost(history, 1.0)
        seen.append(convolved_cost(history))
    assert seen[:4] == [0.0] * 4          # four silent steps
    assert seen[4] > 0.0                  # lag-5 delay
    assert seen[8] == 1.0                 # fully absorbed by lag 9
    assert seen[9] == 1.0


def test_push_shifts_and_drops_oldest():
    history = tuple(float(i) for i in range(1, 10))
    assert push_cost(history, 7.0) == (7.0, 1.0, 2.0, 3.0, 4.0, 5.0, 6.0, 7.0, 8.0)


def test_push_preserves_length():
    history = initial_history(2.0)
    for _ in range(20):
        history = push_cost(history, 5.0)
        assert len(history) == 9
    assert history == (5.0,) * 9  # nine or more pushes of k leave all entries k


def test_convolution_is_linear_in_history():
    rng = random.Random(99)
    for _ in range(50):
        a = tuple(rng.uniform(0, 100) for _ in range(9))
        b = tuple(rng.uniform(0, 100) for _ in range(9))
        combined = tuple(x + y for x, y in zip(a, b))
        assert convolved_cost(combined) == pytest.approx(
            convolved_cost(a) + convolved_cost(b), rel=1e-12)
