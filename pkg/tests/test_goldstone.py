import math

import numpy as np
import pytest

from indbench import goldstone
from indbench.goldstone import (ALPHA, BETA, EPSILON, KAPPA, LAMBDA, SAFE_ZONE,
                                ZETA, minimum_radius, omega, optimum_radius,
                                penalty)


def closed_form_constants():
    """Independent transcription of the defining equations."""
    eps = (1.0 + math.sqrt(2.0)) ** (1.0 / 3.0) / math.sqrt(3.0)
    zeta = eps + 1.0 / (3.0 * eps)
    lam = 2.0 * zeta ** 2 - zeta ** 4 + 8.0 * math.sqrt(2.0 / 27.0) * zeta
    return eps, zeta, lam, 2.0 / lam, 1.0 / lam, -8.0 * math.sqrt(2.0 / 27.0) / lam


def test_constants_match_closed_forms():
    eps, zeta, lam, alpha, beta, kappa = closed_form_constants()
    assert EPSILON == pytest.approx(eps, rel=1e-15)
    assert ZETA == pytest.approx(zeta, rel=1e-15)
    assert LAMBDA == pytest.approx(lam, rel=1e-15)
    assert ALPHA == pytest.approx(alpha, rel=1e-15)
    assert BETA == pytest.approx(beta, rel=1e-15)
    assert KAPPA == pytest.approx(kappa, rel=1e-15)


def test_constants_internal_identities():
    assert ALPHA == pytest.approx(2.0 * BETA, rel=1e-15)
    # at full bias the potential's depth normalizes to exactly -1 at w = ZETA
    depth = -ALPHA * ZETA ** 2 + BETA * ZETA ** 4 + KAPPA * ZETA
    assert depth == pytest.approx(-1.0, rel=1e-12)


def test_safe_zone_value():
    assert SAFE_ZONE == math.sin(math.pi * 15.0 / 180.0) / 2.0
    assert SAFE_ZONE == pytest.approx(0.1294, abs=1e-4)


def test_minimum_radius_at_zero_bias_is_one():
    # cos branch: sqrt(4/3) * cos(acos(0)/3) = sqrt(4/3) * cos(pi/6) = 1
    assert minimum_radius(0.0) == pytest.approx(1.0, rel=1e-12)


def test_minimum_radius_at_full_bias_is_zeta():
    assert minimum_radius(1.0) == pytest.approx(ZETA, rel=1e-12)
    assert minimum_radius(-1.0) == pytest.approx(-ZETA, rel=1e-12)


def test_radius_branches_agree_at_crossover():
    # branch switch at |rho_s| = 1/sqrt(2)
    edge = 1.0 / math.sqrt(2.0)
    below = minimum_radius(edge - 1e-9)
    above = minimum_radius(edge + 1e-9)
    assert below == pytest.approx(above, abs=1e-6)
    assert minimum_radius(edge) == pytest.approx(2.0 / math.sqrt(3.0), rel=1e-9)


def test_optimum_radius_floors_at_twice_safe_zone():
    assert optimum_radius(0.0) == 2.0 * SAFE_ZONE
    assert optimum_radius(0.1) == 2.0 * SAFE_ZONE
    assert optimum_radius(0.9) == 0.9
    assert optimum_radius(-0.9) == -0.9


def test_omega_zero_at_origin():
    assert omega(0.0, 0.0) == 0.0


def test_omega_linear_inside_optimum_radius():
    for rho_s in (0.0, 0.3, -0.7, 1.0):
        r_opt = abs(optimum_radius(rho_s))
        r_min = abs(minimum_radius(rho_s))
        for frac in (-0.9, -0.4, 0.25, 0.8):
            h_e = frac * r_opt
            assert omega(rho_s, h_e) == pytest.approx(h_e * r_min / r_opt, rel=1e-12)


def test_omega_continuous_at_branch_seam():
    for rho_s in np.linspace(-1.0, 1.0, 41):
        r_opt = abs(optimum_radius(float(rho_s)))
        inner = omega(float(rho_s), r_opt - 1e-12)
        outer = omega(float(rho_s), r_opt + 1e-12)
        assert inner == pytest.approx(outer, abs=1e-9)
        expected = math.copysign(abs(minimum_radius(float(rho_s))), 1.0)
        assert outer == pytest.approx(expected, abs=1e-9)


def test_penalty_zero_at_origin():
    assert penalty(0.0, 0.0) == 0.0


def test_penalty_minimum_is_minus_one_at_full_bias():
    # at rho_s = 1 the rewarded shift h_e = 1 maps onto w = ZETA
    assert penalty(1.0, 1.0) == pytest.approx(-1.0, rel=1e-12)
    assert penalty(-1.0, -1.0) == pytest.approx(-1.0, rel=1e-12)


def test_penalty_symmetry():
    for rho_s in np.linspace(-1.0, 1.0, 21):
        for h_e in np.linspace(-1.5, 1.5, 31):
            assert penalty(float(rho_s), float(h_e)) == pytest.approx(
                penalty(float(-rho_s), float(-h_e)), rel=1e-12, abs=1e-12)


def test_landscape_extrema_match_reported_values():
    # direction index grid x effective-shift grid, step 0.01
    values = []
    for direction in range(-6, 7):
        rho_s = math.sin(math.pi * direction / 12.0)
        for k in range(301):
            values.append(penalty(rho_s, -1.5 + 0.01 * k))
    assert min(values) == pytest.approx(-1.00, abs=0.02)
    assert max(values) == pytest.approx(1.23, abs=0.02)
