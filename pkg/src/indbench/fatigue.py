"""Fatigue sub-dynamics: spike noise, self-amplifying latents, amplified wear.

Basic fatigue falls with velocity and gain while operational cost rises with
them — the two reward components pull the steerings in opposite directions.
The observable fatigue is basic fatigue scaled by an amplification in (0,1)
that is normally the maximum of two spiky noise channels, but bifurcates into
a high, low-noise regime once either latent variable reaches 1.2.  Latents
decay at 0.9 per step with a noise kick, grow by 1.1 once past the threshold
(capped at 5), and snap to the effective value when the effective value is
nearly zero.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .rng import Sampler

LATENT_CAP = 5.0
BIFURCATION_THRESHOLD = 1.2
SPIKE_MEAN = 0.05


def logistic(x: float) -> float:
    return 1.0 / (1.0 + math.exp(-x))


def basic_fatigue(velocity: float, gain: float) -> float:
    """max(0, 30000/(5v+100) - 0.01 g^2); in [0, 300] on the steering domain."""
    return max(0.0, 30000.0 / (5.0 * velocity + 100.0) - 0.01 * gain * gain)


def velocity_transform(velocity: float, gain: float, setpoint: float) -> float:
    return (gain + setpoint + 2.0) / (velocity - setpoint + 101.0)


def gain_transform(gain: float, setpoint: float) -> float:
    return 1.0 / (gain + setpoint + 1.0)


def effective_velocity(velocity: float, gain: float, setpoint: float) -> float:
    """Transform normalized so (v=0,g=100) maps to 0 and (v=100,g=0) to 1."""
    lo = velocity_transform(0.0, 100.0, setpoint)
    hi = velocity_transform(100.0, 0.0, setpoint)
    return (velocity_transform(velocity, gain, setpoint) - lo) / (hi - lo)


def effective_gain(gain: float, setpoint: float) -> float:
    """Transform normalized so g=100 maps to 0 and g=0 to 1."""
    lo = gain_transform(100.0, setpoint)
    hi = gain_transform(0.0, setpoint)
    return (gain_transform(gain, setpoint) - lo) / (hi - lo)


@dataclass(frozen=True)
class FatigueNoise:
    """The six raw draws plus the two composed channels of one step."""

    eta_ve: float
    eta_ge: float
    eta_vb: float
    eta_gb: float
    eta_vu: float
    eta_gu: float
    eta_velocity: float
    eta_gain: float


def sample_noise(v_eff: float, g_eff: float, sampler: Sampler) -> FatigueNoise:
    """Draw the six noise components in the canonical order and compose them.

    Order (fixed for replay): eta_ve, eta_ge, eta_vb, eta_gb, eta_vu, eta_gu.
    Bernoulli parameters are clamped to [0,1] against float drift.
    """
    eta_ve = logistic(sampler.exponential(SPIKE_MEAN))
    eta_ge = logistic(sampler.exponential(SPIKE_MEAN))
    eta_vb = sampler.bernoulli(max(0.0, min(1.0, v_eff)))
    eta_gb = sampler.bernoulli(max(0.0, min(1.0, g_eff)))
    eta_vu = sampler.uniform01()
    eta_gu = sampler.uniform01()
    eta_velocity = eta_ve + (1.0 - eta_ve) * eta_vu * eta_vb * v_eff
    eta_gain = eta_ge + (1.0 - eta_ge) * eta_gu * eta_gb * g_eff
    return FatigueNoise(eta_ve, eta_ge, eta_vb, eta_gb, eta_vu, eta_gu,
                        eta_velocity, eta_gain)


def update_latent(mu_prev: float, effective: float, eta: float) -> float:
    """Advance one fatigue latent given its effective value and composed noise."""
    if effective <= SPIKE_MEAN:
        return effective
    if mu_prev >= BIFURCATION_THRESHOLD:
        return min(LATENT_CAP, 1.1 * mu_prev)
    return 0.9 * mu_prev + eta / 3.0


def amplification(mu_v: float, mu_g: float, eta_v: float, eta_g: float,
                  sampler: Sampler) -> float:
    """Fatigue amplification in (0, 1).

    Bifurcates once either latent reaches 1.2 (draws one Gaussian, i.e. two
    uniforms); otherwise it is the larger composed noise channel.  The
    threshold is implemented as >= since the growth case overshoots exact
    equality almost surely.
    """
    if max(mu_v, mu_g) >= BIFURCATION_THRESHOLD:
        return logistic(sampler.gauss(2.4, 0.4))
    return max(eta_v, eta_g)


def fatigue(basic: float, amp: float) -> float:
    """f = basic * (1 + 2*amp) / 3; always within [basic/3, basic]."""
    return basic * (1.0 + 2.0 * amp) / 3.0
