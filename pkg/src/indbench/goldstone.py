"""Linearly biased Goldstone ("Mexican hat") potential for the shift penalty.

The penalty is  m = -A*w^2 + B*w^4 + K*rho_s*w,  where w is a radius derived
from the effective shift and rho_s is the sine of the rotation angle.  The
coefficients are derived from closed forms (never hard-coded decimals) and
normalize the landscape so its global minimum is exactly -1: the minimizing
radius given full bias (|rho_s| = 1) is ZETA, and LAMBDA is the potential
depth there before normalization.

Radius construction: ``minimum_radius`` (r_min) is the biased potential's
minimizing radius, the real root of the cubic  w^3 - w + K*|rho_s|/(4B) = 0
picked via the trigonometric or hyperbolic-style branch; ``optimum_radius``
(r_opt) is where the landscape *rewards* sitting: |rho_s| floored at twice
the safe-zone half-width.  Inside |r_opt| the effective shift maps linearly
onto the radius; outside, it is stretched so that w reaches 2 when the shift
reaches its physical bound.
"""

from __future__ import annotations

import math

EPSILON = (1.0 + math.sqrt(2.0)) ** (1.0 / 3.0) / math.sqrt(3.0)   # ~0.77452
ZETA = EPSILON + 1.0 / (3.0 * EPSILON)                             # ~1.20489
LAMBDA = 2.0 * ZETA ** 2 - ZETA ** 4 + 8.0 * math.sqrt(2.0 / 27.0) * ZETA  # ~3.41935
ALPHA = 2.0 / LAMBDA                                               # ~0.58491
BETA = 1.0 / LAMBDA                                                # ~0.29245
KAPPA = -8.0 * math.sqrt(2.0 / 27.0) / LAMBDA                      # ~-0.63677

# Half-width of the safe band of effective shift in which the rotation index
# relaxes back to zero.
SAFE_ZONE = math.sin(math.pi * 15.0 / 180.0) / 2.0                 # ~0.12941


def _sign_one(x: float) -> float:
    # sign(0) := +1 keeps omega total; at rho_s == 0 the bias term vanishes,
    # so the choice cannot change the penalty.
    return 1.0 if x >= 0.0 else -1.0


def _cbrt(x: float) -> float:
    return math.copysign(abs(x) ** (1.0 / 3.0), x)


def minimum_radius(rho_s: float) -> float:
    """Minimizing radius r_min of the biased potential for a given sine rho_s."""
    varrho = _sign_one(rho_s)
    q = KAPPA * abs(rho_s) / (8.0 * BETA)
    if q < -math.sqrt(1.0 / 27.0):
        # Radicand guarded against float drift at the branch boundary.
        u = _cbrt(-varrho * q + math.sqrt(max(q * q - 1.0 / 27.0, 0.0)))
        return u + 1.0 / (3.0 * u)
    arg = max(-1.0, min(1.0, -q * math.sqrt(27.0)))
    return varrho * math.sqrt(4.0 / 3.0) * math.cos(math.acos(arg) / 3.0)


def optimum_radius(rho_s: float) -> float:
    """Rewarded radius r_opt: |rho_s| floored at the safe-band width 2z."""
    return _sign_one(rho_s) * max(abs(rho_s), 2.0 * SAFE_ZONE)


def omega(rho_s: float, effective_shift: float) -> float:
    """Map the effective shift onto the potential's radius coordinate."""
    r_min = abs(minimum_radius(rho_s))
    r_opt = abs(optimum_radius(rho_s))
    if abs(effective_shift) <= r_opt:
        return effective_shift * r_min / r_opt
    exponent = (2.0 - r_opt) / (2.0 - r_min)
    stretched = r_min + (2.0 - r_min) / (2.0 - r_opt) ** exponent \
        * (abs(effective_shift) - r_opt) ** exponent
    return math.copysign(stretched, effective_shift)


def penalty(rho_s: float, effective_shift: float) -> float:
    """Biased Goldstone penalty; global minimum -1, maximum ~1.23 on the domain."""
    w = omega(rho_s, effective_shift)
    return -ALPHA * w * w + BETA * w ** 4 + KAPPA * rho_s * w
