"""Numeric recovery of directional pushforwards from Euler-Fourier data.

For a cone-constructible function the complex transform values along a ray of
directions determine the 1-D pushforward through a truncated inverse Fourier
integral with one-sided evaluation; outside the two polar cones the
pushforward vanishes identically, which is checked exactly.
"""

from dataclasses import dataclass

import numpy as np

from .cfnd import is_cone_constructible, pushforward_linear
from .errors import NotConeConstructible, ZeroDirection
from .geometry import as_vector, polar_contains


@dataclass(frozen=True)
class RecoveryParams:
    """Quadrature controls: truncation A, step ds, one-sided offset delta."""

    A: float = 500.0
    ds: float = 0.01
    delta: float = 1e-3

    def __post_init__(self):
        if not (0 < self.ds < self.A and self.delta > 0):
            raise ValueError("need 0 < ds < A and delta > 0")


def _interval_pieces(cf):
    """Bounded interval pieces (lo, hi, value) of a compact CF1D."""
    b = cf.breakpoints
    if not b:
        return []
    return [
        (lo, hi, v)
        for lo, hi, v in zip(b, b[1:], cf.interval_values[1:-1])
        if v
    ]


def recover_pushforward(phi, cone, xi, t, params=RecoveryParams()):
    """Approximate (xi_* phi)(t) from the transform with kernel exp(-is t).

    The direction must be nonzero; phi must be cone-constructible.  If xi
    lies outside both polar cones the pushforward is exactly zero and 0.0 is
    returned without quadrature.  Otherwise the classical Fourier transform
    of the pushforward is integrated over |s| in [ds, A] by the trapezoid
    rule (the origin is excluded symmetrically) with the evaluation point
    shifted by +delta inside the polar cone of the reversed cone and by
    -delta inside the polar cone of the cone itself, matching the one-sided
    continuity of the pushforward on either side.
    """
    xi = as_vector(xi)
    if not np.any(xi):
        raise ZeroDirection("need a nonzero direction")
    if not is_cone_constructible(phi, cone):
        raise NotConeConstructible("input is not cone-constructible")

    in_up = polar_contains(cone.antipodal(), xi)
    in_down = polar_contains(cone, xi)
    if not in_up and not in_down:
        return 0.0

    t_probe = t + params.delta if in_up else t - params.delta
    pushed = pushforward_linear(phi, xi)
    pieces = _interval_pieces(pushed)
    if not pieces:
        return 0.0

    count = int(round(params.A / params.ds))
    s = np.arange(1, count + 1) * params.ds
    transform = np.zeros_like(s, dtype=complex)
    for lo, hi, v in pieces:
        transform += v * (1j / s) * (np.exp(-1j * s * hi) - np.exp(-1j * s * lo))
    integrand = np.exp(1j * s * t_probe) * transform
    # the function is real, so the s < 0 half is the conjugate reflection
    return float(np.trapezoid(integrand.real, s) / np.pi)


def radon_support_check(phi, cone, xi):
    """For xi outside both polar cones the pushforward must vanish exactly.

    Inside either polar cone the statement is vacuous and True is returned.
    """
    xi = as_vector(xi)
    if not np.any(xi):
        raise ZeroDirection("need a nonzero direction")
    if not is_cone_constructible(phi, cone):
        raise NotConeConstructible("input is not cone-constructible")
    if polar_contains(cone, xi) or polar_contains(cone.antipodal(), xi):
        return True
    return pushforward_linear(phi, xi).is_zero()


def chi_vanishing_check(phi, cone):
    """Compactly supported cone-constructible functions integrate to zero."""
    if not is_cone_constructible(phi, cone):
        raise NotConeConstructible("input is not cone-constructible")
    from .cfnd import euler_integral_nd

    return euler_integral_nd(phi) == 0
