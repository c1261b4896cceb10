"""Upper bounds on counting and spectral functions, lower bounds on eigenvalues.

All bounds take the space only through its ball-volume profile. For compact
spaces the counting function ``N(lambda)`` is bounded; for general
homogeneous spaces the diagonal of the spectral function ``N_x(lambda)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import BracketError, DomainError, InvariantViolation
from .geometry import VolumeProfile, m_d
from .specialfns import QuadratureConfig, golden_section, integrate, invert_monotone

__all__ = [
    "BoundResult",
    "CompactSpaceData",
    "compact_data",
    "counting_bound_alpha",
    "counting_bound_integral",
    "eigenvalue_lower_bound",
    "li_bound",
    "li_improved_bound",
    "local_counting_bound",
    "optimal_alpha_bound",
    "optimal_eigenvalue_lower_bound",
    "polynomial_counting_bound",
    "sphere_gap_bound",
]

HALF_PI = 0.5 * math.pi


@dataclass(frozen=True)
class BoundResult:
    """A bound value together with the threshold from which it is asserted."""

    value: float
    valid_from: float = 0.0
    parameters: dict = field(default_factory=dict)

    def __post_init__(self):
        if not self.value > 0:
            raise InvariantViolation(f"bound value must be positive, got {self.value}")
        if not self.valid_from >= 0:
            raise InvariantViolation(f"valid_from must be nonnegative, got {self.valid_from}")

    def is_valid_at(self, x):
        return x >= self.valid_from

    def __float__(self):
        return float(self.value)


@dataclass(frozen=True)
class CompactSpaceData:
    """Volume profile, total volume and diameter of a compact homogeneous space."""

    profile: VolumeProfile
    total_volume: float
    diameter: float

    def __post_init__(self):
        if not (0 < self.total_volume < math.inf):
            raise DomainError("a compact space needs finite positive volume")
        if not self.diameter > 0:
            raise DomainError("diameter must be positive")
        half = self.profile(0.5 * self.diameter)
        # two disjoint balls of radius D/2 fit around a diametral pair
        if 2.0 * half > self.total_volume * (1.0 + 1e-12):
            raise InvariantViolation(
                f"2 V(D/2) = {2.0 * half!r} exceeds vol M = {self.total_volume!r}"
            )


def compact_data(profile):
    """Build :class:`CompactSpaceData` from a compact space's profile."""
    return CompactSpaceData(profile, profile.total_volume, profile.diameter)


def _check_lambda(lam):
    if not lam > 0:
        raise DomainError(f"lambda must be positive, got {lam}")


def _check_alpha(alpha):
    if not 0 < alpha < HALF_PI:
        raise DomainError(f"alpha must lie in (0, pi/2), got {alpha}")


def _weighted_volume(profile, lam, cfg):
    # int_0^{pi/2} V(theta / sqrt(lambda)) sin(2 theta) d theta
    root = math.sqrt(lam)
    return integrate(lambda t: profile(t / root) * math.sin(2.0 * t), 0.0, HALF_PI, cfg)


def counting_bound_integral(data, lam, cfg=None):
    """``vol M / int_0^{pi/2} V(theta/sqrt(lambda)) sin(2 theta) d theta`` bounding ``N(lambda)``."""
    _check_lambda(lam)
    denom = _weighted_volume(data.profile, lam, cfg)
    return BoundResult(data.total_volume / denom, 0.0, {"method": "integral", "lambda": lam})


def counting_bound_alpha(data, lam, alpha):
    """``vol M / (cos^2(alpha) V(alpha/sqrt(lambda)))`` bounding ``N(lambda)``."""
    _check_lambda(lam)
    _check_alpha(alpha)
    denom = math.cos(alpha) ** 2 * data.profile(alpha / math.sqrt(lam))
    value = data.total_volume / denom if denom > 0 else math.inf
    return BoundResult(value, 0.0, {"method": "alpha", "alpha": alpha, "lambda": lam})


def local_counting_bound(profile, lam, alpha=None, cfg=None):
    """Bound on the local counting function ``N_x(lambda)`` of any homogeneous space.

    Without ``alpha`` this is ``1 / int_0^{pi/2} V(theta/sqrt(lambda)) sin(2 theta) d theta``;
    with it, the weaker ``1 / (cos^2(alpha) V(alpha/sqrt(lambda)))``.
    """
    _check_lambda(lam)
    if alpha is None:
        denom = _weighted_volume(profile, lam, cfg)
        return BoundResult(1.0 / denom, 0.0, {"method": "integral", "lambda": lam})
    _check_alpha(alpha)
    denom = math.cos(alpha) ** 2 * profile(alpha / math.sqrt(lam))
    value = 1.0 / denom if denom > 0 else math.inf
    return BoundResult(value, 0.0, {"method": "alpha", "alpha": alpha, "lambda": lam})


def optimal_alpha_bound(bound_at_alpha, tol=1e-6):
    """Minimise ``bound_at_alpha(alpha).value`` over ``alpha`` in ``(0, pi/2)``.

    ``bound_at_alpha`` is e.g. ``lambda a: counting_bound_alpha(data, lam, a)``.
    Returns the :class:`BoundResult` at the golden-section minimiser.
    """
    alpha, _ = golden_section(lambda a: bound_at_alpha(a).value, 0.0, HALF_PI, tol=tol)
    return bound_at_alpha(alpha)


def polynomial_counting_bound(vol_or_unit, c, d, r0, lam, cfg=None):
    """Bound ``vol/(c m_d) lambda^{d/2}`` under the hypothesis ``V(r) >= c r^d`` for ``r <= r0``.

    Pass ``"local"`` as ``vol_or_unit`` for the spectral-function version
    (numerator 1). The result's ``valid_from`` is ``(pi / (2 r0))**2``; the
    value is computed for any ``lambda`` but only asserted from there on.
    """
    if not c > 0:
        raise DomainError(f"c must be positive, got {c}")
    _check_lambda(lam)
    numerator = 1.0 if vol_or_unit == "local" else float(vol_or_unit)
    threshold = (HALF_PI / r0) ** 2 if r0 > 0 else math.inf
    md = m_d(d, cfg)
    return BoundResult(
        numerator / (c * md) * lam ** (0.5 * d),
        threshold,
        {"method": "polynomial", "c": c, "d": d, "r0": r0, "m_d": md},
    )


def eigenvalue_lower_bound(data, k, alpha, tol=1e-13):
    """Lower bound ``alpha / V^{-1}(vol M / ((k+1) cos^2 alpha))`` on ``sqrt(lambda_k)``.

    ``V`` is inverted on ``(0, D]``; a target above ``V(D)`` raises
    :class:`BracketError` since the inverse does not exist there.
    """
    if k < 0:
        raise DomainError("k must be nonnegative")
    _check_alpha(alpha)
    target = data.total_volume / ((k + 1) * math.cos(alpha) ** 2)
    radius = invert_monotone(data.profile, target, 0.0, data.diameter, tol)
    return alpha / radius


def optimal_eigenvalue_lower_bound(data, k, tol=1e-6, grid=64):
    """Best :func:`eigenvalue_lower_bound` over ``alpha``.

    A coarse grid locates the feasible region (large ``alpha`` makes the
    inverse target unreachable), then golden-section refines the maximum.
    Returns ``(alpha, bound)``; ``(None, 0.0)`` when no ``alpha`` is feasible.
    """

    def safe(a):
        try:
            return eigenvalue_lower_bound(data, k, a)
        except BracketError:
            return 0.0

    alphas = [HALF_PI * (i + 0.5) / grid for i in range(grid)]
    values = [safe(a) for a in alphas]
    best = max(range(grid), key=lambda i: values[i])
    if values[best] <= 0.0:
        return None, 0.0
    lo = alphas[best - 1] if best > 0 else 0.0
    hi = alphas[best + 1] if best + 1 < grid else HALF_PI
    alpha, value = golden_section(safe, lo, hi, tol=tol, maximize=True)
    if value < values[best]:
        return alphas[best], values[best]
    return alpha, value


def li_bound(D):
    """Li's lower bound ``pi / (2D)`` on ``sqrt(lambda_1)``."""
    if not D > 0:
        raise DomainError("diameter must be positive")
    return math.pi / (2.0 * D)


def li_improved_bound(data):
    """Improved lower bound on ``sqrt(lambda_1)``.

    ``pi/(2D) + arcsin(V(D/2) / (2 (vol M - V(D/2)))) / D``.
    """
    D = data.diameter
    half = data.profile(0.5 * D)
    rest = data.total_volume - half
    if 2.0 * half > data.total_volume * (1.0 + 1e-12) or rest <= 0:
        raise InvariantViolation("2 V(D/2) must not exceed vol M")
    arg = half / (2.0 * rest)
    if not 0 < arg <= 1.0 + 1e-12:
        raise InvariantViolation(f"arcsin argument {arg} outside (0, 1]")
    return math.pi / (2.0 * D) + math.asin(min(arg, 1.0)) / D


def sphere_gap_bound(D):
    """Lower bound ``pi / D`` on ``sqrt(lambda_1)`` for round spheres (sharp on the circle)."""
    if not D > 0:
        raise DomainError("diameter must be positive")
    return math.pi / D
