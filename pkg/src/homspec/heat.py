"""Heat-kernel upper bounds, exact hyperbolic heat kernels, and the Laplace bridge.

The heat kernel diagonal is the Laplace transform of the local counting
function, ``p_t(x, x) = 1/vol M + t int_0^inf exp(-lambda t) N_x(lambda) d lambda``,
which is how volume-growth bounds on ``N_x`` become heat-kernel bounds.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .bounds import BoundResult
from .errors import DomainError, InvariantViolation
from .geometry import m_d, sphere_area
from .specialfns import (
    QuadratureConfig,
    gamma,
    integrate_semiinfinite_expdecay,
    upper_incomplete_gamma,
)
from .spectra.hyperbolic import real_hyperbolic_bottom
from .spectra.model import sphere_eigenvalue, sphere_multiplicity
from .spectra.terms import apply_hyperbolic_operator, evaluate_termsum, gauss_termsum, limit_at_zero

__all__ = [
    "ExpGrowthHypothesis",
    "PolyGrowthHypothesis",
    "heat_bound_compact_gap",
    "heat_bound_exponential",
    "heat_bound_polynomial",
    "heat_from_spectral",
    "hyperbolic_heat_kernel_odd",
    "sphere_heat_diagonal",
    "spectral_from_heat",
    "verify_exp_hypothesis",
    "verify_poly_hypothesis",
]


@dataclass(frozen=True)
class PolyGrowthHypothesis:
    """``V(r) >= c r**beta`` for ``0 < r < D``."""

    c: float
    beta: float
    D: float = math.inf
    total_volume: float = math.inf

    def __post_init__(self):
        if not (self.c > 0 and self.beta > 0):
            raise DomainError("c and beta must be positive")


@dataclass(frozen=True)
class ExpGrowthHypothesis:
    """``V(r) >= c0 r**d`` for ``r <= r0`` and ``V(r) >= c1 exp(c2 r)`` for ``r > r0``.

    ``lambda_star`` is an optional spectral gap: ``N_x(lambda) = 0`` below it.
    """

    c0: float
    c1: float
    c2: float
    d: int
    r0: float
    lambda_star: float | None = None

    def __post_init__(self):
        if not all(v > 0 for v in (self.c0, self.c1, self.c2, self.r0)):
            raise DomainError("c0, c1, c2 and r0 must be positive")
        if self.lambda_star is not None and self.lambda_star < 0:
            raise DomainError("lambda_star must be nonnegative")

    @property
    def c3(self):
        return (math.pi * self.c2 / 4.0) ** (2.0 / 3.0)


def _check_t(t):
    if not t > 0:
        raise DomainError(f"t must be positive, got {t}")


def _inv(volume):
    return 0.0 if math.isinf(volume) else 1.0 / volume


def heat_bound_polynomial(h, t, cfg=None):
    """``1/vol M + Gamma(beta/2 + 1) 2^(beta/2) / (c m_beta) * t^(-beta/2)``."""
    _check_t(t)
    mb = m_d(h.beta, cfg)
    half = 0.5 * h.beta
    value = _inv(h.total_volume) + gamma(half + 1.0) * 2.0**half / (h.c * mb) * t ** (-half)
    return BoundResult(value, 0.0, {"c": h.c, "beta": h.beta, "m_beta": mb})


def heat_bound_exponential(h, t):
    """Heat bounds under exponential volume growth.

    Returns ``(first, second)``; ``second`` is ``None`` unless the hypothesis
    carries a spectral gap ``lambda_star``.
    """
    _check_t(t)
    d = h.d
    cutoff = math.pi**2 * t / (16.0 * h.r0**2)
    poly = 2.0 / h.c0 * (4.0 / math.pi) ** d * t ** (-0.5 * d)
    first = ((math.pi * h.c2 + 2.0) / h.c1 * math.exp(-h.c3 * t ** (1.0 / 3.0))
             + poly * upper_incomplete_gamma(1.0 + 0.5 * d, cutoff))
    params = {"c0": h.c0, "c1": h.c1, "c2": h.c2, "c3": h.c3, "d": d, "r0": h.r0}
    second = None
    if h.lambda_star is not None:
        ls = h.lambda_star
        value = (2.0 / h.c1 * math.exp(-ls * t)
                 + poly * upper_incomplete_gamma(1.0 + 0.5 * d, max(ls, cutoff)))
        second = BoundResult(value, 0.0, {**params, "lambda_star": ls})
    return BoundResult(first, 0.0, params), second


def heat_bound_compact_gap(vol_M, c, beta, lambda_star, t, cfg=None):
    """``1/vol M + 2^(beta/2) / (c m_beta) * t^(-beta/2) * Gamma(beta/2 + 1, lambda_star t)``."""
    _check_t(t)
    if not (vol_M > 0 and c > 0 and beta > 0 and lambda_star >= 0):
        raise DomainError("vol_M, c, beta must be positive and lambda_star nonnegative")
    half = 0.5 * beta
    mb = m_d(beta, cfg)
    value = (_inv(vol_M) + 2.0**half / (c * mb) * t ** (-half)
             * upper_incomplete_gamma(half + 1.0, lambda_star * t))
    return BoundResult(value, 0.0, {"c": c, "beta": beta, "lambda_star": lambda_star, "m_beta": mb})


def hyperbolic_heat_kernel_odd(d, r, t):
    """Heat kernel of ``H^d`` for odd ``d >= 3`` at distance ``r`` and time ``t``.

    ``sqrt(pi) / (2 pi)^((d+1)/2) * exp(-b_d t) / sqrt(t) * (-(1/sinh r) d/dr)^((d-1)/2) exp(-r^2 / 4t)``.
    """
    if d < 3 or d % 2 == 0:
        raise DomainError(f"odd dimension >= 3 required, got {d}")
    if not r >= 0:
        raise DomainError(f"r must be nonnegative, got {r}")
    _check_t(t)
    f = apply_hyperbolic_operator(gauss_termsum(t), (d - 1) // 2)
    value = limit_at_zero(f) if r == 0 else evaluate_termsum(f, r)
    b = real_hyperbolic_bottom(d)
    return (math.sqrt(math.pi) / (2.0 * math.pi) ** ((d + 1) / 2)
            * math.exp(-b * t) / math.sqrt(t) * value)


def sphere_heat_diagonal(d, t, rel_tol=1e-16):
    """``p_t(x, x)`` on the unit sphere ``S^d`` from its eigenvalues and multiplicities."""
    _check_t(t)
    total = 0.0
    k = 0
    while True:
        term = sphere_multiplicity(d, k) * math.exp(-sphere_eigenvalue(d, k) * t)
        total += term
        # terms decrease once k (k + d - 1) t dominates the polynomial growth
        if k > 2 and term < rel_tol * total and sphere_eigenvalue(d, k) * t > d:
            break
        k += 1
    return total / sphere_area(d)


def heat_from_spectral(N, vol_M, t, cfg=None):
    """``1/vol M + t int_0^inf exp(-lambda t) N(lambda) d lambda``.

    ``N`` is the local counting function; on a compact space pass it with
    the constant mode removed (``N_x(lambda) - 1/vol M``), since the
    ``1/vol M`` term already accounts for it.
    """
    _check_t(t)
    cfg = cfg or QuadratureConfig(abs_tol=1e-300, rel_tol=1e-10)
    integral = integrate_semiinfinite_expdecay(lambda lam: math.exp(-lam * t) * N(lam), 0.0, t, cfg)
    return _inv(vol_M) + t * integral


def spectral_from_heat(p_diag, lam):
    """Upper bound ``e * p_{1/lambda}(x, x)`` on ``N_x(lambda)``."""
    if not lam > 0:
        raise DomainError(f"lambda must be positive, got {lam}")
    return math.e * p_diag(1.0 / lam)


def verify_poly_hypothesis(profile, c, beta, D, samples=4000):
    """Check ``V(r) >= c r**beta`` on a grid over ``(0, D]``.

    Returns the smallest observed ratio ``V(r) / r**beta``; raises
    :class:`InvariantViolation` if the candidate ``c`` exceeds it.
    """
    upper = D if math.isfinite(D) else 50.0
    grid = np.linspace(upper / samples, upper, samples)
    ratio = min(profile(float(r)) / float(r) ** beta for r in grid)
    if c > ratio * (1.0 + 1e-12):
        raise InvariantViolation(f"V(r) >= {c} r^{beta} fails; grid minimum ratio is {ratio}")
    return ratio


def verify_exp_hypothesis(profile, h, r_max=30.0, samples=4000):
    """Check both volume-growth inequalities of an :class:`ExpGrowthHypothesis` on grids."""
    small = np.linspace(h.r0 / samples, h.r0, samples)
    worst_small = min(profile(float(r)) / float(r) ** h.d for r in small)
    large = np.linspace(h.r0, max(r_max, 2 * h.r0), samples)
    worst_large = min(profile(float(r)) * math.exp(-h.c2 * float(r)) for r in large)
    if h.c0 > worst_small * (1.0 + 1e-12):
        raise InvariantViolation(f"V(r) >= c0 r^d fails for r <= r0 (min ratio {worst_small})")
    if h.c1 > worst_large * (1.0 + 1e-12):
        raise InvariantViolation(f"V(r) >= c1 exp(c2 r) fails for r > r0 (min ratio {worst_large})")
    return worst_small, worst_large
