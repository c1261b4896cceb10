"""Spectral functions of real and complex hyperbolic spaces.

Normalisations: ``H^d`` has curvature -1 and spectrum ``[(d-1)^2/4, inf)``;
complex hyperbolic space of complex dimension ``d`` has spectrum
``[d^2, inf)``. The local counting function ``N_x(lambda)`` is the diagonal
``e_lambda(x, x)`` of the spectral function.
"""

from __future__ import annotations

import math

import numpy as np

from ..errors import DomainError
from ..specialfns import integrate, integrate_semiinfinite_expdecay
from .terms import apply_hyperbolic_operator, evaluate_termsum, limit_at_zero, sinc_termsum

__all__ = [
    "complex_hyperbolic_local_counting",
    "real_hyperbolic_bottom",
    "real_hyperbolic_even_local_counting",
    "real_hyperbolic_even_spectral",
    "real_hyperbolic_local_counting",
    "real_hyperbolic_odd_spectral",
]

# width of the near-diagonal window handled by the cosh s = cosh r + v^2 substitution
_NEAR_WIDTH = 1.0
_COTH_PATCH = 1e-3
# x coth x = sum_n _XCOTH[n] x^(2n)
_XCOTH = (1.0, 1.0 / 3.0, -1.0 / 45.0, 2.0 / 945.0, -1.0 / 4725.0, 2.0 / 93555.0)


def real_hyperbolic_bottom(d):
    return (d - 1) ** 2 / 4.0


def _odd_prefactor(d):
    return 2.0 / (2.0 * math.pi) ** ((d + 1) / 2)


def real_hyperbolic_odd_spectral(d, r, lam):
    """Spectral function ``e_lambda(r)`` of ``H^d`` for odd ``d >= 3``.

    ``2 / (2 pi)^((d+1)/2) * (-(1/sinh r) d/dr)^((d-1)/2) [sin(r sqrt(lambda - b_d)) / r]``,
    and zero below the spectrum bottom ``b_d``. At ``r = 0`` the limit is
    taken exactly through the series expansion.
    """
    if d < 3 or d % 2 == 0:
        raise DomainError(f"odd dimension >= 3 required, got {d}")
    if not r >= 0:
        raise DomainError(f"r must be nonnegative, got {r}")
    b = real_hyperbolic_bottom(d)
    if lam <= b:
        return 0.0
    f = apply_hyperbolic_operator(sinc_termsum(math.sqrt(lam - b)), (d - 1) // 2)
    value = limit_at_zero(f) if r == 0 else evaluate_termsum(f, r)
    return _odd_prefactor(d) * value


def _even_integrand(d):
    pi = math.pi
    if d == 2:
        return lambda a: a * np.tanh(pi * a) / (2.0 * pi)
    if d == 4:
        return lambda a: (4.0 * a**3 + a) * np.tanh(pi * a) / (32.0 * pi**2)
    if d == 6:
        return lambda a: (16.0 * a**5 + 40.0 * a**3 + 9.0 * a) * np.tanh(pi * a) / (1024.0 * pi**3)
    raise DomainError(f"even-dimensional counting is available for d in (2, 4, 6), got {d}")


def real_hyperbolic_even_local_counting(d, lam, cfg=None):
    """``N_x(lambda)`` of ``H^d`` for ``d`` in (2, 4, 6), by quadrature over the spectral density."""
    f = _even_integrand(d)
    b = real_hyperbolic_bottom(d)
    if lam <= b:
        return 0.0
    return integrate(f, 0.0, math.sqrt(lam - b), cfg, vectorized=True)


def real_hyperbolic_local_counting(d, lam, cfg=None):
    """``N_x(lambda)`` of ``H^d``: exact series route for odd ``d``, quadrature for even."""
    if d % 2:
        return real_hyperbolic_odd_spectral(d, 0.0, lam)
    return real_hyperbolic_even_local_counting(d, lam, cfg)


def real_hyperbolic_even_spectral(d, r, lam, cfg=None):
    """Off-diagonal spectral function of ``H^d`` for even ``d`` in (2, 4, 6).

    ``2 sqrt 2 / (2 pi)^((d+2)/2) int_r^inf sinh s / sqrt(cosh s - cosh r) g(s) ds``
    with ``g = (-(1/sinh s) d/ds)^(d/2) [sin(s sqrt(lambda - b_d)) / s]``.
    Near ``s = r`` the substitution ``cosh s = cosh r + v^2`` removes the
    inverse square root; beyond that window ``g`` decays like ``exp(-d s / 2)``
    and the integral is truncated on that rate.
    """
    if d not in (2, 4, 6):
        raise DomainError(f"even-dimensional spectral function needs d in (2, 4, 6), got {d}")
    if not r > 0:
        raise DomainError(f"r must be positive, got {r}")
    b = real_hyperbolic_bottom(d)
    if lam <= b:
        return 0.0
    m = d // 2
    g = apply_hyperbolic_operator(sinc_termsum(math.sqrt(lam - b)), m)

    sh_half = math.sinh(0.5 * r)
    split = r + _NEAR_WIDTH
    v_max = math.sqrt(2.0 * math.sinh(0.5 * (split + r)) * math.sinh(0.5 * _NEAR_WIDTH))

    def near(v):
        s = 2.0 * math.asinh(math.sqrt(sh_half * sh_half + 0.5 * v * v))
        return 2.0 * evaluate_termsum(g, s)

    def far(s):
        gap = 2.0 * math.sinh(0.5 * (s + r)) * math.sinh(0.5 * (s - r))
        return math.sinh(s) / math.sqrt(gap) * evaluate_termsum(g, s)

    total = integrate(near, 0.0, v_max, cfg)
    total += integrate_semiinfinite_expdecay(far, split, m - 0.5, cfg)
    return 2.0 * math.sqrt(2.0) / (2.0 * math.pi) ** ((d + 2) / 2) * total


def _complex_integrand(d):
    pi = math.pi
    if d == 2:
        return (lambda a: a**3 / np.tanh(0.5 * pi * a) / (8.0 * pi**2)), (1.0,), 8.0 * pi**2
    if d == 3:
        return (lambda a: a * (a * a + 1.0) ** 2 * np.tanh(0.5 * pi * a) / (64.0 * pi**3)), None, None
    if d == 4:
        # (a^2 + 4)^2 = 16 + 8 a^2 + a^4
        return ((lambda a: a**3 * (a * a + 4.0) ** 2 / np.tanh(0.5 * pi * a) / (768.0 * pi**4)),
                (16.0, 8.0, 1.0), 768.0 * pi**4)
    raise DomainError(f"complex hyperbolic counting is available for d in (2, 3, 4), got {d}")


def _coth_patch(poly, norm, h):
    # int_0^h P(a^2) a^3 coth(pi a / 2) da / norm, with a^3 coth(pi a/2) = (2/pi) a^2 x coth x
    half_pi = 0.5 * math.pi
    total = 0.0
    for n, c in enumerate(_XCOTH):
        cn = c * half_pi ** (2 * n)
        for j, p in enumerate(poly):
            power = 2 * n + 2 * j + 2
            total += cn * p * h ** (power + 1) / (power + 1)
    return 2.0 / math.pi * total / norm


def complex_hyperbolic_local_counting(d, lam, cfg=None):
    """``N_x(lambda)`` of complex hyperbolic space of complex dimension ``d`` in (2, 3, 4).

    The ``coth`` integrands (d = 2, 4) have a removable singularity at 0;
    ``[0, 1e-3]`` is integrated from the series of ``x coth x``.
    """
    f, poly, norm = _complex_integrand(d)
    bottom = float(d * d)
    if lam <= bottom:
        return 0.0
    upper = math.sqrt(lam - bottom)
    if poly is None:
        return integrate(f, 0.0, upper, cfg, vectorized=True)
    h = min(_COTH_PATCH, upper)
    return _coth_patch(poly, norm, h) + integrate(f, h, upper, cfg, vectorized=True)
