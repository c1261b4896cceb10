"""Gamma and upper incomplete gamma functions."""

import math

from ..errors import DomainError, NonConvergence

__all__ = ["gamma", "upper_incomplete_gamma"]

_EPS = 1e-16
_TINY = 1e-300
_MAX_ITER = 10_000


def gamma(a):
    """Euler's gamma function for ``a > 0``."""
    if not a > 0:
        raise DomainError(f"gamma requires a > 0, got {a}")
    return math.gamma(a)


def _lower_series(a, x):
    # gamma(a, x) = e^{-x} x^a sum_n x^n / (a (a+1) ... (a+n))
    term = 1.0 / a
    total = term
    ap = a
    for _ in range(_MAX_ITER):
        ap += 1.0
        term *= x / ap
        total += term
        if abs(term) < abs(total) * _EPS:
            return total * math.exp(-x + a * math.log(x))
    raise NonConvergence("lower incomplete gamma series", estimate=total)


def _upper_fraction(a, x):
    # modified Lentz evaluation of the Legendre continued fraction
    b = x + 1.0 - a
    c = 1.0 / _TINY
    d = 1.0 / b
    h = d
    for i in range(1, _MAX_ITER):
        an = -i * (i - a)
        b += 2.0
        d = an * d + b
        if abs(d) < _TINY:
            d = _TINY
        c = b + an / c
        if abs(c) < _TINY:
            c = _TINY
        d = 1.0 / d
        delta = d * c
        h *= delta
        if abs(delta - 1.0) < _EPS:
            return math.exp(-x + a * math.log(x)) * h
    raise NonConvergence("upper incomplete gamma continued fraction", estimate=h)


def upper_incomplete_gamma(a, x):
    """Upper incomplete gamma ``Gamma(a, x) = int_x^inf s^(a-1) e^(-s) ds``.

    Uses the continued fraction for ``x > a + 1`` and the complement of the
    lower series otherwise.
    """
    if not a > 0:
        raise DomainError(f"upper_incomplete_gamma requires a > 0, got {a}")
    if not x >= 0:
        raise DomainError(f"upper_incomplete_gamma requires x >= 0, got {x}")
    if x == 0:
        return math.gamma(a)
    if math.isinf(x):
        return 0.0
    if x > a + 1.0:
        return _upper_fraction(a, x)
    return max(math.gamma(a) - _lower_series(a, x), 0.0)
