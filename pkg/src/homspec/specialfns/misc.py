"""Exact binomials and bisection inversion of monotone functions."""

import math

from ..errors import BracketError, DomainError

__all__ = ["binomial", "invert_monotone", "golden_section"]


def binomial(n, k):
    """Exact binomial coefficient; zero when ``k > n``."""
    if n < 0 or k < 0:
        raise DomainError(f"binomial needs nonnegative arguments, got ({n}, {k})")
    return math.comb(int(n), int(k))


def invert_monotone(f, target, lo, hi, tol=1e-12):
    """Solve ``f(r) = target`` for strictly increasing ``f`` on ``[lo, hi]``.

    Bisection down to an interval of width ``tol``; the midpoint of the
    final bracket is returned. Boundary targets return the boundary exactly.
    """
    f_lo = f(lo)
    f_hi = f(hi)
    if target < f_lo or target > f_hi:
        raise BracketError(
            f"target {target!r} outside [f(lo), f(hi)] = [{f_lo!r}, {f_hi!r}]"
        )
    if target == f_lo:
        return lo
    if target == f_hi:
        return hi
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        if f(mid) < target:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


_INVPHI = (math.sqrt(5.0) - 1.0) / 2.0


def golden_section(f, lo, hi, tol=1e-6, maximize=False):
    """Golden-section search for the extremum of a unimodal ``f`` on ``(lo, hi)``.

    Returns ``(x, f(x))``. Evaluations happen strictly inside the interval.
    """
    sign = -1.0 if maximize else 1.0
    a, b = lo, hi
    c = b - _INVPHI * (b - a)
    d = a + _INVPHI * (b - a)
    fc = sign * f(c)
    fd = sign * f(d)
    while b - a > tol:
        if fc < fd:
            b, d, fd = d, c, fc
            c = b - _INVPHI * (b - a)
            fc = sign * f(c)
        else:
            a, c, fc = c, d, fd
            d = a + _INVPHI * (b - a)
            fd = sign * f(d)
    x = c if fc < fd else d
    return x, sign * min(fc, fd)
