"""Bessel functions of the first kind for integer and half-odd orders."""

import math

from ..errors import DomainError

__all__ = ["bessel_j"]

_SERIES_RADIUS = 2.0


def _order_kind(order):
    twice = 2.0 * order
    n = round(twice)
    if order < 0 or abs(twice - n) > 1e-12:
        raise DomainError(f"bessel_j supports nonnegative integer or half-integer orders, got {order}")
    return n


def _series(nu, z):
    half = 0.5 * z
    term = math.exp(nu * math.log(half) - math.lgamma(nu + 1.0)) if z > 0 else 0.0
    total = term
    q = -half * half
    k = 0
    while abs(term) > 1e-17 * abs(total) or k < 2:
        k += 1
        term *= q / (k * (k + nu))
        total += term
        if term == 0.0:
            break
    return total


def _integer_order(n, z):
    # Miller's backward recurrence normalised by J0 + 2 sum J_2k = 1
    start = 2 * ((max(n, int(z)) + 30 + int(math.sqrt(40.0 * max(n, z)))) // 2)
    j_next = 0.0
    j_cur = 1e-300
    norm = 0.0
    result = 0.0
    for k in range(start, 0, -1):
        j_prev = (2.0 * k / z) * j_cur - j_next
        j_next, j_cur = j_cur, j_prev
        if abs(j_cur) > 1e250:
            j_next *= 1e-250
            j_cur *= 1e-250
            result *= 1e-250
            norm *= 1e-250
        if k - 1 == n:
            result = j_cur
        if (k - 1) % 2 == 0 and k - 1 > 0:
            norm += 2.0 * j_cur
    norm += j_cur
    if n == 0:
        result = j_cur
    return result / norm


def _half_odd_order(n, z):
    # J_{n+1/2}(z) = sqrt(2z/pi) j_n(z) with j_n the spherical Bessel function
    j0 = math.sin(z) / z
    if n == 0:
        return math.sqrt(2.0 * z / math.pi) * j0
    j1 = math.sin(z) / (z * z) - math.cos(z) / z
    if z >= n:
        prev, cur = j0, j1
        for k in range(1, n):
            prev, cur = cur, (2 * k + 1) / z * cur - prev
        return math.sqrt(2.0 * z / math.pi) * cur
    # downward recurrence, normalised against whichever of j0, j1 is larger
    start = n + 30 + int(math.sqrt(40.0 * n))
    nxt, cur = 0.0, 1e-300
    vals = {}
    for k in range(start, 0, -1):
        prev = (2 * k + 1) / z * cur - nxt
        nxt, cur = cur, prev
        if abs(cur) > 1e250:
            nxt *= 1e-250
            cur *= 1e-250
            vals = {key: v * 1e-250 for key, v in vals.items()}
        if k - 1 <= n:
            vals[k - 1] = cur
        if k == 1:
            vals[1] = nxt
    scale = j0 / vals[0] if abs(j0) >= abs(j1) else j1 / vals[1]
    return math.sqrt(2.0 * z / math.pi) * vals[n] * scale


def bessel_j(order, z):
    """Bessel function of the first kind ``J_order(z)`` for real ``z >= 0``.

    ``order`` must be a nonnegative integer or half-odd integer (the orders
    ``d/2`` that occur for Euclidean spectral functions). Small arguments use
    the power series, half-odd orders the trigonometric closed forms with
    recurrence, and integer orders Miller's backward recurrence.
    """
    twice = _order_kind(order)
    if not z >= 0:
        raise DomainError(f"bessel_j requires z >= 0, got {z}")
    nu = 0.5 * twice
    if z == 0:
        return 1.0 if twice == 0 else 0.0
    if z <= _SERIES_RADIUS:
        return _series(nu, z)
    if twice % 2 == 1:
        return _half_odd_order(twice // 2, z)
    return _integer_order(twice // 2, z)
