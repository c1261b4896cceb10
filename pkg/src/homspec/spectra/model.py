"""Exact spectra of the compact model spaces and Euclidean spectral functions."""

from __future__ import annotations

import math
from dataclasses import dataclass

from ..errors import DomainError
from ..geometry import omega_d
from ..specialfns import bessel_j, binomial

__all__ = [
    "SpectrumPoint",
    "circle_counting",
    "circle_kth_eigenvalue",
    "euclidean_local_counting",
    "euclidean_spectral",
    "s2_closed_form",
    "sphere_counting",
    "sphere_eigenvalue",
    "sphere_kth_eigenvalue",
    "sphere_multiplicity",
    "sphere_spectrum",
]


@dataclass(frozen=True)
class SpectrumPoint:
    k: int
    eigenvalue: int
    cumulative_count: int


def sphere_eigenvalue(d, k):
    """The ``k``-th distinct eigenvalue ``k (k + d - 1)`` of the unit sphere ``S^d``."""
    return k * (k + d - 1)


def _sphere_cumulative(d, k):
    return binomial(k + d - 1, d) + binomial(k + d, d)


def sphere_multiplicity(d, k):
    """Dimension of the degree-``k`` spherical harmonics on ``S^d``."""
    if k == 0:
        return 1
    return _sphere_cumulative(d, k) - _sphere_cumulative(d, k - 1)


def sphere_spectrum(d, k_max):
    """Distinct eigenvalues of ``S^d`` with exact cumulative counts, ``k = 0..k_max``."""
    if d < 1:
        raise DomainError("sphere dimension must be at least 1")
    return [SpectrumPoint(k, sphere_eigenvalue(d, k), _sphere_cumulative(d, k))
            for k in range(k_max + 1)]


def _largest_k(d, lam):
    # largest k with k (k + d - 1) <= lam
    k = int((-(d - 1) + math.sqrt((d - 1) ** 2 + 4.0 * lam)) / 2.0)
    while k > 0 and sphere_eigenvalue(d, k) > lam:
        k -= 1
    while sphere_eigenvalue(d, k + 1) <= lam:
        k += 1
    return k


def sphere_counting(d, lam):
    """Number of eigenvalues of ``S^d`` that are ``<= lam``, with multiplicity."""
    if not lam >= 0:
        raise DomainError(f"lambda must be nonnegative, got {lam}")
    return _sphere_cumulative(d, _largest_k(d, lam))


def s2_closed_form(lam, tol=1e-9):
    """``lam + (1 + sqrt(1 + 4 lam)) / 2``, equal to ``N(lam)`` on ``S^2`` at eigenvalues only."""
    if not lam >= 0:
        raise DomainError(f"lambda must be nonnegative, got {lam}")
    k = round((-1.0 + math.sqrt(1.0 + 4.0 * lam)) / 2.0)
    if abs(k * (k + 1) - lam) > tol:
        raise DomainError(f"{lam} is not an eigenvalue k(k+1) of S^2")
    return lam + 0.5 * (1.0 + math.sqrt(1.0 + 4.0 * lam))


def circle_counting(lam):
    """Counting function ``2 floor(sqrt(lam) / (2 pi)) + 1`` of ``R/Z``."""
    if not lam >= 0:
        raise DomainError(f"lambda must be nonnegative, got {lam}")
    return 2 * math.floor(math.sqrt(lam) / (2.0 * math.pi)) + 1


def euclidean_local_counting(d, lam):
    """``omega_d / (2 pi)^d * lam^(d/2)``."""
    if not lam >= 0:
        raise DomainError(f"lambda must be nonnegative, got {lam}")
    return omega_d(d) / (2.0 * math.pi) ** d * lam ** (0.5 * d)


def euclidean_spectral(d, r, lam):
    """Spectral function ``(2 pi r / sqrt(lam))^(-d/2) J_{d/2}(r sqrt(lam))`` of ``R^d``."""
    if not r >= 0:
        raise DomainError(f"r must be nonnegative, got {r}")
    if not lam > 0:
        raise DomainError(f"lambda must be positive, got {lam}")
    if r == 0:
        return euclidean_local_counting(d, lam)
    root = math.sqrt(lam)
    return (2.0 * math.pi * r / root) ** (-0.5 * d) * bessel_j(0.5 * d, r * root)


def sphere_kth_eigenvalue(d, k):
    """``lambda_k`` of ``S^d`` in the list ``0 = lambda_0 < lambda_1 <= ...`` repeated by multiplicity."""
    if k < 0:
        raise DomainError("k must be nonnegative")
    j = 0
    while _sphere_cumulative(d, j) < k + 1:
        j += 1
    return sphere_eigenvalue(d, j)


def circle_kth_eigenvalue(k):
    """``lambda_k`` of ``R/Z``: ``(2 pi n)^2`` with multiplicity 2 for ``n >= 1``."""
    if k < 0:
        raise DomainError("k must be nonnegative")
    return (2.0 * math.pi * ((k + 1) // 2)) ** 2
