"""Named test-bed spaces tying geometry, exact spectra and bounds together.

Names: ``circle``, ``sN`` (round sphere ``S^N``), ``hN`` (real hyperbolic
``H^N``), ``chN`` (complex hyperbolic, complex dimension ``N``) and
``euclidean-N``.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from typing import Callable, Optional

from .bounds import compact_data, counting_bound_integral, local_counting_bound
from .errors import DomainError
from .geometry import ModelSpace, omega_d, volume_profile
from .heat import (
    ExpGrowthHypothesis,
    PolyGrowthHypothesis,
    hyperbolic_heat_kernel_odd,
    sphere_heat_diagonal,
)
from .spectra import (
    circle_counting,
    circle_kth_eigenvalue,
    complex_hyperbolic_local_counting,
    euclidean_local_counting,
    real_hyperbolic_even_local_counting,
    real_hyperbolic_odd_spectral,
    sphere_counting,
    sphere_kth_eigenvalue,
)

__all__ = ["NamedSpace", "parse_space"]

_PATTERN = re.compile(r"^(circle|s(\d+)|h(\d+)|ch(\d+)|euclidean-(\d+))$")


@dataclass(frozen=True)
class NamedSpace:
    """A model space with its exact counting function (if known) and bound.

    For compact spaces ``exact`` and ``bound`` refer to the global counting
    function ``N(lambda)``; otherwise to the local one ``N_x(lambda)``.
    """

    name: str
    space: ModelSpace
    exact: Optional[Callable[[float], float]]

    @property
    def profile(self):
        return volume_profile(self.space)

    @property
    def compact(self):
        return self.space.is_compact

    @property
    def spectrum_bottom(self):
        return self.space.spectrum_bottom

    def bound(self, lam, cfg=None):
        if self.compact:
            return counting_bound_integral(compact_data(self.profile), lam, cfg)
        return local_counting_bound(self.profile, lam, cfg=cfg)

    def kth_eigenvalue(self, k):
        """``lambda_k`` for the compact spaces with known spectrum, else ``None``."""
        if self.space.family == "circle":
            return circle_kth_eigenvalue(k)
        if self.space.family == "sphere":
            return float(sphere_kth_eigenvalue(self.space.dim, k))
        return None

    def heat_diagonal(self, t):
        """Exact ``p_t(x, x)`` where available (odd ``H^d`` and spheres), else ``None``."""
        fam, d = self.space.family, self.space.dim
        if fam == "real_hyperbolic" and d % 2 == 1 and d >= 3:
            return hyperbolic_heat_kernel_odd(d, 0.0, t)
        if fam == "sphere":
            return sphere_heat_diagonal(d, t)
        return None

    def poly_hypothesis(self):
        """A valid ``V(r) >= c r^beta`` hypothesis derived from the geometry.

        ``H^d`` and ``R^d``: ``c = omega_d`` for all ``r`` (``sinh x >= x``).
        ``S^d``: ``V(r)/r^d`` decreases on ``(0, pi]``, so ``c = vol S^d / pi^d``
        with ``D = pi``. Complex hyperbolic space: ``sinh^{2d}(r) >= r^{2d}``
        gives ``c = omega_{2d}``.
        """
        fam, n = self.space.family, self.space.real_dim
        vol = self.space.total_volume
        if fam == "sphere":
            return PolyGrowthHypothesis(vol / math.pi**n, n, math.pi, vol)
        if fam == "circle":
            return PolyGrowthHypothesis(2.0, 1.0, 0.5, 1.0)
        return PolyGrowthHypothesis(omega_d(n), n)

    def exp_hypothesis(self):
        """Exponential-growth hypothesis for ``H^d`` with ``r0 = 1``, ``c2 = d - 1``.

        ``V(r) exp(-(d-1) r)`` is nondecreasing, so ``c1 = V(1) e^{-(d-1)}``.
        ``lambda_star`` is the spectrum bottom.
        """
        if self.space.family != "real_hyperbolic" or self.space.dim < 2:
            return None
        d = self.space.dim
        c1 = self.profile(1.0) * math.exp(-(d - 1))
        return ExpGrowthHypothesis(omega_d(d), c1, float(d - 1), d, 1.0, self.space.spectrum_bottom)


def parse_space(name):
    """Resolve a space name into a :class:`NamedSpace`."""
    m = _PATTERN.match(name.strip().lower())
    if not m:
        raise DomainError(f"unknown space {name!r}")
    key = m.group(0)
    if key == "circle":
        return NamedSpace(key, ModelSpace.circle(), circle_counting)
    if m.group(2):
        d = int(m.group(2))
        if d < 1:
            raise DomainError("sphere dimension must be at least 1")
        return NamedSpace(key, ModelSpace.sphere(d), lambda lam: sphere_counting(d, lam))
    if m.group(3):
        d = int(m.group(3))
        if d < 2:
            raise DomainError("hyperbolic dimension must be at least 2")
        if d % 2:
            exact = lambda lam: real_hyperbolic_odd_spectral(d, 0.0, lam)  # noqa: E731
        elif d in (2, 4, 6):
            exact = lambda lam: real_hyperbolic_even_local_counting(d, lam)  # noqa: E731
        else:
            exact = None
        return NamedSpace(key, ModelSpace.real_hyperbolic(d), exact)
    if m.group(4):
        d = int(m.group(4))
        exact = (lambda lam: complex_hyperbolic_local_counting(d, lam)) if d in (2, 3, 4) else None
        return NamedSpace(key, ModelSpace.complex_hyperbolic(d), exact)
    d = int(m.group(5))
    if d < 1:
        raise DomainError("Euclidean dimension must be at least 1")
    return NamedSpace(key, ModelSpace.euclidean(d), lambda lam: euclidean_local_counting(d, lam))
