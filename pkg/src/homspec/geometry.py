"""Model spaces and their ball-volume profiles.

The bounds only ever see a space through its volume profile ``r -> V(r)``,
the volume of a geodesic ball of radius ``r``. Normalisations: the round
sphere has curvature +1, real hyperbolic space curvature -1, complex
hyperbolic space is scaled so that its spectrum starts at ``d**2`` (complex
dimension ``d``), and the circle is ``R/Z`` with circumference 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable

from .errors import DomainError
from .specialfns import QuadratureConfig, integrate

__all__ = [
    "FAMILIES",
    "ModelSpace",
    "VolumeProfile",
    "ball_volume",
    "constant_curvature_volume",
    "m_d",
    "omega_d",
    "sphere_area",
    "volume_profile",
]

FAMILIES = ("circle", "euclidean", "sphere", "real_hyperbolic", "complex_hyperbolic")

# relative-only tolerance: ball volumes at tiny radii are themselves tiny
_VOLUME_CFG = QuadratureConfig(abs_tol=1e-300, rel_tol=1e-14)


def omega_d(d):
    """Volume of the unit ball in ``R^d``."""
    if d < 1:
        raise DomainError(f"omega_d needs d >= 1, got {d}")
    return math.exp(0.5 * d * math.log(math.pi) - math.lgamma(0.5 * d + 1.0))


def sphere_area(n):
    """Volume of the unit sphere ``S^n`` in ``R^(n+1)``."""
    return (n + 1) * omega_d(n + 1)


def m_d(d, cfg=None):
    """``int_0^{pi/2} theta**d sin(2 theta) d theta`` for real ``d >= 0``."""
    if d < 0:
        raise DomainError(f"m_d needs d >= 0, got {d}")
    return integrate(lambda t: t**d * math.sin(2.0 * t), 0.0, 0.5 * math.pi, cfg or _VOLUME_CFG)


@dataclass(frozen=True)
class ModelSpace:
    """One of the model geometries.

    ``dim`` is the real dimension for every family except
    ``complex_hyperbolic``, where it is the complex dimension; use
    :attr:`real_dim` when the manifold dimension is needed.
    """

    family: str
    dim: int
    curvature_scale: float = field(init=False)

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise DomainError(f"unknown family {self.family!r}")
        if self.family == "circle" and self.dim != 1:
            raise DomainError("the circle has dimension 1")
        if self.family == "complex_hyperbolic" and self.dim < 2:
            raise DomainError("complex hyperbolic space needs complex dimension >= 2")
        if self.dim < 1:
            raise DomainError("dimension must be positive")
        scale = {"circle": 0.0, "euclidean": 0.0, "sphere": 1.0,
                 "real_hyperbolic": -1.0, "complex_hyperbolic": -1.0}[self.family]
        object.__setattr__(self, "curvature_scale", scale)

    @classmethod
    def circle(cls):
        return cls("circle", 1)

    @classmethod
    def euclidean(cls, d):
        return cls("euclidean", d)

    @classmethod
    def sphere(cls, d):
        return cls("sphere", d)

    @classmethod
    def real_hyperbolic(cls, d):
        return cls("real_hyperbolic", d)

    @classmethod
    def complex_hyperbolic(cls, d):
        return cls("complex_hyperbolic", d)

    @property
    def real_dim(self):
        return 2 * self.dim if self.family == "complex_hyperbolic" else self.dim

    @property
    def is_compact(self):
        return self.family in ("circle", "sphere")

    @property
    def total_volume(self):
        if self.family == "circle":
            return 1.0
        if self.family == "sphere":
            return sphere_area(self.dim)
        return math.inf

    @property
    def diameter(self):
        if self.family == "circle":
            return 0.5
        if self.family == "sphere":
            return math.pi
        return math.inf

    @property
    def spectrum_bottom(self):
        if self.family == "real_hyperbolic":
            return (self.dim - 1) ** 2 / 4.0
        if self.family == "complex_hyperbolic":
            return float(self.dim**2)
        return 0.0


def _sin_power_integral(n, r):
    if n == 0:
        return r
    return integrate(lambda x: math.sin(x) ** n, 0.0, r, _VOLUME_CFG)


def _sinh_power_integral(n, r):
    if n == 0:
        return r
    if n == 1:
        return 2.0 * math.sinh(0.5 * r) ** 2
    return integrate(lambda x: math.sinh(x) ** n, 0.0, r, _VOLUME_CFG)


def ball_volume(space, r):
    """Volume of a geodesic ball of radius ``r`` in ``space``.

    Sphere radii beyond ``pi`` are clamped (the ball is then the whole
    sphere); the circle saturates at total length 1.
    """
    if not r >= 0:
        raise DomainError(f"radius must be nonnegative, got {r}")
    d = space.dim
    fam = space.family
    if fam == "euclidean":
        return omega_d(d) * r**d
    if fam == "circle":
        return min(2.0 * r, 1.0)
    if fam == "sphere":
        if r >= math.pi:
            return sphere_area(d)
        if r > 0.5 * math.pi:
            # complement of the antipodal cap keeps V strictly increasing up to pi
            return sphere_area(d) - sphere_area(d - 1) * _sin_power_integral(d - 1, math.pi - r)
        return sphere_area(d - 1) * _sin_power_integral(d - 1, r)
    if fam == "real_hyperbolic":
        return sphere_area(d - 1) * _sinh_power_integral(d - 1, r)
    # density sinh^{2d-1}(x) cosh(x) integrates in closed form
    return sphere_area(2 * d - 1) * math.sinh(r) ** (2 * d) / (2 * d)


def constant_curvature_volume(kappa, d, r):
    """Ball volume in the simply connected ``d``-dimensional space form of curvature ``kappa``."""
    if not r >= 0:
        raise DomainError(f"radius must be nonnegative, got {r}")
    if kappa == 0:
        return omega_d(d) * r**d
    root = math.sqrt(abs(kappa))
    scale = root ** (-(d - 1)) / root
    if kappa > 0:
        if r > math.pi / root * (1 + 1e-15):
            raise DomainError(f"radius {r} exceeds pi/sqrt(kappa) = {math.pi / root}")
        return scale * sphere_area(d - 1) * _sin_power_integral(d - 1, min(r * root, math.pi))
    return scale * sphere_area(d - 1) * _sinh_power_integral(d - 1, r * root)


@dataclass(frozen=True)
class VolumeProfile:
    """Ball volume as a function of radius, plus the data needed to use it.

    ``evaluate`` must be increasing on ``(0, valid_radius)``; beyond it the
    profile is constant at ``total_volume`` for compact spaces.
    """

    evaluate: Callable[[float], float]
    dimension: int
    valid_radius: float = math.inf
    total_volume: float = math.inf
    diameter: float = math.inf
    name: str = ""

    def __call__(self, r):
        return self.evaluate(r)


def volume_profile(space):
    """The :class:`VolumeProfile` of a :class:`ModelSpace`."""
    return VolumeProfile(
        evaluate=lambda r: ball_volume(space, r),
        dimension=space.real_dim,
        valid_radius=space.diameter,
        total_volume=space.total_volume,
        diameter=space.diameter,
        name=f"{space.family}({space.dim})",
    )
