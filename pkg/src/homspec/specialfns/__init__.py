"""Numerical kernel: quadrature, gamma and Bessel functions, power series."""

from .bessel import bessel_j
from .gammafns import gamma, upper_incomplete_gamma
from .misc import binomial, golden_section, invert_monotone
from .powerseries import PowerSeries
from .quadrature import (
    DEFAULT_CONFIG,
    QuadratureConfig,
    integrate,
    integrate_semiinfinite_expdecay,
)

__all__ = [
    "DEFAULT_CONFIG",
    "PowerSeries",
    "QuadratureConfig",
    "bessel_j",
    "binomial",
    "gamma",
    "golden_section",
    "integrate",
    "integrate_semiinfinite_expdecay",
    "invert_monotone",
    "upper_incomplete_gamma",
]
