"""Explicit bounds on counting functions, spectral functions and heat kernels of homogeneous spaces."""

from . import bounds, geometry, heat, specialfns, spectra
from .bounds import (
    BoundResult,
    CompactSpaceData,
    compact_data,
    counting_bound_alpha,
    counting_bound_integral,
    eigenvalue_lower_bound,
    li_bound,
    li_improved_bound,
    local_counting_bound,
    optimal_alpha_bound,
    optimal_eigenvalue_lower_bound,
    polynomial_counting_bound,
    sphere_gap_bound,
)
from .curves import CurveTable, read_csv, to_svg
from .errors import (
    BracketError,
    DomainError,
    HomspecError,
    InvariantViolation,
    NonConvergence,
    SingularLimit,
)
from .geometry import ModelSpace, VolumeProfile, ball_volume, m_d, omega_d, volume_profile
from .heat import (
    ExpGrowthHypothesis,
    PolyGrowthHypothesis,
    heat_bound_compact_gap,
    heat_bound_exponential,
    heat_bound_polynomial,
    heat_from_spectral,
    hyperbolic_heat_kernel_odd,
    sphere_heat_diagonal,
    spectral_from_heat,
)
from .spaces import NamedSpace, parse_space
from .specialfns import QuadratureConfig

__version__ = "0.1.0"
