"""Exact spectral and counting functions of the model spaces."""

from .hyperbolic import (
    complex_hyperbolic_local_counting,
    real_hyperbolic_bottom,
    real_hyperbolic_even_local_counting,
    real_hyperbolic_even_spectral,
    real_hyperbolic_local_counting,
    real_hyperbolic_odd_spectral,
)
from .model import (
    SpectrumPoint,
    circle_counting,
    circle_kth_eigenvalue,
    euclidean_local_counting,
    euclidean_spectral,
    s2_closed_form,
    sphere_counting,
    sphere_eigenvalue,
    sphere_kth_eigenvalue,
    sphere_multiplicity,
    sphere_spectrum,
)
from .terms import (
    Term,
    TermSum,
    apply_hyperbolic_operator,
    evaluate_termsum,
    gauss_termsum,
    laurent_coefficients,
    limit_at_zero,
    sinc_termsum,
)

__all__ = [
    "SpectrumPoint",
    "Term",
    "TermSum",
    "apply_hyperbolic_operator",
    "circle_counting",
    "circle_kth_eigenvalue",
    "complex_hyperbolic_local_counting",
    "euclidean_local_counting",
    "euclidean_spectral",
    "evaluate_termsum",
    "gauss_termsum",
    "laurent_coefficients",
    "limit_at_zero",
    "real_hyperbolic_bottom",
    "real_hyperbolic_even_local_counting",
    "real_hyperbolic_even_spectral",
    "real_hyperbolic_local_counting",
    "real_hyperbolic_odd_spectral",
    "s2_closed_form",
    "sinc_termsum",
    "sphere_counting",
    "sphere_eigenvalue",
    "sphere_kth_eigenvalue",
    "sphere_multiplicity",
    "sphere_spectrum",
]
