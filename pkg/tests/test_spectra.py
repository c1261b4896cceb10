import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy import special

from homspec.errors import DomainError, SingularLimit
from homspec.geometry import omega_d
from homspec.specialfns import integrate
from homspec.spectra import (
    Term,
    TermSum,
    apply_hyperbolic_operator,
    circle_counting,
    circle_kth_eigenvalue,
    complex_hyperbolic_local_counting,
    evaluate_termsum,
    euclidean_local_counting,
    euclidean_spectral,
    gauss_termsum,
    limit_at_zero,
    real_hyperbolic_even_local_counting,
    real_hyperbolic_even_spectral,
    real_hyperbolic_local_counting,
    real_hyperbolic_odd_spectral,
    s2_closed_form,
    sinc_termsum,
    sphere_counting,
    sphere_kth_eigenvalue,
    sphere_multiplicity,
    sphere_spectrum,
)


def odd_closed_form(d, lam):
    if d == 3:
        x = lam - 1
        return x**1.5 / (6 * math.pi**2)
    if d == 5:
        x = lam - 4
        return (3 * x + 5) * x**1.5 / (180 * math.pi**3)
    x = lam - 9
    return (3 * x * x + 21 * x + 28) * x**1.5 / (2520 * math.pi**4)


# symbolic engine

def test_operator_on_sinc_matches_hand_derivative():
    s = Fraction(3)
    got = apply_hyperbolic_operator(sinc_termsum(s))
    want = TermSum([Term(1, -2, 0, -1, "sin", s), Term(-s, -1, 0, -1, "cos", s)])
    assert got == want


def test_operator_on_gauss_matches_hand_derivative():
    t = Fraction(1, 2)
    got = apply_hyperbolic_operator(gauss_termsum(t))
    assert got == TermSum([Term(1 / (2 * t), 1, 0, -1, "gauss", t)])


def test_operator_zero_times_is_identity():
    f = sinc_termsum(2.0)
    assert apply_hyperbolic_operator(f, 0) == f


def test_termsum_merges_like_terms_and_drops_zeros():
    f = TermSum([Term(1, 0, 0, 0, "sin", 2), Term(2, 0, 0, 0, "sin", 2), Term(-3, 0, 0, 0, "sin", 2)])
    assert len(f) == 0
    assert evaluate_termsum(f, 0.7) == 0.0


def test_termsum_rejects_mixed_kernels():
    with pytest.raises(DomainError):
        TermSum([Term(1, 0, 0, 0, "sin", 2), Term(1, 0, 0, 0, "gauss", 2)])


def test_operator_numerical_derivative():
    f = apply_hyperbolic_operator(sinc_termsum(1.7), 2)
    g = apply_hyperbolic_operator(f)
    r, h = 0.9, 1e-5
    numeric = -(evaluate_termsum(f, r + h) - evaluate_termsum(f, r - h)) / (2 * h) / math.sinh(r)
    assert evaluate_termsum(g, r) == pytest.approx(numeric, rel=1e-8)


_term = st.builds(
    Term,
    st.fractions(min_value=-5, max_value=5, max_denominator=7),
    st.integers(-3, 3),
    st.integers(0, 3),
    st.integers(-3, 3),
    st.sampled_from(["sin", "cos"]),
    st.just(Fraction(5, 2)),
)


@settings(max_examples=100, deadline=None)
@given(st.lists(_term, max_size=5), st.lists(_term, max_size=5), st.integers(0, 3))
def test_operator_is_linear(fs, gs, times):
    f, g = TermSum(fs, "trig", Fraction(5, 2)), TermSum(gs, "trig", Fraction(5, 2))
    lhs = apply_hyperbolic_operator(f + g, times)
    rhs = apply_hyperbolic_operator(f, times) + apply_hyperbolic_operator(g, times)
    assert lhs == rhs


def test_limit_of_sinc():
    assert limit_at_zero(sinc_termsum(2.5)) == pytest.approx(2.5, rel=1e-15)


def test_limit_detects_divergence():
    with pytest.raises(SingularLimit):
        limit_at_zero(TermSum([Term(1, -1, 0, 0, "cos", 1.0)]))


@pytest.mark.parametrize("m", [1, 2, 3])
def test_evaluate_near_zero_continuous_with_limit(m):
    f = apply_hyperbolic_operator(sinc_termsum(2.0), m)
    assert evaluate_termsum(f, 1e-3) == pytest.approx(limit_at_zero(f), rel=1e-4)


def test_evaluate_series_switch_is_seamless():
    f = apply_hyperbolic_operator(sinc_termsum(1.3), 3)
    edge = 0.2 * f.length_scale()
    below, above = evaluate_termsum(f, edge * (1 - 1e-9)), evaluate_termsum(f, edge * (1 + 1e-9))
    assert below == pytest.approx(above, rel=1e-9)


# odd-dimensional real hyperbolic

def test_h3_at_two():
    assert real_hyperbolic_odd_spectral(3, 0.0, 2.0) == pytest.approx(1 / (6 * math.pi**2), rel=1e-12)


@pytest.mark.parametrize("d", [3, 5, 7])
def test_odd_closed_forms_over_wide_range(d):
    b = (d - 1) ** 2 / 4
    for lam in b + np.geomspace(0.1, 1e4, 60):
        assert real_hyperbolic_odd_spectral(d, 0.0, float(lam)) == pytest.approx(
            odd_closed_form(d, float(lam)), rel=1e-9)


def test_h3_off_diagonal_closed_form():
    # one application gives (sin(sr)/r - s cos(sr)) / (r sinh r) times 1/(2 pi^2)
    lam, r = 5.0, 0.8
    s = math.sqrt(lam - 1)
    want = (math.sin(s * r) / r - s * math.cos(s * r)) / (r * math.sinh(r)) / (2 * math.pi**2)
    assert real_hyperbolic_odd_spectral(3, r, lam) == pytest.approx(want, rel=1e-12)


@pytest.mark.parametrize("d", [3, 5, 7])
def test_odd_vanishes_below_bottom(d):
    b = (d - 1) ** 2 / 4
    assert real_hyperbolic_odd_spectral(d, 0.0, b * 0.9) == 0.0
    assert real_hyperbolic_odd_spectral(d, 1.0, b) == 0.0


def test_odd_requires_odd_dimension():
    with pytest.raises(DomainError):
        real_hyperbolic_odd_spectral(4, 0.0, 3.0)


# even-dimensional real hyperbolic

def test_h2_counting_zero_at_bottom():
    assert real_hyperbolic_even_local_counting(2, 0.25) == 0.0


def test_h2_counting_matches_trapezoid_oracle():
    a = np.linspace(0.0, math.sqrt(5 - 0.25), 1_000_001)
    y = a * np.tanh(np.pi * a) / (2 * np.pi)
    trap = (y.sum() - 0.5 * (y[0] + y[-1])) * (a[1] - a[0])
    assert real_hyperbolic_even_local_counting(2, 5.0) == pytest.approx(trap, rel=1e-8)


@pytest.mark.parametrize("d", [4, 6])
def test_even_counting_against_scipy(d):
    from scipy.integrate import quad

    b = (d - 1) ** 2 / 4
    poly = {4: lambda a: (4 * a**3 + a) / (32 * math.pi**2),
            6: lambda a: (16 * a**5 + 40 * a**3 + 9 * a) / (1024 * math.pi**3)}[d]
    ref, _ = quad(lambda a: poly(a) * math.tanh(math.pi * a), 0, math.sqrt(20.0 - b), epsabs=0, epsrel=1e-13)
    assert real_hyperbolic_even_local_counting(d, 20.0) == pytest.approx(ref, rel=1e-10)


def test_h2_counting_weyl_limit():
    lam = 1e6
    assert real_hyperbolic_even_local_counting(2, lam) / (lam / (4 * math.pi)) == pytest.approx(1.0, rel=1e-3)


def test_dispatch_local_counting():
    assert real_hyperbolic_local_counting(3, 2.0) == real_hyperbolic_odd_spectral(3, 0.0, 2.0)
    assert real_hyperbolic_local_counting(2, 5.0) == real_hyperbolic_even_local_counting(2, 5.0)


def _gauss_jacobi_even_oracle(d, r, lam):
    # integrand sinh s (cosh s - cosh r)^(-1/2) g(s) on [r, r+2] via Gauss-Jacobi in u = s - r,
    # using (cosh s - cosh r) = u * h(u) with h smooth; tail by scipy quad
    from scipy.integrate import quad

    b = (d - 1) ** 2 / 4
    g = apply_hyperbolic_operator(sinc_termsum(math.sqrt(lam - b)), d // 2)
    width = 2.0
    x, w = special.roots_jacobi(60, 0.0, -0.5)
    u = (x + 1) * width / 2
    total = 0.0
    for ui, wi in zip(u, w):
        s = r + ui
        h = 2 * math.sinh((s + r) / 2) * math.sinh(ui / 2) / ui
        total += wi * math.sinh(s) / math.sqrt(h) * evaluate_termsum(g, s)
    total *= (width / 2) ** 0.5
    tail, _ = quad(lambda s: math.sinh(s) / math.sqrt(math.cosh(s) - math.cosh(r)) * evaluate_termsum(g, s),
                   r + width, 60, limit=400, epsabs=1e-14)
    return 2 * math.sqrt(2) / (2 * math.pi) ** ((d + 2) / 2) * (total + tail)


def test_h2_off_diagonal_against_gauss_jacobi():
    got = real_hyperbolic_even_spectral(2, 1.0, 2.0)
    assert got == pytest.approx(_gauss_jacobi_even_oracle(2, 1.0, 2.0), rel=1e-6)
    assert got == pytest.approx(0.0986659365014991, rel=1e-9)


@pytest.mark.parametrize("d", [2, 4, 6])
def test_even_spectral_diagonal_consistency(d):
    lam = 5.0 + (d - 1) ** 2 / 4
    assert real_hyperbolic_even_spectral(d, 1e-7, lam) == pytest.approx(
        real_hyperbolic_even_local_counting(d, lam), rel=1e-6)


def test_even_spectral_zero_at_bottom():
    assert real_hyperbolic_even_spectral(2, 0.5, 0.25) == 0.0


# complex hyperbolic

def test_ch2_zero_at_bottom():
    assert complex_hyperbolic_local_counting(2, 4.0) == 0.0


def test_ch2_matches_dense_grid_oracle():
    # series patch on [0, 1e-3] plus Simpson on the rest
    h = 1e-3
    patch = 2 / math.pi * (h**3 / 3 + (math.pi / 2) ** 2 / 3 * h**5 / 5) / (8 * math.pi**2)
    a = np.linspace(h, 2.0, 400_001)
    y = a**3 / np.tanh(np.pi * a / 2) / (8 * np.pi**2)
    step = a[1] - a[0]
    simpson = step / 3 * (y[0] + y[-1] + 4 * y[1:-1:2].sum() + 2 * y[2:-1:2].sum())
    got = complex_hyperbolic_local_counting(2, 8.0)
    assert got == pytest.approx(patch + simpson, rel=1e-8)
    assert got == pytest.approx(0.0521499441774707, rel=1e-12)


@pytest.mark.parametrize("d", [2, 3, 4])
def test_complex_hyperbolic_against_scipy(d):
    from scipy.integrate import quad

    poly = {2: (lambda a: a**3 / (8 * math.pi**2), "coth"),
            3: (lambda a: a * (a * a + 1) ** 2 / (64 * math.pi**3), "tanh"),
            4: (lambda a: a**3 * (a * a + 4) ** 2 / (768 * math.pi**4), "coth")}[d]
    f, kind = poly
    hyp = (lambda a: 1 / math.tanh(math.pi * a / 2)) if kind == "coth" else (lambda a: math.tanh(math.pi * a / 2))
    lam = d * d + 30.0
    ref, _ = quad(lambda a: f(a) * hyp(a) if a > 0 else 0.0, 0, math.sqrt(30.0), epsabs=0, epsrel=1e-13)
    assert complex_hyperbolic_local_counting(d, lam) == pytest.approx(ref, rel=1e-10)


def test_ch3_weyl_limit():
    lam = 1e5
    ratio = complex_hyperbolic_local_counting(3, lam) / (omega_d(6) / (2 * math.pi) ** 6 * lam**3)
    assert ratio == pytest.approx(1.0, rel=1e-3)


@pytest.mark.parametrize("fn,bottom", [
    (lambda lam: real_hyperbolic_even_local_counting(2, lam), 0.25),
    (lambda lam: real_hyperbolic_even_local_counting(6, lam), 6.25),
    (lambda lam: real_hyperbolic_odd_spectral(5, 0.0, lam), 4.0),
    (lambda lam: complex_hyperbolic_local_counting(4, lam), 16.0),
])
def test_counting_functions_monotone_and_zero_below_bottom(fn, bottom):
    assert fn(bottom * 0.5) == 0.0
    vals = [fn(float(x)) for x in np.linspace(bottom, bottom + 200, 500)]
    assert all(b >= a for a, b in zip(vals, vals[1:]))


# spheres

def test_sphere_spectrum_s2():
    pts = sphere_spectrum(2, 9)
    assert [p.cumulative_count for p in pts] == [(k + 1) ** 2 for k in range(10)]
    assert pts[9].cumulative_count == 100


def test_sphere_spectrum_s3_first():
    p = sphere_spectrum(3, 1)[1]
    assert (p.eigenvalue, p.cumulative_count) == (3, 5)
    assert sphere_spectrum(4, 0)[0].cumulative_count == 1


@pytest.mark.parametrize("d", [1, 2, 3, 7])
def test_sphere_spectrum_strictly_increasing(d):
    pts = sphere_spectrum(d, 40)
    assert all(b.eigenvalue > a.eigenvalue and b.cumulative_count > a.cumulative_count
               for a, b in zip(pts, pts[1:]))


@pytest.mark.parametrize("d", [2, 3, 5])
def test_multiplicity_matches_harmonic_dimension(d):
    # dim H_k = C(k+d, d) - C(k+d-2, d)
    for k in range(2, 20):
        assert sphere_multiplicity(d, k) == math.comb(k + d, d) - math.comb(k + d - 2, d)


def test_sphere_counting_examples():
    assert sphere_counting(2, 6) == 9
    assert sphere_counting(2, 5.99) == 4
    assert sphere_counting(2, 0) == 1


def test_s2_closed_form_at_eigenvalues():
    assert s2_closed_form(2) == 4
    for k in range(30):
        lam = k * (k + 1)
        assert s2_closed_form(lam) == pytest.approx(sphere_counting(2, lam), abs=1e-9)
    with pytest.raises(DomainError):
        s2_closed_form(3.0)


def test_kth_eigenvalues():
    assert [sphere_kth_eigenvalue(2, k) for k in range(10)] == [0, 2, 2, 2, 6, 6, 6, 6, 6, 12]
    assert [circle_kth_eigenvalue(k) for k in range(3)] == pytest.approx([0, 4 * math.pi**2, 4 * math.pi**2])


def test_circle_counting_examples():
    assert circle_counting(0) == 1
    assert circle_counting((2 * math.pi) ** 2) == 3
    assert circle_counting(39) == 1


# Euclidean

def test_euclidean_counting_example():
    assert euclidean_local_counting(2, 4 * math.pi**2) == pytest.approx(math.pi)


@settings(max_examples=100, deadline=None)
@given(st.floats(1e-3, 20.0), st.floats(0.1, 400.0))
def test_euclidean_one_dimensional_kernel(r, lam):
    assert euclidean_spectral(1, r, lam) == pytest.approx(math.sin(r * math.sqrt(lam)) / (math.pi * r), abs=1e-10)


@pytest.mark.parametrize("d", [1, 2, 3, 4])
def test_euclidean_diagonal_continuity(d):
    lam = 7.0
    assert euclidean_spectral(d, 1e-6, lam) == pytest.approx(euclidean_local_counting(d, lam), rel=1e-6)
    assert euclidean_spectral(d, 0.0, lam) == euclidean_local_counting(d, lam)
