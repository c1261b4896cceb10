"""Exact symbolic application of the radial operator ``-(1/sinh r) d/dr``.

Functions are finite sums of terms

    c * r**p * cosh(r)**a * sinh(r)**q * K(r),

with ``K`` one of ``sin(s r)``, ``cos(s r)`` or ``exp(-r**2 / (4 t))``.
This class is closed under ``d/dr`` and under division by ``sinh r``, so
repeated applications of the operator stay inside it. Coefficients may be
floats or exact rationals; with ``Fraction`` inputs every step is exact.

Limits at ``r = 0`` come from truncated Laurent expansions: each term is
``r**(p+q)`` times a unit series, the negative powers of the total are
checked to cancel, and the constant coefficient is the limit.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from ..errors import DomainError, SingularLimit
from ..specialfns import PowerSeries

__all__ = [
    "KERNELS",
    "Term",
    "TermSum",
    "apply_hyperbolic_operator",
    "evaluate_termsum",
    "gauss_termsum",
    "laurent_coefficients",
    "limit_at_zero",
    "sinc_termsum",
]

KERNELS = ("sin", "cos", "gauss")
_FAMILY = {"sin": "trig", "cos": "trig", "gauss": "gauss"}

# relative size below which a negative-power coefficient counts as cancelled
CANCEL_TOL = 1e-7
# extra series terms used when evaluating near r = 0
_EVAL_EXTRA = 30
# series evaluation below this fraction of the kernel length scale
_SWITCH = 0.2


@dataclass(frozen=True)
class Term:
    coeff: object
    r_power: int
    cosh_power: int
    sinh_power: int
    kernel: str
    kernel_param: object

    def __post_init__(self):
        if self.kernel not in KERNELS:
            raise DomainError(f"unknown kernel {self.kernel!r}")
        if self.cosh_power < 0:
            raise DomainError("cosh power must be nonnegative")

    @property
    def key(self):
        return (self.r_power, self.cosh_power, self.sinh_power, self.kernel)

    def with_coeff(self, coeff):
        return Term(coeff, self.r_power, self.cosh_power, self.sinh_power,
                    self.kernel, self.kernel_param)

    def __call__(self, r):
        if self.kernel == "sin":
            k = math.sin(float(self.kernel_param) * r)
        elif self.kernel == "cos":
            k = math.cos(float(self.kernel_param) * r)
        else:
            k = math.exp(-r * r / (4.0 * float(self.kernel_param)))
        return (float(self.coeff) * r**self.r_power * math.cosh(r) ** self.cosh_power
                * math.sinh(r) ** self.sinh_power * k)


class TermSum:
    """A merged sum of :class:`Term` sharing one kernel family and parameter.

    ``applications`` counts how many times the radial operator produced
    this sum; it only sets default expansion orders.
    """

    __slots__ = ("terms", "family", "param", "applications")

    def __init__(self, terms, family=None, param=None, applications=0):
        terms = list(terms)
        if terms:
            family = _FAMILY[terms[0].kernel]
            param = terms[0].kernel_param
        for t in terms:
            if _FAMILY[t.kernel] != family or t.kernel_param != param:
                raise DomainError("all terms must share one kernel family and parameter")
        merged = {}
        for t in terms:
            if t.key in merged:
                merged[t.key] = merged[t.key] + t.coeff
            else:
                merged[t.key] = t.coeff
        self.terms = tuple(
            Term(c, *key[:3], key[3], param)
            for key, c in sorted(merged.items())
            if c != 0
        )
        self.family = family
        self.param = param
        self.applications = applications

    def __iter__(self):
        return iter(self.terms)

    def __len__(self):
        return len(self.terms)

    def __repr__(self):
        return f"TermSum({list(self.terms)!r})"

    def __eq__(self, other):
        if not isinstance(other, TermSum):
            return NotImplemented
        return self.terms == other.terms and (not self.terms or self.param == other.param)

    def __hash__(self):
        return hash(self.terms)

    def __add__(self, other):
        if self.terms and other.terms and (self.family, self.param) != (other.family, other.param):
            raise DomainError("cannot add term sums with different kernels")
        return TermSum(self.terms + other.terms, self.family or other.family,
                       self.param if self.terms else other.param,
                       max(self.applications, other.applications))

    def scaled(self, factor):
        return TermSum([t.with_coeff(t.coeff * factor) for t in self.terms],
                       self.family, self.param, self.applications)

    @property
    def min_exponent(self):
        """Smallest ``r_power + sinh_power`` over the terms (the Laurent valuation bound)."""
        return min((t.r_power + t.sinh_power for t in self.terms), default=0)

    def length_scale(self):
        """Radius below which the kernel is well described by a short series."""
        if self.family == "gauss":
            return min(1.0, 2.0 * math.sqrt(float(self.param)))
        s = abs(float(self.param)) if self.param is not None else 0.0
        return 1.0 if s <= 1.0 else 1.0 / s


def sinc_termsum(s):
    """``sin(s r) / r``."""
    return TermSum([Term(1, -1, 0, 0, "sin", s)])


def gauss_termsum(t):
    """``exp(-r**2 / (4 t))``."""
    return TermSum([Term(1, 0, 0, 0, "gauss", t)])


def _differentiate(term):
    c, p, a, q = term.coeff, term.r_power, term.cosh_power, term.sinh_power
    kern, s = term.kernel, term.kernel_param
    out = []
    if p:
        out.append(Term(c * p, p - 1, a, q, kern, s))
    if a:
        out.append(Term(c * a, p, a - 1, q + 1, kern, s))
    if q:
        out.append(Term(c * q, p, a + 1, q - 1, kern, s))
    if kern == "sin":
        out.append(Term(c * s, p, a, q, "cos", s))
    elif kern == "cos":
        out.append(Term(-c * s, p, a, q, "sin", s))
    else:
        # d/dr exp(-r^2/4t) = -(r / 2t) exp(-r^2/4t)
        out.append(Term(-c / (2 * s), p + 1, a, q, kern, s))
    return out


def apply_hyperbolic_operator(f, times=1):
    """Apply ``-(1/sinh r) d/dr`` to ``f`` exactly, ``times`` times."""
    if times < 0:
        raise DomainError("times must be nonnegative")
    for _ in range(times):
        new = []
        for term in f.terms:
            for dt in _differentiate(term):
                new.append(Term(-dt.coeff, dt.r_power, dt.cosh_power, dt.sinh_power - 1,
                                dt.kernel, dt.kernel_param))
        f = TermSum(new, f.family, f.param, f.applications + 1)
    return f


@lru_cache(maxsize=512)
def _unit_series(cosh_power, sinh_power, order):
    # cosh(r)^a * (sinh(r)/r)^q as an exact rational series
    cosh = PowerSeries([Fraction(1, math.factorial(k)) if k % 2 == 0 else Fraction(0)
                        for k in range(order + 1)], order)
    shc = PowerSeries([Fraction(1, math.factorial(k + 1)) if k % 2 == 0 else Fraction(0)
                       for k in range(order + 1)], order)
    return (cosh**cosh_power) * (shc**sinh_power)


@lru_cache(maxsize=512)
def _unit_series_float(cosh_power, sinh_power, order):
    return tuple(float(c) for c in _unit_series(cosh_power, sinh_power, order))


def _kernel_series(kernel, param, order):
    p = float(param)
    coeffs = [0.0] * (order + 1)
    if kernel == "sin":
        term = p
        for k in range(1, order + 1, 2):
            coeffs[k] = term
            term *= -p * p / ((k + 1) * (k + 2))
    elif kernel == "cos":
        term = 1.0
        for k in range(0, order + 1, 2):
            coeffs[k] = term
            term *= -p * p / ((k + 1) * (k + 2))
    else:
        q = -1.0 / (4.0 * p)
        term = 1.0
        for k in range(0, order + 1, 2):
            coeffs[k] = term
            term *= q / (k // 2 + 1)
    return coeffs


def laurent_coefficients(f, order):
    """Laurent coefficients of ``f`` at ``r = 0``.

    Each term's unit factor and kernel are expanded to degree ``order``
    beyond the term's own leading power. Returns ``(lowest_power, coeffs,
    magnitudes)`` where ``coeffs[i]`` multiplies ``r**(lowest_power + i)``,
    valid for powers up to ``lowest_power + order``, and ``magnitudes[i]``
    is the sum of absolute contributions (the scale for cancellation checks).
    """
    low = f.min_exponent
    size = order + 1
    coeffs = [0.0] * size
    mags = [0.0] * size
    kernel_cache = {}
    for t in f.terms:
        shift = t.r_power + t.sinh_power - low
        n = order - shift
        if n < 0:
            continue
        unit = _unit_series_float(t.cosh_power, t.sinh_power, n)
        if t.kernel not in kernel_cache:
            kernel_cache[t.kernel] = _kernel_series(t.kernel, t.kernel_param, order)
        kern = kernel_cache[t.kernel]
        c = float(t.coeff)
        for i in range(n + 1):
            acc = 0.0
            for j in range(i + 1):
                if kern[j]:
                    acc += unit[i - j] * kern[j]
            v = c * acc
            coeffs[shift + i] += v
            mags[shift + i] += abs(v)
    return low, coeffs, mags


def _regular_coefficients(f, order):
    low, coeffs, mags = laurent_coefficients(f, order)
    for i in range(min(-low, len(coeffs))):
        if abs(coeffs[i]) > CANCEL_TOL * mags[i] and mags[i] > 0:
            raise SingularLimit(
                f"coefficient of r^{low + i} is {coeffs[i]!r}, "
                f"not cancelled relative to term magnitude {mags[i]!r}"
            )
    return coeffs[max(-low, 0):] if low <= 0 else [0.0] * low + coeffs


def limit_at_zero(f, order=None):
    """``lim_{r -> 0} f(r)`` via truncated power series.

    Raises :class:`SingularLimit` if the negative powers do not cancel.
    """
    if not f.terms:
        return 0.0
    low = f.min_exponent
    if order is None:
        order = max(2 * f.applications + 8, -low + 8)
    if low + order < 0:
        raise DomainError(f"order {order} too small to reach r^0 (lowest power {low})")
    return _regular_coefficients(f, order)[0]


def evaluate_termsum(f, r):
    """Evaluate ``f`` at ``r > 0``.

    Near zero the singular terms cancel catastrophically in floating point,
    so below a fraction of the kernel's length scale the regular part of the
    Laurent series is summed instead.
    """
    if not r > 0:
        raise DomainError(f"evaluate_termsum needs r > 0, got {r}")
    if not f.terms:
        return 0.0
    if f.min_exponent < 0 and r < _SWITCH * f.length_scale():
        coeffs = _regular_coefficients(f, -f.min_exponent + _EVAL_EXTRA)
        acc = 0.0
        for c in reversed(coeffs):
            acc = acc * r + c
        return acc
    return math.fsum(t(r) for t in f.terms)
