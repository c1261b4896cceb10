"""Truncated power series in one variable.

Coefficients may be any numbers supporting field arithmetic; with
:class:`fractions.Fraction` or ``int`` coefficients all operations are
exact, which the term engine relies on for the rational parts of its
expansions.
"""

from __future__ import annotations

from fractions import Fraction

from ..errors import DomainError

__all__ = ["PowerSeries"]


class PowerSeries:
    """Power series ``sum_k c_k x^k`` known through ``x**truncation_order``.

    Binary operations between series of different orders truncate to the
    smaller one, so results never claim more precision than their inputs.
    """

    __slots__ = ("coefficients", "truncation_order")

    def __init__(self, coefficients, truncation_order=None):
        coeffs = list(coefficients)
        if truncation_order is None:
            truncation_order = len(coeffs) - 1
        if truncation_order < 0:
            raise DomainError("truncation_order must be nonnegative")
        zero = 0 * coeffs[0] if coeffs else 0
        coeffs = coeffs[: truncation_order + 1]
        coeffs.extend([zero] * (truncation_order + 1 - len(coeffs)))
        self.coefficients = tuple(coeffs)
        self.truncation_order = truncation_order

    @classmethod
    def constant(cls, value, order):
        return cls([value], order)

    @classmethod
    def variable(cls, order):
        """The series for ``x`` itself."""
        return cls([0, 1], order)

    def __len__(self):
        return len(self.coefficients)

    def __getitem__(self, k):
        return self.coefficients[k]

    def __iter__(self):
        return iter(self.coefficients)

    def __repr__(self):
        return f"PowerSeries({list(self.coefficients)!r}, truncation_order={self.truncation_order})"

    def __eq__(self, other):
        if not isinstance(other, PowerSeries):
            return NotImplemented
        return (self.truncation_order == other.truncation_order
                and self.coefficients == other.coefficients)

    def __hash__(self):
        return hash((self.coefficients, self.truncation_order))

    def _coerce(self, other):
        if isinstance(other, PowerSeries):
            return other
        return PowerSeries.constant(other, self.truncation_order)

    def __add__(self, other):
        other = self._coerce(other)
        n = min(self.truncation_order, other.truncation_order)
        return PowerSeries([self[k] + other[k] for k in range(n + 1)], n)

    __radd__ = __add__

    def __neg__(self):
        return PowerSeries([-c for c in self], self.truncation_order)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, PowerSeries):
            return PowerSeries([c * other for c in self], self.truncation_order)
        n = min(self.truncation_order, other.truncation_order)
        a, b = self.coefficients, other.coefficients
        out = []
        for k in range(n + 1):
            acc = a[0] * b[k]
            for i in range(1, k + 1):
                acc = acc + a[i] * b[k - i]
            out.append(acc)
        return PowerSeries(out, n)

    __rmul__ = __mul__

    def inverse(self):
        """Reciprocal series; the constant coefficient must be nonzero."""
        a = self.coefficients
        if a[0] == 0:
            raise DomainError("cannot invert a power series with zero constant term")
        inv0 = Fraction(1, 1) / a[0] if isinstance(a[0], (int, Fraction)) else 1.0 / a[0]
        out = [inv0]
        for k in range(1, self.truncation_order + 1):
            acc = a[1] * out[k - 1]
            for i in range(2, k + 1):
                acc = acc + a[i] * out[k - i]
            out.append(-acc * inv0)
        return PowerSeries(out, self.truncation_order)

    def __truediv__(self, other):
        if not isinstance(other, PowerSeries):
            return PowerSeries([c / other for c in self], self.truncation_order)
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def __pow__(self, n):
        if not isinstance(n, int):
            raise DomainError("only integer powers of a power series are supported")
        if n < 0:
            return self.inverse() ** (-n)
        result = PowerSeries.constant(1 + 0 * self[0], self.truncation_order)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def derivative(self):
        """Term-wise derivative.

        The result keeps the same truncation order; its top coefficient is
        unknown from the input and is set to zero.
        """
        out = [k * self[k] for k in range(1, self.truncation_order + 1)]
        out.append(0 * self[0])
        return PowerSeries(out, self.truncation_order)

    def shifted(self, k):
        """Multiply by ``x**k`` (k >= 0), keeping the truncation order."""
        if k < 0:
            raise DomainError("use division by a unit for negative shifts")
        zero = 0 * self[0]
        return PowerSeries([zero] * k + list(self.coefficients), self.truncation_order)

    def __call__(self, x):
        acc = 0 * self[0]
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc

    def astype(self, kind):
        return PowerSeries([kind(c) for c in self], self.truncation_order)
