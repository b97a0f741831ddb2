"""Truncated formal power series in t with polynomial coefficients.

A series of order N keeps the exact coefficients of t^0 .. t^N and knows
nothing about higher terms.  Coefficient n of a Cauchy product only involves
inputs up to n, so a coefficient read below the order is exact regardless of
where the series was truncated.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .algebra import MultiPoly, PolyLike, as_poly


@dataclass(frozen=True)
class TruncatedSeries:
    """Sum of coeffs[k] * t**k for k = 0..order, modulo t**(order+1)."""

    order: int
    coeffs: tuple[MultiPoly, ...]

    def __post_init__(self) -> None:
        if self.order < 0:
            raise ValueError("series order must be nonnegative")
        if len(self.coeffs) != self.order + 1:
            raise ValueError(
                f"need exactly {self.order + 1} coefficients, got {len(self.coeffs)}"
            )

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[PolyLike]) -> "TruncatedSeries":
        polys = tuple(as_poly(c) for c in coeffs)
        if not polys:
            raise ValueError("need at least the constant coefficient")
        return cls(len(polys) - 1, polys)

    @classmethod
    def one(cls, order: int) -> "TruncatedSeries":
        return cls(order, (MultiPoly.const(1),) + (MultiPoly.zero(),) * order)

    @classmethod
    def exp(cls, coefficient: PolyLike, order: int) -> "TruncatedSeries":
        """exp(c*t) truncated: coefficient k is c**k / k!, exactly."""
        c = as_poly(coefficient)
        coeffs = []
        power = MultiPoly.const(1)
        for k in range(order + 1):
            coeffs.append(power * Fraction(1, math.factorial(k)))
            if k < order:
                power = power * c
        return cls(order, tuple(coeffs))

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        if self.order != other.order:
            raise ValueError(
                f"series order mismatch: {self.order} != {other.order}"
            )
        coeffs = []
        for n in range(self.order + 1):
            acc = MultiPoly.zero()
            for j in range(n + 1):
                acc = acc + self.coeffs[j] * other.coeffs[n - j]
            coeffs.append(acc)
        return TruncatedSeries(self.order, tuple(coeffs))

    def scale(self, factor: PolyLike) -> "TruncatedSeries":
        """Multiply every coefficient by a fixed polynomial."""
        p = as_poly(factor)
        return TruncatedSeries(self.order, tuple(c * p for c in self.coeffs))

    def egf_coeff(self, n: int) -> MultiPoly:
        """Read coefficient n in exponential normalization: n! times coeffs[n]."""
        if not 0 <= n <= self.order:
            raise ValueError(f"coefficient {n} not available at order {self.order}")
        return self.coeffs[n] * math.factorial(n)
