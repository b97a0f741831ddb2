"""The weighted binomial family l*(x - l)**n, built by two independent routes.

``closed_form`` expands the product directly.  ``via_gf`` multiplies the two
exponential series exp(-l*t) and exp(x*t) with a full Cauchy product, scales
by l, and reads off the exponentially normalized coefficient; it never uses
the simplification exp((x - l)*t), so agreement of the two routes is a real
cross-check, not a tautology.
"""

from __future__ import annotations

from functools import cache

from .algebra import L, MultiPoly, X
from .series import TruncatedSeries


@cache
def closed_form(n: int) -> MultiPoly:
    """Degree-n member l*(x - l)**n in canonical expanded form."""
    if n < 0:
        raise ValueError("degree must be nonnegative")
    return L * (X - L) ** n


@cache
def via_gf(n: int) -> MultiPoly:
    """Degree-n member read from the product of exponential series."""
    if n < 0:
        raise ValueError("degree must be nonnegative")
    product = (TruncatedSeries.exp(-L, n) * TruncatedSeries.exp(X, n)).scale(L)
    return product.egf_coeff(n)


@cache
def number(n: int) -> MultiPoly:
    """Value of the family at x = 0: (-1)**n * l**(n+1)."""
    if n < 0:
        raise ValueError("degree must be nonnegative")
    return MultiPoly({(n + 1, 0, 0): (-1) ** n})
