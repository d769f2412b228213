"""Exact poly-Cauchy polynomials of the second kind.

Rationals are returned as :class:`fractions.Fraction`; polynomials and series
as lists of coefficients, lowest degree first.
"""

from ._polycauchy import (
    ConfigError,
    bernoulli_2nd_poly,
    bernoulli_high_order_poly,
    catalog,
    expand,
    frobenius_euler_poly,
    lif_series,
    narumi_poly,
    number,
    poly,
    poly_oracle,
    polycauchy_number_gf,
    stirling1,
    verify,
)

__all__ = [
    "ConfigError",
    "bernoulli_2nd_poly",
    "bernoulli_high_order_poly",
    "catalog",
    "expand",
    "frobenius_euler_poly",
    "lif_series",
    "narumi_poly",
    "number",
    "poly",
    "poly_oracle",
    "polycauchy_number_gf",
    "stirling1",
    "verify",
]
