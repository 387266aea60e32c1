"""Residuals of the classical Laguerre and Bessel identities.

Identities carrying a non-polynomial weight are restated as plain polynomial
(or series) identities, e.g. ``D[e^{-x} L_n^g] = -e^{-x} L_n^{g+1}`` becomes
``L_n^g' - L_n^g + L_n^{g+1} = 0``.  Every function returns something that
is zero exactly when the identity holds.
"""

from __future__ import annotations

from .algebra import Poly, RatFn
from .errors import InvalidParameter
from .operators import CanonicalOperator, EvenLaurentSeries, apply_to_even_series, apply_to_poly
from .rational import as_q
from .special import bessel_series, laguerre, op_bessel_classical, op_delta, op_laguerre_second

X = Poly.x()


def _lag(n: int, gamma) -> Poly:
    # L_{-1} is taken as zero so boundary cases stay uniform
    return laguerre(n, gamma) if n >= 0 else Poly()


def _need_positive(gamma):
    gamma = as_q(gamma)
    if gamma <= 0:
        raise InvalidParameter("identity requires gamma > 0")
    return gamma


def laguerre_equation(n: int, gamma) -> RatFn:
    """x L'' + (g+1-x) L' + n L."""
    p = laguerre(n, gamma)
    return apply_to_poly(op_laguerre_second(gamma), p) + p * n


def exp_weighted_derivative(n: int, gamma) -> Poly:
    p = laguerre(n, gamma)
    return p.derive() - p + laguerre(n, as_q(gamma) + 1)


def power_weighted_derivative(n: int, gamma) -> Poly:
    """g L + x L' - (n+g) L^{g-1}: the x^g-weighted rule divided by x^{g-1}."""
    gamma = _need_positive(gamma)
    p = laguerre(n, gamma)
    return p * gamma + X * p.derive() - laguerre(n, gamma - 1) * (n + gamma)


def derivative_shift(n: int, gamma) -> Poly:
    return laguerre(n, gamma).derive() + _lag(n - 1, as_q(gamma) + 1)


def parameter_shift(n: int, gamma) -> Poly:
    gamma = as_q(gamma)
    return laguerre(n, gamma) - laguerre(n, gamma + 1) + _lag(n - 1, gamma + 1)


def x_multiplication(n: int, gamma) -> Poly:
    gamma = _need_positive(gamma)
    return X * laguerre(n, gamma) - laguerre(n, gamma - 1) * (n + gamma) + laguerre(n + 1, gamma - 1) * (n + 1)


def bessel_equation(gamma, lambda2, K: int) -> EvenLaurentSeries:
    op = op_bessel_classical(gamma) + as_q(lambda2)
    return apply_to_even_series(op, bessel_series(gamma, lambda2, K))


def bessel_delta_lowering(gamma, lambda2, K: int) -> EvenLaurentSeries:
    """delta J^g + lambda2/(2(g+1)) J^{g+1}."""
    gamma, lambda2 = as_q(gamma), as_q(lambda2)
    lhs = apply_to_even_series(op_delta(), bessel_series(gamma, lambda2, K))
    return lhs + bessel_series(gamma + 1, lambda2, K) * (lambda2 / (2 * (gamma + 1)))


def bessel_delta_weighted(gamma: int, lambda2, K: int) -> EvenLaurentSeries:
    """delta[x^{2g} J^g] - 2g x^{2g-2} J^{g-1}, integer g >= 1."""
    if int(gamma) != gamma or gamma < 1:
        raise InvalidParameter("weighted Bessel rule is checked for integer gamma >= 1")
    g = int(gamma)
    lhs = apply_to_even_series(op_delta(), bessel_series(g, lambda2, K).shift(g))
    return lhs - bessel_series(g - 1, lambda2, K).shift(g - 1) * (2 * g)


def is_zero(value) -> bool:
    if isinstance(value, (Poly, RatFn, EvenLaurentSeries, CanonicalOperator)):
        return value.is_zero()
    return not value
