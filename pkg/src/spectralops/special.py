"""Classical Laguerre and Jacobi polynomials and truncated Bessel series.

Everything is built from the hypergeometric sums directly; recurrences and
differentiation formulas are kept as independent checks (see the tests and
``classical_identities``).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .algebra import POLY_ZERO, Poly, pochhammer, x_power
from .errors import InvalidParameter
from .operators import CanonicalOperator, EvenLaurentSeries
from .rational import ONE, as_q


@dataclass(frozen=True)
class LaguerreParams:
    n: int
    gamma: object

    def __post_init__(self):
        object.__setattr__(self, "gamma", as_q(self.gamma))
        if self.n < 0:
            raise InvalidParameter("n must be nonnegative")
        if self.gamma <= -1:
            raise InvalidParameter(f"Laguerre parameter must exceed -1, got {self.gamma}")


@dataclass(frozen=True)
class JacobiParams:
    n: int
    alpha: object
    beta: object

    def __post_init__(self):
        object.__setattr__(self, "alpha", as_q(self.alpha))
        object.__setattr__(self, "beta", as_q(self.beta))
        if self.n < 0:
            raise InvalidParameter("n must be nonnegative")
        if self.alpha <= -1 or self.beta <= -1:
            raise InvalidParameter("Jacobi parameters must exceed -1")


def laguerre(n: int, gamma) -> Poly:
    """L_n^gamma(x) = (gamma+1)_n/n! * 1F1(-n; gamma+1; x)."""
    p = LaguerreParams(n, gamma)
    g1 = p.gamma + 1
    lead = pochhammer(g1, n) / math.factorial(n)
    coeffs = []
    for k in range(n + 1):
        coeffs.append(lead * pochhammer(-n, k) / (pochhammer(g1, k) * math.factorial(k)))
    return Poly(coeffs)


def jacobi(n: int, alpha, beta) -> Poly:
    """P_n^{alpha,beta}(x) = (alpha+1)_n/n! * 2F1(-n, n+alpha+beta+1; alpha+1; (1-x)/2)."""
    p = JacobiParams(n, alpha, beta)
    a1 = p.alpha + 1
    b = n + p.alpha + p.beta + 1
    lead = pochhammer(a1, n) / math.factorial(n)
    half_one_minus_x = Poly([as_q(1) / 2, as_q(-1) / 2])
    out = POLY_ZERO
    power = Poly([1])
    for k in range(n + 1):
        if k:
            power = power * half_one_minus_x
        c = pochhammer(-n, k) * pochhammer(b, k) / (pochhammer(a1, k) * math.factorial(k))
        out = out + power * c
    return out * lead


def bessel_series(alpha, lambda2, K: int) -> EvenLaurentSeries:
    """0F1(-; alpha+1; -lambda2 x^2/4) through x^{2K}: a_k = (-lambda2/4)^k/((alpha+1)_k k!)."""
    alpha = as_q(alpha)
    lambda2 = as_q(lambda2)
    if alpha <= -1:
        raise InvalidParameter("Bessel parameter must exceed -1")
    if lambda2 < 0:
        raise InvalidParameter("lambda2 must be nonnegative")
    if K < 0:
        raise InvalidParameter("truncation order must be nonnegative")
    ratio = -lambda2 / 4
    coeffs = {}
    a = ONE
    for k in range(K + 1):
        if k:
            a = a * ratio / ((alpha + k) * k)
        coeffs[k] = a
    return EvenLaurentSeries(coeffs, K)


def op_laguerre_second(gamma) -> CanonicalOperator:
    """x D^2 + (gamma + 1 - x) D; any rational gamma is admitted."""
    gamma = as_q(gamma)
    return CanonicalOperator({2: Poly([0, 1]), 1: Poly([gamma + 1, -1])})


def op_bessel_classical(gamma) -> CanonicalOperator:
    """D^2 + (2 gamma + 1)/x D."""
    gamma = as_q(gamma)
    return CanonicalOperator({2: 1, 1: x_power(-1) * (2 * gamma + 1)})


def op_delta() -> CanonicalOperator:
    """The scaled derivative x^{-1} D."""
    return CanonicalOperator({1: x_power(-1)})
