"""Bessel-type functions as truncated even series and the Bessel-type operator.

The eigenparameter only ever enters through ``lambda2`` (the square of
lambda), which keeps every coefficient rational.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

from .algebra import Poly, x_power
from .errors import IndexOutOfRange, InvalidParameter, TruncationTooSmall
from .laguerre_type import _check_alpha
from .operators import (
    CanonicalOperator,
    Derive,
    EvenLaurentSeries,
    MulPoly,
    MulPow,
    apply_to_even_series,
    normalize,
)
from .rational import ZERO, Q, as_q
from .special import bessel_series, op_bessel_classical


class BesselHigherRepr(str, Enum):
    nested_delta = "nested_delta"
    laurent_power = "laurent_power"
    explicit = "explicit"


BESSEL_REPR_SOURCE = {
    BesselHigherRepr.nested_delta: "5.5b",
    BesselHigherRepr.laurent_power: "5.5c",
    BesselHigherRepr.explicit: "5.10",
}


@dataclass(frozen=True)
class BesselParams:
    alpha: int
    M: object
    lambda2: object
    K: int

    def __post_init__(self):
        _check_alpha(self.alpha)
        object.__setattr__(self, "M", as_q(self.M))
        object.__setattr__(self, "lambda2", as_q(self.lambda2))
        if self.M < 0:
            raise InvalidParameter("M must be nonnegative")
        if self.lambda2 < 0:
            raise InvalidParameter("lambda2 must be nonnegative")
        if self.K < 2 * self.alpha + 5:
            raise TruncationTooSmall(f"K = {self.K} < 2*alpha + 5 = {2 * self.alpha + 5}")


def _sign(alpha: int) -> int:
    return -1 if (alpha + 1) % 2 else 1


def k_coeff(alpha: int, lambda2):
    """(lambda/2)^{2alpha+4} / ((alpha+1)(alpha+2)!) written via lambda^2."""
    a = _check_alpha(alpha)
    return (as_q(lambda2) / 4) ** (a + 2) / ((a + 1) * math.factorial(a + 2))


def K_series(alpha: int, lambda2, K: int) -> EvenLaurentSeries:
    """-k x^2 J^{alpha+2}, exact through x^{2K}."""
    a = _check_alpha(alpha)
    return bessel_series(a + 2, lambda2, K - 1).shift(1) * (-k_coeff(a, lambda2))


def bessel_type_series(alpha: int, M, lambda2, K: int) -> EvenLaurentSeries:
    """J^{alpha,M} = J^alpha + M K^alpha, exact through x^{2K}."""
    a = _check_alpha(alpha)
    base = bessel_series(a, lambda2, K)
    M = as_q(M)
    if not M:
        return base
    return base + K_series(a, lambda2, K) * M


def A_coeff(i: int, alpha: int):
    a = _check_alpha(alpha)
    top = 2 * a + 4
    if not 1 <= i <= top:
        raise IndexOutOfRange(f"A_i needs 1 <= i <= {top}, got {i}")
    total = ZERO
    for j in range(max(i, a + 3), top + 1):
        sign = -1 if (i + j) % 2 else 1
        num = math.comb(top, j) * math.factorial(2 * j - i - 1)
        den = math.factorial(j - a - 3) * math.factorial(j - i)
        total += sign * Q(num, den) * Q(2) ** (i - 2 * j + top)
    return total * math.factorial(a + 1) / math.factorial(i - 1)


def op_bessel_second(alpha) -> CanonicalOperator:
    return op_bessel_classical(alpha)


def op_bessel_second_weighted(alpha) -> CanonicalOperator:
    """x^{-2alpha-1} D x^{2alpha+1} D, normalized."""
    alpha = as_q(alpha)
    return normalize([MulPow(0, -2 * alpha - 1), Derive(), MulPow(0, 2 * alpha + 1), Derive()])


def _delta_word(times: int) -> list:
    return [MulPow(0, -1), Derive()] * times


def _nested_delta(a: int) -> CanonicalOperator:
    x = Poly.x()
    word = [MulPoly(x**2)] + _delta_word(2 * a + 4) + [MulPoly(x ** (2 * a + 2))]
    return _sign(a) * normalize(word)


def shifted_bessel_factor(alpha) -> CanonicalOperator:
    """D^2 + (2alpha+1)/x D - (4alpha+4)/x^2."""
    alpha = as_q(alpha)
    return op_bessel_classical(alpha) - x_power(-2) * (4 * alpha + 4)


def _laurent_power(a: int) -> CanonicalOperator:
    return _sign(a) * shifted_bessel_factor(a) ** (a + 2)


def _explicit(a: int) -> CanonicalOperator:
    top = 2 * a + 4
    return _sign(a) * CanonicalOperator({i: x_power(i - top) * A_coeff(i, a) for i in range(1, top + 1)})


_BUILDERS = {
    BesselHigherRepr.nested_delta: _nested_delta,
    BesselHigherRepr.laurent_power: _laurent_power,
    BesselHigherRepr.explicit: _explicit,
}


@lru_cache(maxsize=None)
def op_bessel_higher(alpha: int, repr: BesselHigherRepr | str = BesselHigherRepr.nested_delta) -> CanonicalOperator:
    return _BUILDERS[BesselHigherRepr(repr)](_check_alpha(alpha))


def identity_5_7(beta: int) -> tuple[CanonicalOperator, CanonicalOperator]:
    """delta^{2beta} x^{2beta} vs [D^2 + (2beta+1)/x D]^beta."""
    if beta < 0:
        raise InvalidParameter("beta must be nonnegative")
    lhs = normalize(_delta_word(2 * beta) + [MulPoly(Poly.monomial(2 * beta))])
    return lhs, op_bessel_classical(beta) ** beta


def identity_5_8(alpha) -> tuple[CanonicalOperator, CanonicalOperator]:
    """x^2 [D^2 + (2alpha+5)/x D] x^{-2} vs D^2 + (2alpha+1)/x D - (4alpha+4)/x^2."""
    alpha = as_q(alpha)
    lhs = normalize([MulPoly(Poly.monomial(2)), op_bessel_classical(alpha + 2), MulPow(0, -2)])
    return lhs, shifted_bessel_factor(alpha)


def delta_power_identity(beta: int) -> bool:
    """Both shift identities at order parameter ``beta``."""
    l7, r7 = identity_5_7(beta)
    l8, r8 = identity_5_8(beta)
    return l7 == r7 and l8 == r8


def op_bessel_type(alpha: int, M, lambda2, repr=BesselHigherRepr.nested_delta) -> CanonicalOperator:
    """[L2 + lambda^2] + M/(2^{2alpha+2}(alpha+2)!) [L_{2alpha+4} + lambda^{2alpha+4}]."""
    a = _check_alpha(alpha)
    lambda2, M = as_q(lambda2), as_q(M)
    op = op_bessel_second(a) + lambda2
    if M:
        c = M / (2 ** (2 * a + 2) * math.factorial(a + 2))
        op = op + c * (op_bessel_higher(a, repr) + lambda2 ** (a + 2))
    return op


def residual_bessel(kind: str, alpha: int, M, lambda2, K: int, repr=BesselHigherRepr.nested_delta) -> EvenLaurentSeries:
    """Residual series of the Bessel-type eigen-equations.

    ``kind="full"`` applies the combined operator to J^{alpha,M};
    ``kind="K_component"`` applies [L_{2alpha+4} + lambda^{2alpha+4}] to K^alpha.
    Only coefficients inside the returned validity window are meaningful.
    """
    p = BesselParams(alpha, M, lambda2, K)
    if kind == "full":
        return apply_to_even_series(op_bessel_type(alpha, p.M, p.lambda2, repr), bessel_type_series(alpha, p.M, p.lambda2, K))
    if kind == "K_component":
        op = op_bessel_higher(alpha, repr) + p.lambda2 ** (alpha + 2)
        return apply_to_even_series(op, K_series(alpha, p.lambda2, K))
    raise ValueError(f"unknown residual kind {kind!r}")
