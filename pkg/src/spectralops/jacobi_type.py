"""Jacobi-type polynomials and operators at concrete rational beta."""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

from .algebra import Poly, RatFn, linear_power, pochhammer
from .errors import InvalidN, InvalidParameter
from .laguerre_type import _check_alpha, _product
from .operators import CanonicalOperator, Derive, MulPoly, MulPow, apply_to_poly, normalize
from .rational import as_q
from .special import jacobi


class JacHigherRepr(str, Enum):
    direct = "direct"
    factoredA = "factoredA"
    factoredA_conj = "factoredA_conj"
    factoredB = "factoredB"
    factoredB_conj = "factoredB_conj"


JAC_REPR_SOURCE = {
    JacHigherRepr.direct: "2.3",
    JacHigherRepr.factoredA: "3.1a",
    JacHigherRepr.factoredA_conj: "3.1b",
    JacHigherRepr.factoredB: "3.2a",
    JacHigherRepr.factoredB_conj: "3.2b",
}


@dataclass(frozen=True)
class JacTypeParams:
    alpha: int
    beta: object
    N: object
    n: int

    def __post_init__(self):
        object.__setattr__(self, "beta", _check_beta(self.beta))
        object.__setattr__(self, "N", as_q(self.N))
        _check_alpha(self.alpha)
        if self.N < 0:
            raise InvalidParameter("point mass N must be nonnegative")
        if self.n < 0:
            raise InvalidN("n must be nonnegative")


def _check_beta(beta):
    beta = as_q(beta)
    if beta <= -1:
        raise InvalidParameter(f"beta must exceed -1, got {beta}")
    return beta


def r_coeff(n: int, alpha, beta):
    """(alpha+beta+2)_n (alpha+2)_{n-1} / (2 n! (beta+1)_{n-1})."""
    if n < 1:
        raise InvalidN("r_n is defined for n >= 1")
    alpha, beta = as_q(alpha), _check_beta(beta)
    return (
        pochhammer(alpha + beta + 2, n)
        * pochhammer(alpha + 2, n - 1)
        / (2 * math.factorial(n) * pochhammer(beta + 1, n - 1))
    )


def R_poly(n: int, alpha, beta) -> Poly:
    if n < 0:
        raise InvalidN("n must be nonnegative")
    if n == 0:
        return Poly()
    return Poly.linear(1) * jacobi(n - 1, as_q(alpha) + 2, beta) * r_coeff(n, alpha, beta)


def jac_type_poly(n: int, alpha, beta, N) -> Poly:
    return jacobi(n, alpha, beta) + R_poly(n, alpha, beta) * as_q(N)


def op_jacobi_second(alpha, beta) -> CanonicalOperator:
    """(x^2 - 1) D^2 + [alpha - beta + (alpha + beta + 2) x] D."""
    alpha, beta = as_q(alpha), as_q(beta)
    return CanonicalOperator({2: Poly([-1, 0, 1]), 1: Poly([alpha - beta, alpha + beta + 2])})


def op_jacobi_second_weighted(alpha, beta) -> CanonicalOperator:
    """(x-1)^{-alpha} (x+1)^{-beta} D (x-1)^{alpha+1} (x+1)^{beta+1} D, normalized."""
    alpha, beta = as_q(alpha), as_q(beta)
    return normalize(
        [MulPow(1, -alpha), MulPow(-1, -beta), Derive(), MulPow(1, alpha + 1), MulPow(-1, beta + 1), Derive()]
    )


def _over_xm1(c) -> RatFn:
    return linear_power(1, -1) * as_q(c)


def _direct(a: int, beta) -> CanonicalOperator:
    word = (
        [MulPoly(Poly.linear(1)), MulPow(-1, -beta)]
        + [Derive()] * (a + 2)
        + [MulPow(-1, a + beta + 2)]
        + [Derive()] * (a + 2)
        + [MulPoly(Poly.linear(1) ** (a + 1))]
    )
    return normalize(word)


def _conj_by_xm1(inner: CanonicalOperator) -> CanonicalOperator:
    return normalize([MulPoly(Poly.linear(1)), inner, MulPow(1, -1)])


def _factored_a(a: int, beta) -> CanonicalOperator:
    base = op_jacobi_second(a, beta) - _over_xm1(2 * (a + 1))
    return _product(base + j * (a + beta + 1 - j) for j in range(a + 2))


def _factored_a_conj(a: int, beta) -> CanonicalOperator:
    l2 = op_jacobi_second(a + 2, beta)
    return _conj_by_xm1(_product(l2 + (j + 1) * (a + beta + 2 - j) for j in range(a + 2)))


def _factored_b(a: int, beta) -> CanonicalOperator:
    return _product(
        op_jacobi_second(2 * j - 1, beta) - _over_xm1(4 * j) + j * (j + beta) for j in range(a + 2)
    )


def _factored_b_conj(a: int, beta) -> CanonicalOperator:
    return _conj_by_xm1(
        _product(op_jacobi_second(2 * j + 1, beta) + (j + 1) * (j + beta + 1) for j in range(a + 2))
    )


_BUILDERS = {
    JacHigherRepr.direct: _direct,
    JacHigherRepr.factoredA: _factored_a,
    JacHigherRepr.factoredA_conj: _factored_a_conj,
    JacHigherRepr.factoredB: _factored_b,
    JacHigherRepr.factoredB_conj: _factored_b_conj,
}


@lru_cache(maxsize=None)
def _op_jacobi_higher(alpha: int, beta, repr: JacHigherRepr) -> CanonicalOperator:
    return _BUILDERS[repr](alpha, beta)


def op_jacobi_higher(alpha: int, beta, repr: JacHigherRepr | str = JacHigherRepr.direct) -> CanonicalOperator:
    """Order-(2 alpha + 4) Jacobi-type operator in canonical form."""
    return _op_jacobi_higher(_check_alpha(alpha), _check_beta(beta), JacHigherRepr(repr))


def b_const(alpha: int, beta):
    """(alpha+2)! (beta+1)_{alpha+1}."""
    return math.factorial(alpha + 2) * pochhammer(as_q(beta) + 1, alpha + 1)


def jacobi_eigenvalues(n: int, alpha, beta):
    """(n(n+alpha+beta+1), (n)_{alpha+2} (n+beta)_{alpha+2})."""
    alpha, beta = as_q(alpha), as_q(beta)
    a = int(alpha)
    return n * (n + alpha + beta + 1), pochhammer(n, a + 2) * pochhammer(n + beta, a + 2)


def residual_jacobi(n: int, alpha: int, beta, N, repr: JacHigherRepr | str = JacHigherRepr.direct) -> RatFn:
    """Residual of the Jacobi-type eigen-equation on P_n^{alpha,beta,0,N}."""
    p = JacTypeParams(alpha, beta, N, n)
    lam2, lamh = jacobi_eigenvalues(n, alpha, p.beta)
    op = op_jacobi_second(alpha, p.beta) - lam2
    if p.N:
        op = op + (p.N / b_const(alpha, p.beta)) * (op_jacobi_higher(alpha, p.beta, repr) - lamh)
    return apply_to_poly(op, jac_type_poly(n, alpha, p.beta, p.N))


def residual_jacobi_R(n: int, alpha: int, beta, repr: JacHigherRepr | str = JacHigherRepr.direct) -> RatFn:
    """[L_{2alpha+4}^{alpha,beta} - Lambda_{2alpha+4}] R_n, the N-component alone."""
    p = JacTypeParams(alpha, beta, 0, n)
    _, lamh = jacobi_eigenvalues(n, alpha, p.beta)
    return apply_to_poly(op_jacobi_higher(alpha, p.beta, repr) - lamh, R_poly(n, alpha, p.beta))
