"""Laguerre-type polynomials and the order-(2 alpha + 4) Laguerre-type operator.

``op_higher(alpha, repr)`` builds the higher-order component from any of ten
published representations; they are meant to agree exactly, which is what
the equivalence checks compare.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

from .algebra import Poly, RatFn, pochhammer, x_power
from .errors import InvalidN, InvalidParameter, UnsupportedAlpha
from .operators import CanonicalOperator, Derive, MulExp, MulPoly, MulPow, apply_to_poly, normalize
from .rational import ZERO, as_q
from .special import laguerre, op_laguerre_second

X = Poly.x()


class HigherRepr(str, Enum):
    koekoek = "koekoek"
    symmetric = "symmetric"
    elementary = "elementary"
    factoredA = "factoredA"
    factoredA_conj = "factoredA_conj"
    factoredB = "factoredB"
    factoredB_conj = "factoredB_conj"
    duran = "duran"
    bavinck = "bavinck"
    recurrence = "recurrence"


#: short reference label for each representation
REPR_SOURCE = {
    HigherRepr.koekoek: "1.9",
    HigherRepr.symmetric: "1.10",
    HigherRepr.elementary: "2.5",
    HigherRepr.factoredA: "3.3a",
    HigherRepr.factoredA_conj: "3.3b",
    HigherRepr.factoredB: "3.4a",
    HigherRepr.factoredB_conj: "3.4b",
    HigherRepr.duran: "3.8",
    HigherRepr.bavinck: "3.10",
    HigherRepr.recurrence: "3.5",
}


@dataclass(frozen=True)
class LagTypeParams:
    alpha: int
    N: object
    n: int

    def __post_init__(self):
        object.__setattr__(self, "N", as_q(self.N))
        _check_alpha(self.alpha)
        if self.N < 0:
            raise InvalidParameter("point mass N must be nonnegative")
        if self.n < 0:
            raise InvalidN("n must be nonnegative")


def _check_alpha(alpha) -> int:
    if isinstance(alpha, bool) or int(alpha) != alpha or alpha < 0:
        raise UnsupportedAlpha(f"alpha must be a nonnegative integer, got {alpha!r}")
    return int(alpha)


# -- polynomials -------------------------------------------------------------


def t_coeff(n: int, alpha):
    if n < 1:
        raise InvalidN("t_n is defined for n >= 1")
    return pochhammer(as_q(alpha) + 2, n - 1) / math.factorial(n)


def T_poly(n: int, alpha) -> Poly:
    """-t_n x L_{n-1}^{alpha+2}(x); zero for n = 0."""
    if n < 0:
        raise InvalidN("n must be nonnegative")
    if n == 0:
        return Poly()
    return X * laguerre(n - 1, as_q(alpha) + 2) * (-t_coeff(n, alpha))


def lag_type_poly(n: int, alpha, N) -> Poly:
    """L_n^{alpha,N} = L_n^alpha + N T_n^alpha."""
    return laguerre(n, alpha) + T_poly(n, alpha) * as_q(N)


# -- coefficient tables --------------------------------------------------------


def d_coeff(i: int, alpha: int) -> Poly:
    """Coefficient polynomial of D^i in the expanded (``koekoek``) form."""
    a = _check_alpha(alpha)
    if not 1 <= i <= 2 * a + 4:
        raise InvalidParameter(f"d_i needs 1 <= i <= {2 * a + 4}")
    cs = [ZERO] * (a + 3)
    for j in range(max(1, i - a - 2), min(i, a + 2) + 1):
        sign = -1 if (i + j + 1) % 2 else 1
        cs[j] += sign * math.comb(a + 1, j - 1) * math.comb(a + 2, i - j) * pochhammer(i + 1, a + 2 - j)
    return Poly(cs)


def b_poly(k: int, alpha: int) -> Poly:
    """Polynomial factor p_k of b_k = e^{-x} p_k(x) in the Lagrange symmetric form."""
    a = _check_alpha(alpha)
    if not 1 <= k <= a + 2:
        raise InvalidParameter(f"b_k needs 1 <= k <= {a + 2}")
    pref = as_q(math.factorial(a + 1) * math.factorial(a + 2)) / (math.factorial(k - 1) * math.factorial(k))
    cs = [ZERO] * (k + a + 1)
    for j in range(2 * k - 2, k + a + 1):
        cs[j] += pref / math.factorial(j - 2 * k + 2)
    return Poly(cs)


# -- operators ---------------------------------------------------------------


def op_second(alpha) -> CanonicalOperator:
    """x D^2 + (alpha + 1 - x) D; alpha = -1 gives x(D^2 - D)."""
    return op_laguerre_second(alpha)


def op_second_weighted(alpha) -> CanonicalOperator:
    """e^x x^{-alpha} D e^{-x} x^{alpha+1} D, normalized."""
    alpha = as_q(alpha)
    return normalize([MulExp(1), MulPow(0, -alpha), Derive(), MulExp(-1), MulPow(0, alpha + 1), Derive()])


def _inv_x(c) -> RatFn:
    return x_power(-1) * as_q(c)


def _product(factors) -> CanonicalOperator:
    """Ordered product; the first factor in the iterable acts first."""
    out = CanonicalOperator.identity()
    for f in factors:
        out = f @ out
    return out


def _sign(alpha: int) -> int:
    return -1 if (alpha + 1) % 2 else 1


def _koekoek(a: int) -> CanonicalOperator:
    return CanonicalOperator({i: d_coeff(i, a) for i in range(1, 2 * a + 5)})


def _symmetric(a: int) -> CanonicalOperator:
    out = CanonicalOperator.zero()
    for k in range(1, a + 3):
        word = [MulExp(1), MulPow(0, -a)] + [Derive()] * k + [MulExp(-1), MulPoly(b_poly(k, a))] + [Derive()] * k
        term = normalize(word)
        out = out + term if k % 2 else out - term
    return out


def _elementary(a: int) -> CanonicalOperator:
    word = (
        [MulExp(1), MulPoly(X)]
        + [Derive()] * (a + 2)
        + [MulExp(-1)]
        + [Derive()] * (a + 2)
        + [MulPoly(X ** (a + 1))]
    )
    return _sign(a) * normalize(word)


def _factored_a(a: int) -> CanonicalOperator:
    base = op_second(a) - _inv_x(a + 1)
    return _sign(a) * _product(base - j for j in range(a + 2))


def _factored_a_conj(a: int) -> CanonicalOperator:
    inner = _product(op_second(a + 2) - (j + 1) for j in range(a + 2))
    return _sign(a) * normalize([MulPoly(X), inner, MulPow(0, -1)])


def _factored_b(a: int) -> CanonicalOperator:
    return _sign(a) * _product(op_second(2 * j - 1) - _inv_x(2 * j) - j for j in range(a + 2))


def _factored_b_conj(a: int) -> CanonicalOperator:
    inner = _product(op_second(2 * j + 1) - (j + 1) for j in range(a + 2))
    return _sign(a) * normalize([MulPoly(X), inner, MulPow(0, -1)])


def _duran(a: int) -> CanonicalOperator:
    inner = _product(op_second(a + 1) - j for j in range(1, a + 2))
    return _sign(a) * (op_second(-1) @ inner)


def _bavinck(a: int) -> CanonicalOperator:
    inner = _product(op_second(a) - j for j in range(1, a + 1))
    d2_minus_d = CanonicalOperator({2: 1, 1: -1})
    return _sign(a) * (X @ ((op_second(2 * a + 3) - (a + 2)) @ (d2_minus_d @ inner)))


def _recurrence(a: int) -> CanonicalOperator:
    prev = op_second(-1)
    for b in range(a + 1):
        step = op_second(2 * b + 1) - _inv_x(2 * b + 2) - (b + 1)
        prev = -(step @ prev)
    return prev


_BUILDERS = {
    HigherRepr.koekoek: _koekoek,
    HigherRepr.symmetric: _symmetric,
    HigherRepr.elementary: _elementary,
    HigherRepr.factoredA: _factored_a,
    HigherRepr.factoredA_conj: _factored_a_conj,
    HigherRepr.factoredB: _factored_b,
    HigherRepr.factoredB_conj: _factored_b_conj,
    HigherRepr.duran: _duran,
    HigherRepr.bavinck: _bavinck,
    HigherRepr.recurrence: _recurrence,
}


@lru_cache(maxsize=None)
def op_higher(alpha: int, repr: HigherRepr | str = HigherRepr.elementary) -> CanonicalOperator:
    """The order-(2 alpha + 4) Laguerre-type operator in canonical form."""
    return _BUILDERS[HigherRepr(repr)](_check_alpha(alpha))


def op_combined(alpha: int, N, repr: HigherRepr | str = HigherRepr.elementary) -> CanonicalOperator:
    """L_2^alpha + N/(alpha+2)! L_{2alpha+4}^alpha."""
    a = _check_alpha(alpha)
    N = as_q(N)
    if N < 0:
        raise InvalidParameter("point mass N must be nonnegative")
    if not N:
        return op_second(a)
    return op_second(a) + (N / math.factorial(a + 2)) * op_higher(a, repr)


def eigenvalue_combined(n: int, alpha: int, N):
    """n + N/(alpha+2)! (n)_{alpha+2}."""
    a = _check_alpha(alpha)
    return n + as_q(N) / math.factorial(a + 2) * pochhammer(n, a + 2)


# -- operator identities -------------------------------------------------------


def identity_3_6(alpha: int) -> tuple[CanonicalOperator, CanonicalOperator]:
    """prod_{j=1}^{alpha+1}(L_2^{alpha+1} - j) vs prod_{j=1}^{alpha+1}(L_2^{2j-1} - j)."""
    a = _check_alpha(alpha)
    lhs = _product(op_second(a + 1) - j for j in range(1, a + 2))
    rhs = _product(op_second(2 * j - 1) - j for j in range(1, a + 2))
    return lhs, rhs


def identity_3_7(alpha: int, j: int) -> tuple[CanonicalOperator, CanonicalOperator]:
    """(L_2^{alpha+j+2} - j - 1)(L_2^{alpha+1} - j) vs (L_2^{alpha+2} - j - 1)(L_2^{alpha+j+1} - j)."""
    a = as_q(alpha)
    lhs = (op_second(a + j + 2) - (j + 1)) @ (op_second(a + 1) - j)
    rhs = (op_second(a + 2) - (j + 1)) @ (op_second(a + j + 1) - j)
    return lhs, rhs


def identity_3_9(j: int) -> tuple[CanonicalOperator, CanonicalOperator, CanonicalOperator]:
    """Three members of the commutation relation with L_2^{-1} = x(D^2 - D)."""
    lm1 = op_second(-1)
    first = (op_second(2 * j - 1) - _inv_x(2 * j) - j) @ lm1
    middle = X @ ((op_second(2 * j + 1) - (j + 1)) @ CanonicalOperator({2: 1, 1: -1}))
    last = lm1 @ (op_second(2 * j - 1) - j)
    return first, middle, last


# -- eigen-identity residuals --------------------------------------------------

RESIDUAL_KINDS = ("eq_1_7", "eq_1_11", "eq_1_12", "eq_2_8", "eq_2_9")


def _apply(op: CanonicalOperator, p: Poly) -> RatFn:
    return apply_to_poly(op, p)


def residual(kind: str, n: int, alpha: int, N=0, repr: HigherRepr | str = HigherRepr.elementary) -> RatFn:
    """Left minus right side of a Laguerre-type eigen-identity; zero iff it holds."""
    a = _check_alpha(alpha)
    if n < 0:
        raise InvalidN("n must be nonnegative")
    N = as_q(N)
    second = op_second(a)
    higher = op_higher(a, repr)
    poch = pochhammer(n, a + 2)
    fact = math.factorial(a + 2)
    if kind == "eq_1_7":
        op = (second + n) + (N / fact) * (higher + poch)
        return _apply(op, lag_type_poly(n, a, N))
    if kind == "eq_1_11":
        return _apply(higher + poch, T_poly(n, a))
    if kind == "eq_1_12":
        return _apply(second + n, T_poly(n, a)) * fact + _apply(higher + poch, laguerre(n, a))
    if kind in ("eq_2_8", "eq_2_9"):
        if n == 0:
            # both left-hand sides vanish identically for n = 0
            return RatFn(0)
        rhs = laguerre(n - 1, a + 2) * (pochhammer(n + 1, a) * (a + 1) * (a + 2))
        if kind == "eq_2_8":
            return _apply(second + n, T_poly(n, a)) * fact + rhs
        return _apply(higher + poch, laguerre(n, a)) - rhs
    raise ValueError(f"unknown residual kind {kind!r}")
