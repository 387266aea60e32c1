from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given
from hypothesis import strategies as st

from spectralops import classical
from spectralops.algebra import Poly
from spectralops.errors import InvalidParameter
from spectralops.operators import apply_to_poly
from spectralops.rational import Q
from spectralops.special import bessel_series, jacobi, laguerre, op_bessel_classical, op_delta, op_laguerre_second

X = sp.Symbol("x")


def _to_sympy(p: Poly):
    return sum(sp.Rational(int(c.numerator), int(c.denominator)) * X**k for k, c in enumerate(p.coeffs))


def _rat(q):
    q = Fraction(q)
    return sp.Rational(q.numerator, q.denominator)


def test_laguerre_examples():
    assert laguerre(0, 0) == Poly([1])
    assert laguerre(1, 0) == Poly([1, -1])
    assert laguerre(2, 0) == Poly([1, -2, Q(1, 2)])
    assert laguerre(1, Q(1, 2)) == Poly([Q(3, 2), -1])


def test_jacobi_examples():
    assert jacobi(0, 3, 5) == Poly([1])
    assert jacobi(1, 0, 0) == Poly([0, 1])
    assert jacobi(2, 0, 0) == Poly([Q(-1, 2), 0, Q(3, 2)])
    assert jacobi(1, 1, 0) == Poly([Q(1, 2), Q(3, 2)])


def test_invalid_parameters():
    with pytest.raises(InvalidParameter):
        laguerre(2, -1)
    with pytest.raises(InvalidParameter):
        laguerre(-1, 0)
    with pytest.raises(InvalidParameter):
        jacobi(2, 0, Q(-3, 2))
    with pytest.raises(InvalidParameter):
        bessel_series(0, -1, 4)


params = st.builds(Fraction, st.integers(-2, 20), st.integers(1, 3)).filter(lambda g: g > -1)


@given(st.integers(0, 9), params)
def test_laguerre_matches_sympy(n, g):
    ours = _to_sympy(laguerre(n, g))
    assert sp.expand(ours - sp.assoc_laguerre(n, _rat(g), X)) == 0


@given(st.integers(0, 7), params, params)
def test_jacobi_matches_sympy(n, a, b):
    ours = _to_sympy(jacobi(n, a, b))
    assert sp.expand(ours - sp.jacobi(n, _rat(a), _rat(b), X)) == 0


@given(st.integers(1, 10), params)
def test_laguerre_three_term_recurrence(n, g):
    # (n+1) L_{n+1} = (2n+g+1-x) L_n - (n+g) L_{n-1}
    lhs = laguerre(n + 1, g) * (n + 1)
    rhs = Poly([2 * n + Q(g) + 1, -1]) * laguerre(n, g) - laguerre(n - 1, g) * (n + Q(g))
    assert lhs == rhs


@given(st.integers(0, 10), params)
def test_classical_laguerre_identities(n, g):
    assert classical.laguerre_equation(n, g).is_zero()
    assert classical.exp_weighted_derivative(n, g).is_zero()
    assert classical.derivative_shift(n, g).is_zero()
    assert classical.parameter_shift(n, g).is_zero()
    if g > 0:
        assert classical.power_weighted_derivative(n, g).is_zero()
        assert classical.x_multiplication(n, g).is_zero()


def test_laguerre_equation_example():
    # x L'' + (1-x) L' on 1-x gives x-1
    assert apply_to_poly(op_laguerre_second(0), Poly([1, -1])) == Poly([-1, 1])


def test_bessel_series_examples():
    s = bessel_series(0, 4, 3)
    assert s.coeffs == {0: 1, 1: -1, 2: Q(1, 4), 3: Q(-1, 36)}
    assert s.valid_up_to == 3
    assert bessel_series(Q(1, 2), 0, 5).coeffs.get(0) == 1
    assert all(bessel_series(Q(1, 2), 0, 5).coeff(k) == 0 for k in range(1, 6))


def test_bessel_series_matches_sympy_hyper():
    # 0F1(;a+1;-l2 x^2/4) expanded by sympy
    a, l2, K = Q(3, 2), Q(5), 6
    f = sp.hyper([], [_rat(a) + 1], -_rat(l2) * X**2 / 4)
    taylor = sp.series(f, X, 0, 2 * K + 1).removeO()
    ours = sum(_rat(c) * X ** (2 * k) for k, c in bessel_series(a, l2, K).coeffs.items())
    assert sp.expand(sp.hyperexpand(taylor) - ours) == 0


@given(st.integers(0, 4), st.integers(0, 9))
def test_classical_bessel_identities(g, l2):
    K = 8
    for res in (classical.bessel_equation(g, l2, K), classical.bessel_delta_lowering(g, l2, K)):
        assert res.valid_up_to >= K - 1
        assert res.is_zero()
    if g >= 1:
        assert classical.bessel_delta_weighted(g, l2, K).is_zero()


def test_classical_operator_shapes():
    assert op_bessel_classical(0).coeff(1) == Poly([1]) / Poly([0, 1])
    assert op_delta().order == 1
    assert op_laguerre_second(-1).coeff(1) == Poly([0, -1])
