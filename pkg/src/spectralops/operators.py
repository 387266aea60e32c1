"""Linear differential operators with rational-function coefficients.

Two representations are used:

* ``OpWord``: a sequence of atoms (differentiate, multiply by a polynomial,
  by ``(x-c)**g`` with rational ``g``, or by ``exp(s*x)``).  The LAST atom
  acts FIRST on the argument, so ``[MulExp(1), Derive(), MulExp(-1)]`` is
  ``y -> e^x D[e^{-x} y]``.
* ``CanonicalOperator``: the normal form ``sum_i c_i(x) D^i``.

``normalize`` turns a word into its canonical form.  Non-rational weights are
carried as a single left factor ``W = e^{sx} prod (x-c)^g`` while the word is
consumed from the right; pushing ``D`` through ``W`` uses
``D W = W (D + W'/W)``.  At the end ``W`` must be rational (``s == 0`` and all
exponents integral) and is absorbed into the coefficients.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Mapping, Sequence, Union

from .algebra import POLY_ONE, Poly, RatFn, linear_power
from .errors import NonCancellingExpWeight, NonIntegerPowerResidue, ParityViolation
from .rational import ZERO, as_q

# -- atoms ---------------------------------------------------------------------


@dataclass(frozen=True)
class Derive:
    pass


@dataclass(frozen=True)
class MulPoly:
    p: Poly


@dataclass(frozen=True)
class MulPow:
    """Multiplication by ``(x - center) ** exponent``."""

    center: object
    exponent: object

    def __post_init__(self):
        object.__setattr__(self, "center", as_q(self.center))
        object.__setattr__(self, "exponent", as_q(self.exponent))


@dataclass(frozen=True)
class MulExp:
    """Multiplication by ``exp(s * x)``."""

    s: object

    def __post_init__(self):
        object.__setattr__(self, "s", as_q(self.s))


OpAtom = Union[Derive, MulPoly, MulPow, MulExp]
# Words may also embed an already-normalized CanonicalOperator as an element;
# it is conjugated through the pending weight like a D-polynomial.
OpWord = Sequence[Union[OpAtom, "CanonicalOperator"]]


# -- canonical form ------------------------------------------------------------


def _as_ratfn(value) -> RatFn:
    if isinstance(value, RatFn):
        return value
    return RatFn(value)


class CanonicalOperator:
    """``sum_i c_i(x) D^i`` with reduced RatFn coefficients, zero terms absent.

    ``A @ B`` is composition (``B`` acts first); ``A + B``, ``A - B`` and
    ``c * A`` are termwise.  Scalars, ``Poly`` and ``RatFn`` values are
    promoted to multiplication operators where an operator is expected.
    """

    __slots__ = ("terms", "_key")

    def __init__(self, terms: Mapping[int, object] | None = None):
        clean = {}
        for order, c in (terms or {}).items():
            if order < 0:
                raise ValueError("negative derivative order")
            c = _as_ratfn(c)
            if not c.is_zero():
                clean[int(order)] = c
        object.__setattr__(self, "terms", clean)
        object.__setattr__(self, "_key", tuple(sorted(clean.items(), key=lambda kv: kv[0])))

    def __setattr__(self, name, value):
        raise AttributeError("CanonicalOperator is immutable")

    @classmethod
    def identity(cls) -> "CanonicalOperator":
        return cls({0: 1})

    @classmethod
    def zero(cls) -> "CanonicalOperator":
        return cls({})

    @classmethod
    def D(cls, k: int = 1) -> "CanonicalOperator":
        return cls({k: 1})

    @classmethod
    def mul(cls, f) -> "CanonicalOperator":
        return cls({0: f})

    @property
    def order(self) -> int:
        return max(self.terms) if self.terms else -1

    @property
    def lowest_order(self) -> int:
        return min(self.terms) if self.terms else -1

    def coeff(self, i: int) -> RatFn:
        return self.terms.get(i, RatFn(0))

    def has_polynomial_coefficients(self) -> bool:
        return all(c.is_polynomial() for c in self.terms.values())

    def is_zero(self) -> bool:
        return not self.terms

    # algebra --------------------------------------------------------------

    @staticmethod
    def _lift(other) -> "CanonicalOperator | None":
        if isinstance(other, CanonicalOperator):
            return other
        if isinstance(other, (Poly, RatFn)):
            return CanonicalOperator({0: other})
        try:
            return CanonicalOperator({0: as_q(other)})
        except (TypeError, ValueError):
            return None

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        terms = dict(self.terms)
        for i, c in other.terms.items():
            terms[i] = terms[i] + c if i in terms else c
        return CanonicalOperator(terms)

    __radd__ = __add__

    def __neg__(self):
        return CanonicalOperator({i: -c for i, c in self.terms.items()})

    def __sub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        # scalar or coefficient function multiplying from the left
        if isinstance(other, CanonicalOperator):
            return NotImplemented
        if isinstance(other, (Poly, RatFn)):
            f = _as_ratfn(other)
        else:
            try:
                f = as_q(other)
            except (TypeError, ValueError):
                return NotImplemented
        return CanonicalOperator({i: c * f for i, c in self.terms.items()})

    __rmul__ = __mul__

    def __matmul__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return compose(self, other)

    def __rmatmul__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return compose(other, self)

    def __pow__(self, k: int):
        out = CanonicalOperator.identity()
        for _ in range(k):
            out = compose(self, out)
        return out

    def __eq__(self, other):
        if not isinstance(other, CanonicalOperator):
            return NotImplemented
        return self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        if not self.terms:
            return "CanonicalOperator(0)"
        body = " + ".join(f"[{c.to_str()}]D^{i}" for i, c in sorted(self.terms.items(), reverse=True))
        return f"CanonicalOperator({body})"


def add(a: CanonicalOperator, b: CanonicalOperator) -> CanonicalOperator:
    return a + b


def scale(c, a: CanonicalOperator) -> CanonicalOperator:
    return as_q(c) * a


def op_equal(a: CanonicalOperator, b: CanonicalOperator) -> bool:
    return a == b


def op_diff(a: CanonicalOperator, b: CanonicalOperator) -> dict[int, RatFn]:
    """Coefficients of ``a - b`` (empty iff equal); used as a failure witness."""
    return dict((a - b).terms)


def compose(a: CanonicalOperator, b: CanonicalOperator) -> CanonicalOperator:
    """Canonical form of ``a`` applied after ``b`` (Leibniz expansion)."""
    out: dict[int, RatFn] = {}
    for k, bk in b.terms.items():
        derivs = [bk]
        for i, ai in a.terms.items():
            while len(derivs) <= i:
                derivs.append(derivs[-1].derive())
            for j in range(i + 1):
                d = derivs[j]
                if d.is_zero():
                    continue
                term = ai * d
                if j:
                    term = term * math.comb(i, j)
                order = i - j + k
                out[order] = out[order] + term if order in out else term
    return CanonicalOperator(out)


# -- normalization -------------------------------------------------------------


@lru_cache(maxsize=None)
def _log_derivative(s, pows: tuple) -> RatFn:
    r = RatFn(s)
    for c, g in pows:
        if g:
            r = r + RatFn(Poly.const(g), Poly.linear(c))
    return r


def _shift_by(b: CanonicalOperator, r: RatFn) -> CanonicalOperator:
    """``sum_i b_i (D + r)^i``, i.e. ``W^{-1} B W`` when ``W'/W = r``."""
    if r.is_zero():
        return b
    step = CanonicalOperator({1: 1, 0: r})
    power = CanonicalOperator.identity()
    out = CanonicalOperator.zero()
    for i in range(b.order + 1):
        if i:
            power = compose(step, power)
        if i in b.terms:
            out = out + b.terms[i] * power
    return out


def normalize(word: Iterable) -> CanonicalOperator:
    """Canonical form of an operator word.

    Raises ``NonCancellingExpWeight`` if a net ``exp(s x)`` with ``s != 0``
    remains, and ``NonIntegerPowerResidue`` if a net ``(x-c)**g`` with
    non-integral ``g`` remains.
    """
    s = ZERO
    pows: dict = {}
    op = CanonicalOperator.identity()
    for atom in reversed(list(word)):
        if isinstance(atom, Derive):
            r = _log_derivative(s, tuple(sorted(pows.items())))
            op = compose(CanonicalOperator({1: 1, 0: r}), op)
        elif isinstance(atom, MulPoly):
            op = atom.p * op
        elif isinstance(atom, MulPow):
            pows[atom.center] = pows.get(atom.center, ZERO) + atom.exponent
        elif isinstance(atom, MulExp):
            s += atom.s
        elif isinstance(atom, CanonicalOperator):
            r = _log_derivative(s, tuple(sorted(pows.items())))
            op = compose(_shift_by(atom, r), op)
        else:
            raise TypeError(f"not an operator atom: {atom!r}")
    if s:
        raise NonCancellingExpWeight(f"net weight exp({s}*x) does not cancel")
    weight = RatFn(POLY_ONE)
    for c, g in pows.items():
        if g.denominator != 1:
            raise NonIntegerPowerResidue(f"net weight (x-({c}))^({g}) is not rational")
        if g:
            weight = weight * linear_power(c, int(g))
    return weight * op if weight != 1 else op


def mul_x_power(k) -> MulPow:
    return MulPow(0, k)


# -- application -------------------------------------------------------------


def apply_to_ratfn(a: CanonicalOperator, f: RatFn) -> RatFn:
    out = RatFn(0)
    deriv = f
    for i in range(a.order + 1):
        if i:
            deriv = deriv.derive()
        if i in a.terms:
            out = out + a.terms[i] * deriv
    return out


def apply_to_poly(a: CanonicalOperator, p: Poly) -> RatFn:
    """``sum_i c_i(x) p^{(i)}(x)`` as a reduced rational function."""
    out = RatFn(0)
    for i, c in a.terms.items():
        d = p.derive(i)
        if not d.is_zero():
            out = out + c * d
    return out


# -- even Laurent series -------------------------------------------------------


class EvenLaurentSeries:
    """Truncated ``sum_k a_k x^{2k}`` (``k`` may be negative).

    All coefficients with ``k <= valid_up_to`` are exact; nothing above
    ``valid_up_to`` is stored.
    """

    __slots__ = ("coeffs", "valid_up_to")

    def __init__(self, coeffs: Mapping[int, object], valid_up_to: int):
        clean = {}
        for k, a in coeffs.items():
            a = as_q(a)
            if a and k <= valid_up_to:
                clean[int(k)] = a
        object.__setattr__(self, "coeffs", clean)
        object.__setattr__(self, "valid_up_to", int(valid_up_to))

    def __setattr__(self, name, value):
        raise AttributeError("EvenLaurentSeries is immutable")

    def coeff(self, k: int):
        if k > self.valid_up_to:
            raise IndexError(f"coefficient x^{2 * k} lies beyond the validity bound")
        return self.coeffs.get(k, ZERO)

    def is_zero(self) -> bool:
        """True iff every coefficient inside the validity window vanishes."""
        return not self.coeffs

    def min_index(self) -> int | None:
        return min(self.coeffs) if self.coeffs else None

    def __add__(self, other: "EvenLaurentSeries") -> "EvenLaurentSeries":
        if not isinstance(other, EvenLaurentSeries):
            return NotImplemented
        out = dict(self.coeffs)
        for k, a in other.coeffs.items():
            out[k] = out.get(k, ZERO) + a
        return EvenLaurentSeries(out, min(self.valid_up_to, other.valid_up_to))

    def __neg__(self):
        return EvenLaurentSeries({k: -a for k, a in self.coeffs.items()}, self.valid_up_to)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, c):
        c = as_q(c)
        return EvenLaurentSeries({k: a * c for k, a in self.coeffs.items()}, self.valid_up_to)

    __rmul__ = __mul__

    def shift(self, m: int) -> "EvenLaurentSeries":
        """Multiply by ``x^{2m}``."""
        return EvenLaurentSeries({k + m: a for k, a in self.coeffs.items()}, self.valid_up_to + m)

    def truncate(self, valid_up_to: int) -> "EvenLaurentSeries":
        return EvenLaurentSeries(self.coeffs, min(valid_up_to, self.valid_up_to))

    def __eq__(self, other):
        if not isinstance(other, EvenLaurentSeries):
            return NotImplemented
        return self.valid_up_to == other.valid_up_to and self.coeffs == other.coeffs

    def __repr__(self):
        body = ", ".join(f"x^{2 * k}: {a}" for k, a in sorted(self.coeffs.items()))
        return f"EvenLaurentSeries({{{body}}}, valid_up_to={self.valid_up_to})"


def laurent_terms(c: RatFn) -> dict[int, object]:
    """Exponent -> coefficient of a Laurent polynomial ``c``.

    Raises ``ParityViolation`` if the denominator is not a power of ``x``.
    """
    den = c.den
    shift = den.degree
    if den != Poly.monomial(shift):
        raise ParityViolation(f"coefficient {c.to_str()} is not a Laurent polynomial in x")
    return {i - shift: a for i, a in enumerate(c.num.coeffs) if a}


def series_drop(a: CanonicalOperator) -> int:
    """Worst-case loss of validity (in units of x^2) when applying ``a``."""
    drop = 0
    for i, c in a.terms.items():
        exps = laurent_terms(c)
        m_lo = min(exps)
        drop = max(drop, -((m_lo - i) // 2))  # ceil((i - m_lo)/2)
    return drop


def _falling(n: int, i: int) -> int:
    out = 1
    for m in range(i):
        out *= n - m
    return out


def apply_to_even_series(a: CanonicalOperator, s: EvenLaurentSeries) -> EvenLaurentSeries:
    """Apply ``a`` to an even series; requires ``a`` to preserve evenness."""
    plan = []
    for i, c in a.terms.items():
        for e, u in laurent_terms(c).items():
            if (e - i) % 2:
                raise ParityViolation(f"term x^{e} D^{i} does not preserve even series")
            plan.append((i, e, u))
    valid = s.valid_up_to - series_drop(a)
    out: dict[int, object] = {}
    for k, ak in s.coeffs.items():
        for i, e, u in plan:
            ff = _falling(2 * k, i)
            if not ff:
                continue
            kk = k + (e - i) // 2
            if kk > valid:
                continue
            out[kk] = out.get(kk, ZERO) + u * ff * ak
    return EvenLaurentSeries(out, valid)


def preserves_even(a: CanonicalOperator) -> bool:
    try:
        for i, c in a.terms.items():
            if any((e - i) % 2 for e in laurent_terms(c)):
                return False
    except ParityViolation:
        return False
    return True


def D() -> CanonicalOperator:
    return CanonicalOperator.D()


def X() -> CanonicalOperator:
    return CanonicalOperator.mul(Poly.x())
