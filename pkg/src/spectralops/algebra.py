"""Exact rational scalars, dense univariate polynomials and rational functions."""

from __future__ import annotations

from .errors import ZeroDenominator
from .rational import ONE, ZERO, as_q

#: degree reported for the zero polynomial
ZERO_DEGREE = -1


def pochhammer(a, k: int):
    """Rising factorial ``a (a+1) ... (a+k-1)``; equals 1 for ``k == 0``."""
    if k < 0:
        raise ValueError("pochhammer order must be nonnegative")
    a = as_q(a)
    out = ONE
    for i in range(k):
        out *= a + i
    return out


def _coerce_scalar(value):
    if isinstance(value, (Poly, RatFn)):
        return None
    try:
        return as_q(value)
    except (TypeError, ValueError):
        return None


class Poly:
    """Dense polynomial over Q, coefficients indexed by degree.

    Instances are immutable.  Trailing zeros are trimmed so the zero
    polynomial has an empty coefficient tuple and degree ``ZERO_DEGREE``.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [as_q(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @classmethod
    def _raw(cls, cs: list) -> "Poly":
        # cs must already hold Q values; trailing zeros are trimmed here
        while cs and not cs[-1]:
            cs.pop()
        p = object.__new__(cls)
        object.__setattr__(p, "coeffs", tuple(cs))
        return p

    @classmethod
    def const(cls, c) -> "Poly":
        return cls._raw([as_q(c)])

    @classmethod
    def monomial(cls, k: int, c=1) -> "Poly":
        return cls._raw([ZERO] * k + [as_q(c)])

    @classmethod
    def x(cls) -> "Poly":
        return cls._raw([ZERO, ONE])

    @classmethod
    def linear(cls, c) -> "Poly":
        """``x - c``."""
        return cls._raw([-as_q(c), ONE])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    @property
    def lc(self):
        return self.coeffs[-1] if self.coeffs else ZERO

    def coeff(self, k: int):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else ZERO

    def low_order(self) -> int:
        """Index of the lowest nonzero coefficient (``ZERO_DEGREE`` for 0)."""
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return ZERO_DEGREE

    # arithmetic -----------------------------------------------------------

    def _lift(self, other):
        if isinstance(other, Poly):
            return other
        s = _coerce_scalar(other)
        if s is None:
            return None
        return Poly._raw([s])

    def __add__(self, other):
        if isinstance(other, RatFn):
            return NotImplemented
        other = self._lift(other)
        if other is None:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        cs = list(a)
        for i, c in enumerate(b):
            cs[i] = cs[i] + c
        return Poly._raw(cs)

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw([-c for c in self.coeffs])

    def __sub__(self, other):
        if isinstance(other, RatFn):
            return NotImplemented
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
        if isinstance(other, RatFn):
            return NotImplemented
        if not isinstance(other, Poly):
            s = _coerce_scalar(other)
            if s is None:
                return NotImplemented
            if not s:
                return Poly._raw([])
            return Poly._raw([c * s for c in self.coeffs])
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly._raw([])
        out = [ZERO] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if not ai:
                continue
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
        return Poly._raw(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power of a polynomial")
        out = Poly._raw([ONE])
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __divmod__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        if other.is_zero():
            raise ZeroDenominator("polynomial division by zero")
        rem = list(self.coeffs)
        db = other.degree
        inv = ONE / other.lc
        if len(rem) - 1 < db:
            return Poly._raw([]), self
        quo = [ZERO] * (len(rem) - db)
        bc = other.coeffs
        for k in range(len(rem) - 1, db - 1, -1):
            c = rem[k]
            if not c:
                continue
            f = c * inv
            quo[k - db] = f
            for j in range(db + 1):
                rem[k - db + j] -= f * bc[j]
        return Poly._raw(quo), Poly._raw(rem[:db] if db > 0 else [])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __truediv__(self, other):
        s = _coerce_scalar(other)
        if s is not None:
            if not s:
                raise ZeroDenominator("division by zero scalar")
            inv = ONE / s
            return Poly._raw([c * inv for c in self.coeffs])
        if isinstance(other, (Poly, RatFn)):
            return RatFn(self) / other
        return NotImplemented

    def __rtruediv__(self, other):
        s = _coerce_scalar(other)
        if s is None:
            return NotImplemented
        return RatFn(Poly._raw([s])) / RatFn(self)

    def monic(self) -> "Poly":
        if self.is_zero():
            return self
        return self / self.lc

    def derive(self, k: int = 1) -> "Poly":
        if k < 0:
            raise ValueError("derivative order must be nonnegative")
        cs = self.coeffs
        if k >= len(cs):
            return Poly._raw([])
        if k == 0:
            return self
        out = []
        for i in range(k, len(cs)):
            f = 1
            for m in range(i - k + 1, i + 1):
                f *= m
            out.append(cs[i] * f)
        return Poly._raw(out)

    def __call__(self, x):
        acc = ZERO
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def compose(self, inner: "Poly") -> "Poly":
        acc = Poly._raw([])
        for c in reversed(self.coeffs):
            acc = acc * inner + c
        return acc

    # comparisons ----------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, RatFn):
            return other == self
        s = _coerce_scalar(other)
        if s is None:
            return NotImplemented
        return self.coeffs == ((s,) if s else ())

    def __hash__(self):
        return hash(("Poly", self.coeffs))

    def __bool__(self):
        return bool(self.coeffs)

    def __repr__(self):
        return f"Poly({self.to_str()})"

    def to_str(self, var: str = "x") -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            sign = "-" if c < 0 else "+"
            mag = -c if c < 0 else c
            if k == 0:
                body = str(mag)
            else:
                mono = var if k == 1 else f"{var}^{k}"
                body = mono if mag == 1 else f"{mag}*{mono}"
            parts.append((sign, body))
        head_sign, head = parts[0]
        out = ("-" if head_sign == "-" else "") + head
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out


def poly_mul(p: Poly, q: Poly) -> Poly:
    return p * q


def poly_derive(p: Poly, k: int) -> Poly:
    return p.derive(k)


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd (zero when both inputs are zero)."""
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


X = Poly.x()
POLY_ONE = Poly.const(1)
POLY_ZERO = Poly()


class RatFn:
    """Reduced quotient ``num/den`` with ``den`` monic.

    Equality is structural on the reduced representative.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        num = _as_poly(num)
        if den is None:
            object.__setattr__(self, "num", num)
            object.__setattr__(self, "den", POLY_ONE)
            return
        den = _as_poly(den)
        if den.is_zero():
            raise ZeroDenominator("rational function with zero denominator")
        if num.is_zero():
            num, den = POLY_ZERO, POLY_ONE
        elif den.is_constant():
            num, den = num / den.lc, POLY_ONE
        else:
            g = poly_gcd(num, den)
            if g.degree > 0:
                num, den = num // g, den // g
            lc = den.lc
            if lc != 1:
                num, den = num / lc, den / lc
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("RatFn is immutable")

    @classmethod
    def _raw(cls, num: Poly, den: Poly) -> "RatFn":
        r = object.__new__(cls)
        object.__setattr__(r, "num", num)
        object.__setattr__(r, "den", den)
        return r

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.den.degree == 0

    def as_poly(self) -> Poly:
        if not self.is_polynomial():
            raise ValueError(f"{self!r} is not a polynomial")
        return self.num

    def _lift(self, other):
        if isinstance(other, RatFn):
            return other
        if isinstance(other, Poly):
            return RatFn._raw(other, POLY_ONE)
        s = _coerce_scalar(other)
        if s is None:
            return None
        return RatFn._raw(Poly._raw([s]), POLY_ONE)

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        if self.den == other.den:
            if self.den.degree == 0:
                return RatFn._raw(self.num + other.num, POLY_ONE)
            return RatFn(self.num + other.num, self.den)
        return RatFn(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFn._raw(-self.num, self.den)

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
        if not isinstance(other, (RatFn, Poly)):
            s = _coerce_scalar(other)
            if s is None:
                return NotImplemented
            if not s:
                return RatFn._raw(POLY_ZERO, POLY_ONE)
            return RatFn._raw(self.num * s, self.den)
        other = self._lift(other)
        if self.den.degree == 0 and other.den.degree == 0:
            return RatFn._raw(self.num * other.num, POLY_ONE)
        return RatFn(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        if other.is_zero():
            raise ZeroDenominator("division by zero rational function")
        return RatFn(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return other / self

    def __pow__(self, k: int):
        if k < 0:
            return RatFn(self.den ** (-k), self.num ** (-k))
        return RatFn._raw(self.num**k, self.den**k)

    def derive(self, k: int = 1) -> "RatFn":
        out = self
        for _ in range(k):
            n, d = out.num, out.den
            if d.degree == 0:
                out = RatFn._raw(n.derive(), POLY_ONE)
            else:
                out = RatFn(n.derive() * d - n * d.derive(), d * d)
        return out

    def __call__(self, x):
        d = self.den(x)
        if not d:
            raise ZeroDenominator("evaluation at a pole")
        return self.num(x) / d

    def __eq__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        if self.den.degree == 0:
            return hash(self.num)
        return hash(("RatFn", self.num, self.den))

    def __bool__(self):
        return not self.num.is_zero()

    def __repr__(self):
        return f"RatFn({self.to_str()})"

    def to_str(self, var: str = "x") -> str:
        if self.den.degree == 0:
            return self.num.to_str(var)
        return f"({self.num.to_str(var)})/({self.den.to_str(var)})"


def _as_poly(value) -> Poly:
    if isinstance(value, Poly):
        return value
    if isinstance(value, RatFn):
        return value.as_poly()
    return Poly.const(value)


def ratfn_reduce(num: Poly, den: Poly) -> RatFn:
    return RatFn(num, den)


def x_power(k: int) -> RatFn:
    """``x**k`` as a rational function, ``k`` any integer."""
    if k >= 0:
        return RatFn._raw(Poly.monomial(k), POLY_ONE)
    return RatFn._raw(POLY_ONE, Poly.monomial(-k))


def linear_power(c, k: int) -> RatFn:
    """``(x - c)**k`` for integer ``k``."""
    base = Poly.linear(c)
    if k >= 0:
        return RatFn._raw(base**k, POLY_ONE)
    return RatFn._raw(POLY_ONE, base ** (-k))
