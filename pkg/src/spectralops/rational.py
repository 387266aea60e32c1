"""Rational scalar backend.

``Q`` is the exact rational type used throughout the package.  By default it
is ``gmpy2.mpq`` when gmpy2 is importable; setting the environment variable
``SPECTRALOPS_BACKEND=python`` forces the pure-Python ``fractions.Fraction``
fallback.  The choice is made once, at import time.
"""

from __future__ import annotations

import os
from fractions import Fraction

_requested = os.environ.get("SPECTRALOPS_BACKEND", "gmpy2").strip().lower()

if _requested not in ("gmpy2", "python"):
    raise ImportError(f"SPECTRALOPS_BACKEND must be 'gmpy2' or 'python', got {_requested!r}")

BACKEND = "python"
Q = Fraction

if _requested == "gmpy2":
    try:
        import gmpy2

        Q = gmpy2.mpq
        BACKEND = "gmpy2"
    except ImportError:  # pragma: no cover - depends on environment
        pass

ZERO = Q(0)
ONE = Q(1)


def as_q(value) -> "Q":
    """Coerce an int, Fraction, mpq or ``"p/q"`` string to ``Q``."""
    if isinstance(value, str):
        return Q(Fraction(value.strip()))
    if isinstance(value, float):
        raise TypeError("floats are not accepted as exact rationals")
    if isinstance(value, Fraction) and Q is not Fraction:
        return Q(value.numerator, value.denominator)
    return Q(value)


def q_str(value) -> str:
    """Render a rational as ``"p"`` or ``"p/q"``."""
    value = as_q(value)
    num, den = int(value.numerator), int(value.denominator)
    return str(num) if den == 1 else f"{num}/{den}"


def is_integer(value) -> bool:
    return as_q(value).denominator == 1
