"""Exact operator calculus for Laguerre-, Jacobi- and Bessel-type differential operators."""

__version__ = "0.1.0"

from .algebra import Poly, RatFn, pochhammer, poly_derive, poly_mul, ratfn_reduce  # noqa: E402
from .operators import (  # noqa: E402
    CanonicalOperator,
    Derive,
    EvenLaurentSeries,
    MulExp,
    MulPoly,
    MulPow,
    add,
    apply_to_even_series,
    apply_to_poly,
    compose,
    normalize,
    op_equal,
    scale,
)
from .rational import BACKEND, Q  # noqa: E402

__all__ = [
    "BACKEND",
    "CanonicalOperator",
    "Derive",
    "EvenLaurentSeries",
    "MulExp",
    "MulPoly",
    "MulPow",
    "Poly",
    "Q",
    "RatFn",
    "add",
    "apply_to_even_series",
    "apply_to_poly",
    "compose",
    "normalize",
    "op_equal",
    "pochhammer",
    "poly_derive",
    "poly_mul",
    "ratfn_reduce",
    "scale",
]
