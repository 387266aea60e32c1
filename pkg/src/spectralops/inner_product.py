"""Exact Laguerre-weight scalar product with a point mass at the origin.

``(f, g) = int_0^inf f g x^alpha e^{-x}/alpha! dx + N f(0) g(0)``.  The
integral is evaluated from the moments ``(alpha+k)!/alpha! = (alpha+1)_k``,
so no quadrature is involved.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .algebra import Poly, pochhammer
from .errors import InvalidParameter
from .laguerre_type import _check_alpha, eigenvalue_combined, lag_type_poly, op_combined
from .operators import apply_to_poly
from .rational import ZERO, as_q


@dataclass(frozen=True)
class WeightParams:
    alpha: int
    N: object

    def __post_init__(self):
        _check_alpha(self.alpha)
        object.__setattr__(self, "N", as_q(self.N))
        if self.N < 0:
            raise InvalidParameter("point mass N must be nonnegative")


def moment(k: int, alpha):
    return pochhammer(as_q(alpha) + 1, k)


def inner(f: Poly, g: Poly, alpha, N) -> object:
    w = WeightParams(alpha, N)
    prod = f * g
    total = ZERO
    for k, c in enumerate(prod.coeffs):
        if c:
            total += c * moment(k, w.alpha)
    return total + w.N * f(0) * g(0)


def symmetry_defect(f: Poly, g: Poly, alpha: int, N) -> object:
    """(L f, g) - (f, L g) for the combined Laguerre-type operator."""
    op = op_combined(alpha, N)
    lf = apply_to_poly(op, f)
    lg = apply_to_poly(op, g)
    # polynomial coefficients guarantee polynomial images
    assert lf.is_polynomial() and lg.is_polynomial()
    return inner(lf.num, g, alpha, N) - inner(f, lg.num, alpha, N)


@dataclass
class GramReport:
    size: int
    entries: list
    diagonal_norms: list = field(default_factory=list)
    off_diagonal_nonzero: list = field(default_factory=list)

    @property
    def orthogonal(self) -> bool:
        return not self.off_diagonal_nonzero

    @property
    def positive_diagonal(self) -> bool:
        return all(h > 0 for h in self.diagonal_norms)


def gram(alpha: int, N, nmax: int) -> GramReport:
    if nmax < 0:
        raise InvalidParameter("nmax must be nonnegative")
    polys = [lag_type_poly(n, alpha, N) for n in range(nmax + 1)]
    size = nmax + 1
    entries = [[ZERO] * size for _ in range(size)]
    for i in range(size):
        for j in range(i, size):
            v = inner(polys[i], polys[j], alpha, N)
            entries[i][j] = entries[j][i] = v
    bad = [(i, j, entries[i][j]) for i in range(size) for j in range(i + 1, size) if entries[i][j]]
    return GramReport(size, entries, [entries[i][i] for i in range(size)], bad)


def eigenvalues_strictly_increasing(alpha: int, N, nmax: int) -> bool:
    lams = [eigenvalue_combined(n, alpha, N) for n in range(nmax + 1)]
    return all(a < b for a, b in zip(lams, lams[1:]))
