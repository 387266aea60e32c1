"""Acceptance criteria, one test each; all comparisons are exact (tolerance zero)."""

import itertools
import json
import random

from spectralops import classical as cl
from spectralops import laguerre_type as lt
from spectralops.algebra import Poly
from spectralops.bessel_type import (
    A_coeff,
    BesselHigherRepr,
    delta_power_identity,
    op_bessel_higher,
    residual_bessel,
)
from spectralops.cli import main
from spectralops.inner_product import eigenvalues_strictly_increasing, gram, symmetry_defect
from spectralops.jacobi_type import (
    JacHigherRepr,
    jacobi_eigenvalues,
    op_jacobi_higher,
    op_jacobi_second,
    residual_jacobi,
)
from spectralops.laguerre_type import HigherRepr, identity_3_6, identity_3_7, identity_3_9, op_higher, residual
from spectralops.operators import CanonicalOperator, apply_to_poly
from spectralops.rational import Q

x = Poly.x()
LAG_N = [Q(0), Q(1), Q(1, 2), Q(7, 3)]
JAC_BETAS = [Q(0), Q(1, 2), Q(1), Q(5, 3)]


def test_criterion_01_laguerre_representations_identical(acceptance):
    bad = [
        (a, r, s)
        for a in range(7)
        for r, s in itertools.combinations(HigherRepr, 2)
        if op_higher(a, r) != op_higher(a, s)
    ]
    acceptance(1, "Laguerre-type: ten representations pairwise identical, alpha 0..6", not bad, f"{len(bad)} differing pairs")


def test_criterion_02_alpha0_anchor(acceptance):
    anchor = -1 * (x @ CanonicalOperator({4: x, 3: Poly([4, -2]), 2: Poly([-6, 1]), 1: 2}))
    ok = all(op_higher(0, r) == anchor for r in HigherRepr)
    acceptance(2, "alpha=0 operator equals -x[xD^4+(4-2x)D^3-(6-x)D^2+2D]", ok)


def test_criterion_03_laguerre_eigen_identities(acceptance):
    bad = [
        (kind, n, a, N)
        for kind in lt.RESIDUAL_KINDS
        for a in range(5)
        for n in range(11)
        for N in LAG_N
        if not residual(kind, n, a, N).is_zero()
    ]
    acceptance(3, "Laguerre-type eigen-identities: zero residuals, n<=10, alpha<=4", not bad, f"{len(bad)} nonzero")


def test_criterion_04_operator_identities(acceptance):
    bad = []
    for a in range(6):
        lhs, rhs = identity_3_6(a)
        if lhs != rhs:
            bad.append(("product", a))
        for j in range(1, 7):
            lhs, rhs = identity_3_7(a, j)
            if lhs != rhs:
                bad.append(("commutation", a, j))
    for j in range(1, 7):
        first, middle, last = identity_3_9(j)
        if not first == middle == last:
            bad.append(("lowering", j))
    acceptance(4, "second-order operator product/commutation identities, j<=6, alpha<=5", not bad)


def test_criterion_05_symmetry(acceptance):
    rng = random.Random(20240601)

    def rand_poly():
        deg = rng.randint(0, 8)
        return Poly([Q(rng.randint(-20, 20), rng.randint(1, 9)) for _ in range(deg + 1)])

    checked, bad = 0, []
    for a in range(5):
        for N in (Q(0), Q(1), Q(1, 3), Q(9, 4)):
            for _ in range(50):
                f, g = rand_poly(), rand_poly()
                checked += 1
                if symmetry_defect(f, g, a, N) != 0:
                    bad.append((a, N))
    acceptance(5, "combined operator symmetric for the point-mass product", not bad and checked == 1000, f"{checked} pairs")


def test_criterion_06_orthogonality(acceptance):
    ok = True
    for a in range(4):
        for N in (Q(1), Q(1, 2)):
            r = gram(a, N, 10)
            ok &= r.orthogonal and r.positive_diagonal and eigenvalues_strictly_increasing(a, N, 10)
    h1 = gram(0, 1, 1).diagonal_norms[1]
    acceptance(6, "Gram matrices diagonal with positive norms, nmax=10; h_1=6 at (0,1)", ok and h1 == 6, f"h_1={h1}")


def _leading_ratio(op: CanonicalOperator, p: Poly):
    image = apply_to_poly(op, p).num
    return image.coeffs[p.degree] / p.coeffs[-1] if image.degree == p.degree else None


def test_criterion_07_jacobi_type(acceptance):
    bad = []
    for a in range(5):
        for b in JAC_BETAS:
            ref = op_jacobi_higher(a, b, JacHigherRepr.direct)
            bad += [("equiv", a, b, r) for r in JacHigherRepr if op_jacobi_higher(a, b, r) != ref]
            for n in range(9):
                for N in (Q(0), Q(1), Q(3, 7)):
                    if not residual_jacobi(n, a, b, N).is_zero():
                        bad.append(("residual", n, a, b, N))
                # eigenvalues read off the leading coefficient of the image of x^n
                lam2, lamh = jacobi_eigenvalues(n, a, b)
                mono = x**n
                if n and _leading_ratio(op_jacobi_second(a, b), mono) != lam2:
                    bad.append(("lambda2", n, a, b))
                if n and _leading_ratio(ref, mono) != lamh:
                    bad.append(("lambda_high", n, a, b))
                if n == 0 and (lam2, lamh) != (0, 0):
                    bad.append(("lambda0", a, b))
    acceptance(7, "Jacobi-type: five representations identical, zero residuals, eigenvalues exact", not bad, f"{len(bad)} problems")


def test_criterion_08_bessel_type(acceptance):
    bad = []
    for a in range(7):
        ref = op_bessel_higher(a, BesselHigherRepr.explicit)
        bad += [("equiv", a, r) for r in BesselHigherRepr if op_bessel_higher(a, r) != ref]
        if A_coeff(2 * a + 4, a) != 1:
            bad.append(("A_top", a))
        if not delta_power_identity(a):
            bad.append(("shift identities", a))
    if [A_coeff(i, 0) for i in range(1, 5)] != [9, -9, 2, 1]:
        bad.append("A^0")
    for a in range(4):
        K = 2 * a + 12
        for l2 in (Q(1), Q(4), Q(9, 4)):
            for M in (Q(0), Q(1), Q(3, 5)):
                for kind in ("full", "K_component"):
                    res = residual_bessel(kind, a, M, l2, K)
                    if not res.is_zero() or res.valid_up_to < K - a - 2:
                        bad.append((kind, a, l2, M))
    acceptance(8, "Bessel-type: three forms identical, A^0=(9,-9,2,1), zero residuals in window", not bad, f"{len(bad)} problems")


def test_criterion_09_classical_identities(acceptance):
    bad = []
    for g in range(7):
        for n in range(9):
            checks = [cl.laguerre_equation, cl.exp_weighted_derivative, cl.derivative_shift, cl.parameter_shift]
            if g > 0:
                checks += [cl.power_weighted_derivative, cl.x_multiplication]
            bad += [(f.__name__, n, g) for f in checks if not cl.is_zero(f(n, g))]
        for l2 in (Q(1), Q(4), Q(9, 4)):
            series = [cl.bessel_equation(g, l2, 10), cl.bessel_delta_lowering(g, l2, 10)]
            if g >= 1:
                series.append(cl.bessel_delta_weighted(g, l2, 10))
            bad += [("bessel", g, l2) for s in series if not s.is_zero() or s.valid_up_to < 9]
    acceptance(9, "classical Laguerre and Bessel identities, n<=8, gamma<=6", not bad, f"{len(bad)} nonzero")


def _mutated_run(capsys, i, alpha, argv):
    original = lt.d_coeff

    def broken(j, a):
        d = original(j, a)
        return d + Poly.x() if (j, a) == (i, alpha) else d

    lt.d_coeff = broken
    lt.op_higher.cache_clear()
    try:
        code = main(argv)
        out = capsys.readouterr().out
    finally:
        lt.d_coeff = original
        lt.op_higher.cache_clear()
    return code, json.loads(out)


def test_criterion_10_cli_contract(capsys, acceptance):
    clean = main(["verify", "all"])
    clean_doc = json.loads(capsys.readouterr().out)
    ok = clean == 0 and clean_doc["summary"]["fail"] == 0
    notes = [f"clean: exit {clean}, {clean_doc['summary']['pass']} pass"]
    mutations = [(2, 1, ["verify", "all"]), (1, 0, ["verify", "equiv"]), (6, 2, ["verify", "equiv"])]
    for i, alpha, argv in mutations:
        code, doc = _mutated_run(capsys, i, alpha, argv)
        failed = [c for c in doc["cases"] if c["outcome"] == "fail"]
        ok &= code == 1 and bool(failed) and all(c.get("witness") for c in failed)
        notes.append(f"d_{i}^{alpha}+x: exit {code}, {len(failed)} fail")
    acceptance(10, "CLI: verify all exits 0; a corrupted coefficient gives exit 1 with witnesses", ok, "; ".join(notes))
