"""Verification case grids and report assembly.

Each check produces ``VerificationCase`` records.  Any exception raised while
computing a case is caught and recorded as a failure with the error as the
witness; the runner itself never crashes on a computation error.
"""

from __future__ import annotations

import csv
import io
import json
import random
import time
from dataclasses import dataclass
from typing import Callable, Iterator

from . import __version__
from . import bessel_type as bt
from . import classical as cl
from . import jacobi_type as jt
from . import laguerre_type as lt
from .algebra import Poly, RatFn, pochhammer
from .errors import ConfigError
from .inner_product import eigenvalues_strictly_increasing, gram, symmetry_defect
from .operators import CanonicalOperator, EvenLaurentSeries, apply_to_poly, op_diff
from .rational import Q, as_q, q_str
from .special import jacobi

FAMILIES = ("laguerre", "jacobi", "bessel")
CHECKS = ("equiv", "eigen", "symmetry", "gram", "identities")

#: check-id -> the identity it exercises (the numeric part is the reference label)
CHECK_SOURCES = {
    "equiv": "all representations of the higher-order operator normalize to one canonical form",
    "anchor:3.1": "alpha=0 Laguerre-type operator -x[xD^4+(4-2x)D^3-(6-x)D^2+2D]",
    "second:2.5": "weighted word e^x x^-a D e^-x x^(a+1) D equals xD^2+(a+1-x)D",
    "second:2.2": "weighted and expanded Jacobi second-order operator agree",
    "second:5.5": "weighted and expanded Bessel second-order operator agree",
    "eigen:1.7": "combined Laguerre-type eigen-equation on L_n^{a,N}",
    "eigen:1.11": "higher-order Laguerre-type equation on T_n",
    "eigen:1.12": "mixed equation coupling T_n and L_n",
    "eigen:2.8": "second-order component on T_n",
    "eigen:2.9": "higher-order component on L_n",
    "eigen:2.1": "combined Jacobi-type eigen-equation on P_n^{a,b,0,N}",
    "eigen:2.1R": "higher-order Jacobi-type equation on R_n alone (inferred split)",
    "eigenvalues:2.4": "Jacobi-type eigenvalues n(n+a+b+1) and (n)_{a+2}(n+b)_{a+2}",
    "eigen:5.4": "combined Bessel-type eigen-equation on J^{a,M}",
    "eigen:5.6": "higher-order Bessel-type equation on K^a",
    "symmetry:4.2": "(Lf, g) = (f, Lg) for the point-mass scalar product",
    "gram:4.4": "Laguerre-type polynomials are orthogonal with positive norms",
    "identity:3.6": "prod (L2^{a+1}-j) = prod (L2^{2j-1}-j)",
    "identity:3.7": "commutation of shifted second-order Laguerre factors",
    "identity:3.9": "commutation with L2^{-1} = x(D^2-D)",
    "identity:5.7": "delta^{2b} x^{2b} = [D^2+(2b+1)/x D]^b",
    "identity:5.8": "x^2 [D^2+(2a+5)/x D] x^-2 = D^2+(2a+1)/x D-(4a+4)/x^2",
    "coeffs:5.10": "explicit coefficients A_i of the Bessel-type operator",
    "identity:1.8": "classical Laguerre differential equation",
    "identity:2.7": "weighted derivative rules for Laguerre polynomials",
    "identity:2.10": "derivative, parameter-shift and x-multiplication rules",
    "identity:5.3": "classical Bessel differential equation (series)",
    "identity:5.9": "delta lowering rules for Bessel series",
}

DEFAULT_SEED = 20240601


class Passed:
    """Successful outcome that still carries reportable values."""

    def __init__(self, detail: dict):
        self.detail = detail


@dataclass
class VerificationCase:
    family: str
    check: str
    params: dict
    outcome: str = "pass"
    witness: object = None
    detail: dict | None = None
    seconds: float | None = None

    def key(self) -> tuple:
        return (self.family, self.check, json.dumps(self.params, sort_keys=True))

    def to_dict(self, timing: bool = False) -> dict:
        d = {"family": self.family, "check": self.check, "params": self.params, "outcome": self.outcome}
        if self.outcome == "fail":
            d["witness"] = self.witness
        if self.detail is not None:
            d["detail"] = self.detail
        if timing:
            d["seconds"] = self.seconds
        return d


@dataclass
class Config:
    command: str
    families: tuple = FAMILIES
    alpha: int | None = None
    alpha_max: int | None = None
    beta: object = None
    mass: object = None
    lambda2: object = None
    n_max: int | None = None
    truncation: int | None = None
    seed: int = DEFAULT_SEED
    timing: bool = False

    def alphas(self, default_max: int) -> list[int]:
        if self.alpha is not None:
            return [self.alpha]
        top = default_max if self.alpha_max is None else self.alpha_max
        return list(range(top + 1))

    def masses(self, default: list) -> list:
        return [as_q(self.mass)] if self.mass is not None else [as_q(m) for m in default]

    def betas(self, default: list) -> list:
        return [as_q(self.beta)] if self.beta is not None else [as_q(b) for b in default]

    def lambdas(self, default: list) -> list:
        return [as_q(self.lambda2)] if self.lambda2 is not None else [as_q(v) for v in default]

    def nmax(self, default: int) -> int:
        return default if self.n_max is None else self.n_max

    def echo(self) -> dict:
        out = {"command": self.command, "families": list(self.families), "seed": self.seed}
        for name in ("alpha", "alpha_max", "n_max", "truncation"):
            v = getattr(self, name)
            if v is not None:
                out[name] = v
        for name in ("beta", "mass", "lambda2"):
            v = getattr(self, name)
            if v is not None:
                out[name] = q_str(v)
        return out

    def validate(self) -> None:
        for name in ("alpha", "alpha_max", "n_max"):
            v = getattr(self, name)
            if v is not None and v < 0:
                raise ConfigError(f"--{name.replace('_', '-')} must be nonnegative")
        if self.beta is not None and as_q(self.beta) <= -1:
            raise ConfigError("--beta must exceed -1")
        if self.mass is not None and as_q(self.mass) < 0:
            raise ConfigError("--mass must be nonnegative")
        if self.lambda2 is not None and as_q(self.lambda2) < 0:
            raise ConfigError("--lambda2 must be nonnegative")
        if self.truncation is not None and "bessel" in self.families:
            worst = max(self.alphas(3))
            if self.truncation < 2 * worst + 5:
                raise ConfigError(f"--truncation {self.truncation} < 2*alpha+5 = {2 * worst + 5}")


# -- witnesses ---------------------------------------------------------------


def _poly_json(p: Poly) -> list[str]:
    return [q_str(c) for c in p.coeffs]


def _render(value):
    """JSON-friendly rendering of a residual or coefficient."""
    if isinstance(value, Poly):
        return {"poly": _poly_json(value)}
    if isinstance(value, RatFn):
        if value.is_polynomial():
            return {"poly": _poly_json(value.num)}
        return {"num": _poly_json(value.num), "den": _poly_json(value.den)}
    if isinstance(value, EvenLaurentSeries):
        return {
            "even_series": {str(2 * k): q_str(a) for k, a in sorted(value.coeffs.items())},
            "valid_through_power": 2 * value.valid_up_to,
        }
    if isinstance(value, CanonicalOperator):
        return {str(i): _render(c) for i, c in sorted(value.terms.items())}
    if hasattr(value, "denominator"):
        return q_str(value)
    return str(value)


def _op_witness(a: CanonicalOperator, b: CanonicalOperator) -> dict | None:
    diff = op_diff(a, b)
    if not diff:
        return None
    return {"difference": {str(i): _render(c) for i, c in sorted(diff.items())}}


def _zero_witness(value) -> dict | None:
    if cl.is_zero(value):
        return None
    return {"residual": _render(value)}


def _p(**kwargs) -> dict:
    return {k: v if isinstance(v, (int, str)) else q_str(v) for k, v in kwargs.items()}


# -- case generators -----------------------------------------------------------
# Each yields (family, check, params, thunk); thunk returns None on success or a
# witness on failure.

CaseSpec = tuple  # (family, check, params, Callable[[], object])


def _laguerre_equiv(cfg: Config) -> Iterator[CaseSpec]:
    ref = lt.HigherRepr.koekoek
    for a in cfg.alphas(6):
        for r in lt.HigherRepr:
            if r is ref:
                continue
            yield ("laguerre", "equiv", _p(alpha=a, repr=r.value, reference=ref.value),
                   lambda a=a, r=r: _op_witness(lt.op_higher(a, r), lt.op_higher(a, ref)))
        yield ("laguerre", "second:2.5", _p(alpha=a),
               lambda a=a: _op_witness(lt.op_second_weighted(a), lt.op_second(a)))
    x = Poly.x()
    anchor = -1 * (x @ CanonicalOperator({4: x, 3: Poly([4, -2]), 2: Poly([-6, 1]), 1: 2}))
    for r in lt.HigherRepr:
        yield ("laguerre", "anchor:3.1", _p(alpha=0, repr=r.value),
               lambda r=r: _op_witness(lt.op_higher(0, r), anchor))


def _jacobi_equiv(cfg: Config) -> Iterator[CaseSpec]:
    ref = jt.JacHigherRepr.direct
    for a in cfg.alphas(4):
        for b in cfg.betas([0, "1/2", 1, "5/3"]):
            for r in jt.JacHigherRepr:
                if r is ref:
                    continue
                yield ("jacobi", "equiv", _p(alpha=a, beta=b, repr=r.value, reference=ref.value),
                       lambda a=a, b=b, r=r: _op_witness(jt.op_jacobi_higher(a, b, r), jt.op_jacobi_higher(a, b, ref)))
            yield ("jacobi", "second:2.2", _p(alpha=a, beta=b),
                   lambda a=a, b=b: _op_witness(jt.op_jacobi_second_weighted(a, b), jt.op_jacobi_second(a, b)))


def _bessel_equiv(cfg: Config) -> Iterator[CaseSpec]:
    ref = bt.BesselHigherRepr.nested_delta
    for a in cfg.alphas(6):
        for r in bt.BesselHigherRepr:
            if r is ref:
                continue
            yield ("bessel", "equiv", _p(alpha=a, repr=r.value, reference=ref.value),
                   lambda a=a, r=r: _op_witness(bt.op_bessel_higher(a, r), bt.op_bessel_higher(a, ref)))
        yield ("bessel", "second:5.5", _p(alpha=a),
               lambda a=a: _op_witness(bt.op_bessel_second_weighted(a), bt.op_bessel_second(a)))


def _bessel_coeffs(cfg: Config) -> Iterator[CaseSpec]:
    def anchor():
        got = [bt.A_coeff(i, 0) for i in range(1, 5)]
        return None if got == [9, -9, 2, 1] else {"A": [q_str(v) for v in got]}

    yield ("bessel", "coeffs:5.10", _p(alpha=0, expect="9,-9,2,1"), anchor)
    for a in cfg.alphas(6):
        def top(a=a):
            v = bt.A_coeff(2 * a + 4, a)
            return None if v == 1 else {"A_top": q_str(v)}

        yield ("bessel", "coeffs:5.10", _p(alpha=a, expect="A_top=1"), top)


def _laguerre_eigen(cfg: Config) -> Iterator[CaseSpec]:
    kinds = {"eq_1_7": "eigen:1.7", "eq_1_11": "eigen:1.11", "eq_1_12": "eigen:1.12", "eq_2_8": "eigen:2.8", "eq_2_9": "eigen:2.9"}
    for a in cfg.alphas(4):
        for n in range(cfg.nmax(10) + 1):
            for kind, check in kinds.items():
                masses = cfg.masses([0, 1, "1/2", "7/3"]) if kind == "eq_1_7" else [None]
                for N in masses:
                    params = _p(alpha=a, n=n) if N is None else _p(alpha=a, n=n, N=N)
                    yield ("laguerre", check, params,
                           lambda kind=kind, n=n, a=a, N=N: _zero_witness(lt.residual(kind, n, a, N or 0)))


def _jacobi_eigen(cfg: Config) -> Iterator[CaseSpec]:
    for a in cfg.alphas(4):
        for b in cfg.betas([0, "1/2", 1, "5/3"]):
            for n in range(cfg.nmax(8) + 1):
                for N in cfg.masses([0, 1, "3/7"]):
                    yield ("jacobi", "eigen:2.1", _p(alpha=a, beta=b, n=n, N=N),
                           lambda a=a, b=b, n=n, N=N: _zero_witness(jt.residual_jacobi(n, a, b, N)))
                yield ("jacobi", "eigen:2.1R", _p(alpha=a, beta=b, n=n),
                       lambda a=a, b=b, n=n: _zero_witness(jt.residual_jacobi_R(n, a, b)))

                def eig(a=a, b=b, n=n):
                    got = jt.jacobi_eigenvalues(n, a, b)
                    want = (n * (n + a + b + 1), pochhammer(n, a + 2) * pochhammer(n + b, a + 2))
                    # the classical equation independently pins the second-order eigenvalue
                    p = jacobi(n, a, b)
                    direct = apply_to_poly(jt.op_jacobi_second(a, b), p) - p * got[0]
                    if got == want and direct.is_zero():
                        return None
                    return {"got": [q_str(v) for v in got], "want": [q_str(v) for v in want]}

                yield ("jacobi", "eigenvalues:2.4", _p(alpha=a, beta=b, n=n), eig)


def _bessel_eigen(cfg: Config) -> Iterator[CaseSpec]:
    for a in cfg.alphas(3):
        K = cfg.truncation if cfg.truncation is not None else 2 * a + 12
        for l2 in cfg.lambdas([1, 4, "9/4"]):
            for M in cfg.masses([0, 1, "3/5"]):
                yield ("bessel", "eigen:5.4", _p(alpha=a, M=M, lambda2=l2, K=K),
                       lambda a=a, M=M, l2=l2, K=K: _series_check(bt.residual_bessel("full", a, M, l2, K), K - a - 2))
            yield ("bessel", "eigen:5.6", _p(alpha=a, lambda2=l2, K=K),
                   lambda a=a, l2=l2, K=K: _series_check(bt.residual_bessel("K_component", a, 0, l2, K), K - a - 2))


def _series_check(res: EvenLaurentSeries, expected_valid: int):
    if res.valid_up_to < expected_valid:
        return {"validity": 2 * res.valid_up_to, "expected": 2 * expected_valid}
    return _zero_witness(res)


def _laguerre_symmetry(cfg: Config) -> Iterator[CaseSpec]:
    for a in cfg.alphas(4):
        for N in cfg.masses([0, 1, "1/3", "9/4"]):
            def run(a=a, N=N):
                rng = random.Random(f"{cfg.seed}:{a}:{q_str(N)}")
                for t in range(50):
                    f = _random_poly(rng, rng.randint(0, 8))
                    g = _random_poly(rng, rng.randint(0, 8))
                    d = symmetry_defect(f, g, a, N)
                    if d:
                        return {"pair": t, "f": _poly_json(f), "g": _poly_json(g), "defect": q_str(d)}
                return None

            yield ("laguerre", "symmetry:4.2", _p(alpha=a, N=N, pairs=50, seed=cfg.seed), run)


def _random_poly(rng: random.Random, deg: int) -> Poly:
    return Poly([Q(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(deg)] + [Q(rng.choice([-3, -2, -1, 1, 2, 3]))])


def _laguerre_gram(cfg: Config) -> Iterator[CaseSpec]:
    nmax = cfg.nmax(10)
    for a in cfg.alphas(3):
        for N in cfg.masses([1, "1/2"]):
            def run(a=a, N=N):
                rep = gram(a, N, nmax)
                if rep.orthogonal and rep.positive_diagonal and eigenvalues_strictly_increasing(a, N, nmax):
                    return Passed({"diagonal": [q_str(h) for h in rep.diagonal_norms]})
                return {
                    "off_diagonal": [[i, j, q_str(v)] for i, j, v in rep.off_diagonal_nonzero[:5]],
                    "diagonal": [q_str(h) for h in rep.diagonal_norms],
                }

            yield ("laguerre", "gram:4.4", _p(alpha=a, N=N, nmax=nmax), run)

    def h1():
        h = gram(0, 1, 1).diagonal_norms[1]
        return None if h == 6 else {"h1": q_str(h)}

    yield ("laguerre", "gram:4.4", _p(alpha=0, N="1", nmax=1, expect="h1=6"), h1)


def _laguerre_identities(cfg: Config) -> Iterator[CaseSpec]:
    for a in cfg.alphas(6):
        yield ("laguerre", "identity:3.6", _p(alpha=a), lambda a=a: _op_witness(*lt.identity_3_6(a)))
    for a in cfg.alphas(5):
        for j in range(1, 7):
            yield ("laguerre", "identity:3.7", _p(alpha=a, j=j), lambda a=a, j=j: _op_witness(*lt.identity_3_7(a, j)))
    for j in range(1, 7):
        def three(j=j):
            first, middle, last = lt.identity_3_9(j)
            return _op_witness(first, middle) or _op_witness(middle, last)

        yield ("laguerre", "identity:3.9", _p(j=j), three)
    nmax = cfg.nmax(8)
    for n in range(nmax + 1):
        for g in range(7):
            yield ("laguerre", "identity:1.8", _p(n=n, gamma=g), lambda n=n, g=g: _zero_witness(cl.laguerre_equation(n, g)))
            yield ("laguerre", "identity:2.7", _p(n=n, gamma=g, line=1),
                   lambda n=n, g=g: _zero_witness(cl.exp_weighted_derivative(n, g)))
            yield ("laguerre", "identity:2.10", _p(n=n, gamma=g, line=1), lambda n=n, g=g: _zero_witness(cl.derivative_shift(n, g)))
            yield ("laguerre", "identity:2.10", _p(n=n, gamma=g, line=2), lambda n=n, g=g: _zero_witness(cl.parameter_shift(n, g)))
            if g >= 1:
                yield ("laguerre", "identity:2.7", _p(n=n, gamma=g, line=2),
                       lambda n=n, g=g: _zero_witness(cl.power_weighted_derivative(n, g)))
                yield ("laguerre", "identity:2.10", _p(n=n, gamma=g, line=3),
                       lambda n=n, g=g: _zero_witness(cl.x_multiplication(n, g)))


def _bessel_identities(cfg: Config) -> Iterator[CaseSpec]:
    for b in cfg.alphas(6):
        yield ("bessel", "identity:5.7", _p(beta=b), lambda b=b: _op_witness(*bt.identity_5_7(b)))
        yield ("bessel", "identity:5.8", _p(alpha=b), lambda b=b: _op_witness(*bt.identity_5_8(b)))
    K = cfg.truncation if cfg.truncation is not None else 12
    for g in range(7):
        for l2 in cfg.lambdas([1, 4, "9/4"]):
            yield ("bessel", "identity:5.3", _p(gamma=g, lambda2=l2, K=K),
                   lambda g=g, l2=l2: _zero_witness(cl.bessel_equation(g, l2, K)))
            yield ("bessel", "identity:5.9", _p(gamma=g, lambda2=l2, K=K, line=1),
                   lambda g=g, l2=l2: _zero_witness(cl.bessel_delta_lowering(g, l2, K)))
            if g >= 1:
                yield ("bessel", "identity:5.9", _p(gamma=g, lambda2=l2, K=K, line=2),
                       lambda g=g, l2=l2: _zero_witness(cl.bessel_delta_weighted(g, l2, K)))


GENERATORS: dict[tuple[str, str], list[Callable[[Config], Iterator[CaseSpec]]]] = {
    ("laguerre", "equiv"): [_laguerre_equiv],
    ("jacobi", "equiv"): [_jacobi_equiv],
    ("bessel", "equiv"): [_bessel_equiv, _bessel_coeffs],
    ("laguerre", "eigen"): [_laguerre_eigen],
    ("jacobi", "eigen"): [_jacobi_eigen],
    ("bessel", "eigen"): [_bessel_eigen],
    ("laguerre", "symmetry"): [_laguerre_symmetry],
    ("laguerre", "gram"): [_laguerre_gram],
    ("laguerre", "identities"): [_laguerre_identities],
    ("bessel", "identities"): [_bessel_identities],
}


def _run_one(spec: CaseSpec) -> VerificationCase:
    family, check, params, thunk = spec
    case = VerificationCase(family, check, params)
    t0 = time.perf_counter()
    try:
        witness = thunk()
    except Exception as exc:  # computation errors become failures, never crashes
        witness = {"error": f"{type(exc).__name__}: {exc}"}
    case.seconds = round(time.perf_counter() - t0, 6)
    if isinstance(witness, Passed):
        case.detail = witness.detail
    elif witness is not None:
        case.outcome = "fail"
        case.witness = witness
    return case


def collect(cfg: Config) -> list[CaseSpec]:
    checks = CHECKS if cfg.command == "all" else (cfg.command,)
    specs = []
    for check in checks:
        for family in cfg.families:
            for gen in GENERATORS.get((family, check), []):
                specs.extend(gen(cfg))
    return specs


def run(cfg: Config) -> dict:
    """Run every selected case and return the report document."""
    cfg.validate()
    specs = collect(cfg)
    if not specs:
        raise ConfigError(f"no cases for check {cfg.command!r} and families {list(cfg.families)}")
    t0 = time.perf_counter()
    cases = sorted((_run_one(s) for s in specs), key=VerificationCase.key)
    total = time.perf_counter() - t0
    n_fail = sum(c.outcome == "fail" for c in cases)
    report = {
        "version": __version__,
        "config": cfg.echo(),
        "cases": [c.to_dict(cfg.timing) for c in cases],
        "summary": {"pass": len(cases) - n_fail, "fail": n_fail},
        "timing": {"recorded": cfg.timing},
        "check_sources": {k: CHECK_SOURCES[k] for k in sorted({c.check for c in cases})},
    }
    if cfg.timing:
        report["timing"]["total_seconds"] = round(total, 6)
    return report


# -- coefficient export ------------------------------------------------------


def export_coeffs(family: str, alpha: int, beta=None) -> dict:
    if family not in FAMILIES:
        raise ConfigError(f"unknown family {family!r}")
    if alpha is None or alpha < 0:
        raise ConfigError("--alpha must be a nonnegative integer")
    doc: dict = {"family": family, "alpha": alpha, "tables": {}}
    if family == "laguerre":
        doc["tables"]["d"] = [{"i": i, "coeffs": _poly_json(lt.d_coeff(i, alpha))} for i in range(1, 2 * alpha + 5)]
        doc["tables"]["b_poly"] = [{"k": k, "coeffs": _poly_json(lt.b_poly(k, alpha))} for k in range(1, alpha + 3)]
    elif family == "bessel":
        doc["tables"]["A"] = [{"i": i, "value": q_str(bt.A_coeff(i, alpha))} for i in range(1, 2 * alpha + 5)]
    else:
        if beta is None:
            raise ConfigError("--beta is required for the jacobi family")
        if as_q(beta) <= -1:
            raise ConfigError("--beta must exceed -1")
        op = jt.op_jacobi_higher(alpha, beta)
        doc["beta"] = q_str(beta)
        doc["tables"]["coefficients"] = [{"i": i, "coeffs": _poly_json(c.num)} for i, c in sorted(op.terms.items())]
    return doc


def to_json(doc: dict) -> str:
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def cases_to_csv(report: dict) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["family", "check", "params", "outcome", "witness"])
    for c in report["cases"]:
        witness = json.dumps(c["witness"], sort_keys=True) if "witness" in c else ""
        w.writerow([c["family"], c["check"], json.dumps(c["params"], sort_keys=True), c["outcome"], witness])
    return buf.getvalue()


def coeffs_to_csv(doc: dict) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["table", "index", "entries"])
    for name, rows in doc["tables"].items():
        for row in rows:
            idx = row.get("i", row.get("k"))
            entries = row["coeffs"] if "coeffs" in row else [row["value"]]
            w.writerow([name, idx, " ".join(entries)])
    return buf.getvalue()
