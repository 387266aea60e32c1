import csv
import io
import json

import pytest

from spectralops import laguerre_type as lt
from spectralops.algebra import Poly
from spectralops.cli import main
from spectralops.verify import CHECK_SOURCES, Config, run, to_json


def _run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def mutated_d(monkeypatch):
    original = lt.d_coeff

    def broken(i, alpha):
        d = original(i, alpha)
        return d + Poly.x() if (i, alpha) == (2, 1) else d

    monkeypatch.setattr(lt, "d_coeff", broken)
    lt.op_higher.cache_clear()
    yield
    monkeypatch.undo()
    lt.op_higher.cache_clear()


def test_equiv_laguerre_passes(capsys):
    code, out, err = _run(capsys, "verify", "equiv", "--family", "laguerre", "--alpha-max", "4")
    doc = json.loads(out)
    assert code == 0
    assert doc["summary"]["fail"] == 0
    reprs = {c["params"]["repr"] for c in doc["cases"] if c["check"] == "equiv"}
    assert len(reprs) == 9  # every tag against the reference
    assert err.strip().endswith("0 failed")


def test_gram_report(capsys):
    code, out, _ = _run(capsys, "verify", "gram", "--family", "laguerre", "--alpha", "0", "--mass", "1", "--n-max", "5")
    assert code == 0
    (case,) = [c for c in json.loads(out)["cases"] if c["params"]["nmax"] == 5]
    assert case["detail"]["diagonal"] == ["2", "6", "12", "20", "30", "42"]


def test_export_bessel_coeffs(capsys):
    code, out, _ = _run(capsys, "export", "coeffs", "--family", "bessel", "--alpha", "0")
    assert code == 0
    assert [r["value"] for r in json.loads(out)["tables"]["A"]] == ["9", "-9", "2", "1"]


def test_export_laguerre_d_table(capsys):
    code, out, _ = _run(capsys, "export", "coeffs", "--family", "laguerre", "--alpha", "0")
    rows = json.loads(out)["tables"]["d"]
    assert [r["coeffs"] for r in rows] == [["0", "-2"], ["0", "6", "-1"], ["0", "-4", "2"], ["0", "0", "-1"]]
    assert len(json.loads(out)["tables"]["b_poly"]) == 2


def test_export_bessel_alpha1_and_csv(capsys):
    code, out, _ = _run(capsys, "export", "coeffs", "--family", "bessel", "--alpha", "1", "--format", "csv")
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["table", "index", "entries"]
    assert len(rows) == 7 and rows[-1][2] == "1"


def test_export_jacobi_needs_beta(capsys):
    code, _, err = _run(capsys, "export", "coeffs", "--family", "jacobi", "--alpha", "0")
    assert code == 2
    assert "beta" in err
    code, out, _ = _run(capsys, "export", "coeffs", "--family", "jacobi", "--alpha", "0", "--beta", "1/2")
    assert code == 0 and json.loads(out)["beta"] == "1/2"


@pytest.mark.parametrize(
    "argv",
    [
        ["verify", "eigen", "--family", "bessel", "--alpha", "3", "--truncation", "5"],
        ["verify", "eigen", "--beta", "-1"],
        ["verify", "gram", "--mass=-1/2"],
        ["verify", "symmetry", "--family", "bessel"],
        ["export", "coeffs", "--family", "laguerre", "--alpha", "-1"],
    ],
)
def test_config_errors_exit_2(capsys, argv):
    code, _, err = _run(capsys, *argv)
    assert code == 2
    assert "configuration error" in err


def test_bad_rational_flag_exits_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["verify", "eigen", "--beta", "1.5"])
    assert exc.value.code == 2


def test_reports_are_byte_identical(capsys, tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    argv = ["verify", "symmetry", "--alpha", "1", "--seed", "7"]
    assert main(argv + ["--out", str(a)]) == 0
    assert main(argv + ["--out", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()
    doc = json.loads(a.read_text())
    assert doc["config"]["seed"] == 7
    assert doc["timing"] == {"recorded": False}


def test_seed_changes_random_cases():
    one = run(Config("symmetry", families=("laguerre",), alpha=0, mass=1, seed=1))
    two = run(Config("symmetry", families=("laguerre",), alpha=0, mass=1, seed=2))
    assert one["summary"] == two["summary"]
    assert to_json(one) != to_json(two)


def test_timing_is_opt_in(capsys):
    code, out, _ = _run(capsys, "verify", "identities", "--family", "bessel", "--alpha", "0", "--timing")
    doc = json.loads(out)
    assert code == 0
    assert doc["timing"]["recorded"] is True
    assert all("seconds" in c for c in doc["cases"])


def test_csv_cases(capsys):
    code, out, _ = _run(capsys, "verify", "eigen", "--family", "jacobi", "--alpha", "0", "--format", "csv")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == 0 and rows
    assert {r["outcome"] for r in rows} == {"pass"}
    assert all(r["family"] == "jacobi" for r in rows)


def test_every_check_id_documented():
    doc = run(Config("all", alpha=0, n_max=2))
    assert set(doc["check_sources"]) == {c["check"] for c in doc["cases"]}
    assert set(doc["check_sources"]) <= set(CHECK_SOURCES)


def test_mutation_flips_to_failure(capsys, mutated_d):
    code, out, _ = _run(capsys, "verify", "equiv", "--family", "laguerre", "--alpha", "1")
    doc = json.loads(out)
    assert code == 1
    failed = [c for c in doc["cases"] if c["outcome"] == "fail"]
    assert failed
    for c in failed:
        assert c["witness"]
        assert c["witness"] != {"difference": {}}


def test_computation_error_becomes_failure(capsys, monkeypatch):
    def boom(*_a, **_k):
        raise RuntimeError("synthetic")

    monkeypatch.setattr(lt, "op_second_weighted", boom)
    code, out, _ = _run(capsys, "verify", "equiv", "--family", "laguerre", "--alpha", "0")
    assert code == 1
    bad = [c for c in json.loads(out)["cases"] if c["outcome"] == "fail"]
    assert bad and all("synthetic" in c["witness"]["error"] for c in bad)
