import os
import subprocess
import sys

import pytest

ARGV = ["verify", "eigen", "--alpha", "1", "--n-max", "4"]


def _cli(backend, *argv):
    env = dict(os.environ, SPECTRALOPS_BACKEND=backend)
    return subprocess.run([sys.executable, "-m", "spectralops", *argv], env=env, capture_output=True, timeout=300)


def _backend_name(backend):
    env = dict(os.environ, SPECTRALOPS_BACKEND=backend)
    code = "from spectralops.rational import BACKEND, Q; print(BACKEND, Q.__name__)"
    return subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True).stdout.split()


def test_python_backend_selected():
    assert _backend_name("python") == ["python", "Fraction"]


def test_gmpy2_backend_selected():
    pytest.importorskip("gmpy2")
    assert _backend_name("gmpy2") == ["gmpy2", "mpq"]


def test_unknown_backend_rejected():
    proc = _cli("numpy", *ARGV)
    assert proc.returncode != 0
    assert b"SPECTRALOPS_BACKEND" in proc.stderr


def test_backends_produce_identical_reports():
    pytest.importorskip("gmpy2")
    fast, slow = _cli("gmpy2", *ARGV), _cli("python", *ARGV)
    assert fast.returncode == slow.returncode == 0
    assert fast.stdout == slow.stdout
