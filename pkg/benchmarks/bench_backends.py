"""Compare the gmpy2 and pure-Python rational backends.

Each workload runs in a fresh interpreter with SPECTRALOPS_BACKEND set, so
operator caches never leak between measurements.

    python3 benchmarks/bench_backends.py [--repeat 3] [--alpha-max 6]
"""

import argparse
import os
import statistics
import subprocess
import sys

WORKLOADS = {
    "laguerre operators": (
        "from spectralops.laguerre_type import HigherRepr, op_higher\n"
        "for a in range({amax} + 1):\n"
        "    for r in HigherRepr: op_higher(a, r)\n"
    ),
    "bessel residuals": (
        "from spectralops.bessel_type import residual_bessel\n"
        "for a in range(4):\n"
        "    residual_bessel('full', a, 1, '9/4', 2 * a + 12)\n"
    ),
    "verify all": (
        "import contextlib, io\n"
        "from spectralops.cli import main\n"
        "with contextlib.redirect_stdout(io.StringIO()), contextlib.redirect_stderr(io.StringIO()):\n"
        "    assert main(['verify', 'all']) == 0\n"
    ),
}

TIMER = "import time\nt0 = time.perf_counter()\n{body}print(time.perf_counter() - t0)\n"


def measure(backend: str, body: str) -> float:
    env = dict(os.environ, SPECTRALOPS_BACKEND=backend)
    out = subprocess.run([sys.executable, "-c", TIMER.format(body=body)], env=env, check=True, capture_output=True, text=True)
    return float(out.stdout.strip().splitlines()[-1])


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--alpha-max", type=int, default=6)
    args = ap.parse_args(argv)

    print(f"{'workload':<20} {'gmpy2 [s]':>10} {'python [s]':>11} {'speedup':>8}")
    for name, body in WORKLOADS.items():
        body = body.format(amax=args.alpha_max)
        fast = statistics.median(measure("gmpy2", body) for _ in range(args.repeat))
        slow = statistics.median(measure("python", body) for _ in range(args.repeat))
        print(f"{name:<20} {fast:>10.3f} {slow:>11.3f} {slow / fast:>7.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
