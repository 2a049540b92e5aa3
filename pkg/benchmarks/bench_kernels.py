"""Compare the compiled polynomial kernels with the pure-Python fallback.

Two parts:

* kernel level: the same random sparse polynomials go through ``mul``,
  ``lincomb`` and ``divexact`` from both kernel modules in this process;
* end to end: a fixed workload runs in two subprocesses, one with
  MNQT_PURE_PYTHON=1, and their outputs are compared for equality.

Usage: python3 benchmarks/bench_kernels.py [--repeat N] [--degree N]
"""
import argparse
import os
import random
import subprocess
import sys
import time
import timeit

from mnqt.exact import _pykernels

WORKLOAD = r"""
import hashlib, sys, time
from mnqt.exact import BACKEND
from mnqt import greenkostka as gk, macdonald as mac, mn
from mnqt.partitions import partitions_of
n = int(sys.argv[1])
start = time.perf_counter()
out = []
for lam in partitions_of(n):
    out.append(str(mac.macdonald_P(lam)))
out.append(str(gk.kostka_table(min(n, 5)).to_json_obj()))
for mu in partitions_of(min(n, 5) - 2):
    out.append(str(mn.mn_expand(mu, 2).to_json_obj()))
elapsed = time.perf_counter() - start
print(BACKEND, "%.3f" % elapsed, hashlib.sha256("\n".join(out).encode()).hexdigest())
"""


def random_poly(rng, terms, deg):
    return {_pykernels.pack(rng.randint(0, deg), rng.randint(0, deg), rng.randint(0, 3)):
            rng.randint(-50, 50) or 1 for _ in range(terms)}


def kernel_rows(repeat):
    try:
        from mnqt.exact import _ckernels
    except ImportError:
        return None
    rng = random.Random(1)
    rows = []
    for terms, deg in [(8, 4), (40, 8), (150, 14)]:
        a, b = random_poly(rng, terms, deg), random_poly(rng, terms, deg)
        prod, square = _pykernels.mul(a, b), _pykernels.mul(a, a)
        cases = {
            "mul": lambda k: k.mul(a, b),
            "lincomb": lambda k: k.lincomb(prod, 3, square, -2),
            "divexact": lambda k: k.divexact(prod, b),
        }
        for name, fn in cases.items():
            assert fn(_ckernels) == fn(_pykernels)
            py = min(timeit.repeat(lambda: fn(_pykernels), number=1, repeat=repeat))
            cy = min(timeit.repeat(lambda: fn(_ckernels), number=1, repeat=repeat))
            rows.append((name, terms, py, cy))
    return rows


def run_workload(pure, degree):
    env = dict(os.environ)
    env["MNQT_PURE_PYTHON"] = "1" if pure else "0"
    out = subprocess.run([sys.executable, "-c", WORKLOAD, str(degree)], env=env,
                         capture_output=True, text=True, check=True)
    backend, seconds, digest = out.stdout.split()
    return backend, float(seconds), digest


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=20)
    parser.add_argument("--degree", type=int, default=6)
    args = parser.parse_args(argv)

    rows = kernel_rows(args.repeat)
    if rows is None:
        print("compiled kernels are not built; only the end-to-end run is shown")
    else:
        print("%-9s %6s %12s %12s %8s" % ("kernel", "terms", "python (ms)", "cython (ms)", "speedup"))
        for name, terms, py, cy in rows:
            print("%-9s %6d %12.3f %12.3f %7.1fx" % (name, terms, py * 1e3, cy * 1e3, py / cy))

    print()
    print("end-to-end workload, degree %d (fresh process each)" % args.degree)
    results = [run_workload(False, args.degree), run_workload(True, args.degree)]
    for backend, seconds, digest in results:
        print("  %-7s %8.2fs  output %s" % (backend, seconds, digest[:16]))
    if results[0][2] != results[1][2]:
        print("MISMATCH: the two backends produced different output")
        return 1
    if results[0][0] != results[1][0]:
        print("  speedup %.2fx, identical output" % (results[1][1] / results[0][1]))
    return 0


if __name__ == "__main__":
    sys.exit(main())
