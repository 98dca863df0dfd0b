"""Compare the numba kernels with the interpreted fallback.

Each workload runs in a fresh interpreter so the ``ORDAUT_NUMBA`` flag is
read at import time.  Compile time is excluded by a warm-up call.

    python benchmarks/bench_kernels.py [--repeat N]
"""
from __future__ import annotations

import argparse
import json
import os
import subprocess
import sys

WORKER = r"""
import json, sys, time
from ordaut import Cnf, condense, f_bruteforce, synthesize
from ordaut.search import canonical_cpas

import numpy as np
from ordaut import _kernels

def enumerate5():
    # count only: the kernel alone, no Python-side automaton objects
    _kernels.enumerate_cpas(5, False, -1, False, np.empty((1, 5, 2), np.int64), np.empty((1, 5), np.bool_))

def f_table():
    for n in range(1, 25):
        f_bruteforce(n)

big = synthesize(Cnf(((9000, 5), (100, 77), (0, 2**30 + 3))))

def condense_big():
    condense(big)

work = {"enumerate CPAs, 5 states": enumerate5, "f(1..24)": f_table, "condense 9k states": condense_big}
repeat = int(sys.argv[1])
out = {}
canonical_cpas(3); f_bruteforce(3); condense(synthesize(Cnf.finite(3)))  # compile
for name, fn in work.items():
    best = float("inf")
    for _ in range(repeat):
        t = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t)
    out[name] = best
print(json.dumps(out))
"""


def run(flag: str, repeat: int) -> dict:
    env = dict(os.environ, ORDAUT_NUMBA=flag)
    proc = subprocess.run([sys.executable, "-c", WORKER, str(repeat)], env=env, capture_output=True, text=True, check=True)
    return json.loads(proc.stdout)


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--repeat", type=int, default=3)
    args = p.parse_args(argv)
    fast = run("1", args.repeat)
    slow = run("0", args.repeat)
    print(f"{'workload':<28}{'numba s':>10}{'python s':>11}{'speedup':>9}")
    for name in fast:
        print(f"{name:<28}{fast[name]:>10.4f}{slow[name]:>11.4f}{slow[name] / fast[name]:>8.1f}x")


if __name__ == "__main__":
    main()
