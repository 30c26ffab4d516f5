"""Compiled kernel vs pure-Python fallback.

Micro: the sparse kernels on their own.  Macro: full CLI suites, one
subprocess per kernel (the kernel is chosen at import, so the fallback run sets
QSHRB_PURE_PYTHON=1).

    python benchmarks/bench_kernel.py [--repeat 5] [--bound 7]
"""

import argparse
import os
import subprocess
import sys
import time
import timeit
from fractions import Fraction
from pathlib import Path

from qshrb import _kernel_py

try:
    from qshrb import _kernel_c
except ImportError:
    _kernel_c = None

DATA = Path(__file__).resolve().parents[1] / "src" / "qshrb" / "data"


def _laurent(seed, n=4):
    return {e: Fraction(seed * (e + 3), e + 7) for e in range(-1, n)}


def micro(kernel, repeat):
    a = {(i, j): _laurent(i + j + 1) for i in range(12) for j in range(12)}
    b = {(j, i): (i + 2) for i in range(12) for j in range(12)}
    img = {k: {k: 1, k[::-1]: _laurent(2)} for k in a}
    cases = {
        "lc_axpy": lambda: kernel.lc_axpy(dict(a), b, _laurent(3)),
        "lc_apply": lambda: kernel.lc_apply(a, img.__getitem__),
        "lc_apply2": lambda: kernel.lc_apply2(b, {(0,): 2, (1,): _laurent(1)}, lambda x, y: {x + y: 1}),
        "c_mul": lambda: kernel.c_mul(_laurent(5, 8), _laurent(7, 8)),
    }
    return {name: min(timeit.repeat(fn, number=200, repeat=repeat)) / 200 for name, fn in cases.items()}


MACRO = [
    ("qsh-assoc", "hecke2_m0.def", ["--degree-cap", "{bound}"]),
    ("tridendriform", "idem2_flip2.def", []),
    ("braided-rb", "hecke2_m0.def", []),
    ("bosonization", "z2_yd.def", []),
]


def macro(pure, bound):
    env = dict(os.environ, QSHRB_DEGREE_BOUND=str(bound))
    if pure:
        env["QSHRB_PURE_PYTHON"] = "1"
    else:
        env.pop("QSHRB_PURE_PYTHON", None)
    out = {}
    for suite, fname, extra in MACRO:
        cmd = [sys.executable, "-m", "qshrb", "check", suite, str(DATA / fname)] + [x.format(bound=bound) for x in extra]
        t0 = time.perf_counter()
        proc = subprocess.run(cmd, env=env, capture_output=True, text=True)
        out[suite] = (time.perf_counter() - t0, proc.returncode)
    return out


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--bound", type=int, default=7)
    args = ap.parse_args()

    if _kernel_c is None:
        print("compiled kernel not built; only the fallback is available")
    print("micro (seconds per call)")
    py = micro(_kernel_py, args.repeat)
    cy = micro(_kernel_c, args.repeat) if _kernel_c else {}
    for name, t in py.items():
        if name in cy:
            print(f"  {name:10} python {t:.2e}  cython {cy[name]:.2e}  speedup {t / cy[name]:.2f}x")
        else:
            print(f"  {name:10} python {t:.2e}")

    print(f"macro (wall seconds, N={args.bound})")
    mp = macro(True, args.bound)
    mc = macro(False, args.bound) if _kernel_c else {}
    for suite, (t, rc) in mp.items():
        if suite in mc:
            tc, rcc = mc[suite]
            print(f"  {suite:14} python {t:6.2f}  cython {tc:6.2f}  speedup {t / tc:.2f}x  exit {rc}/{rcc}")
        else:
            print(f"  {suite:14} python {t:6.2f}  exit {rc}")


if __name__ == "__main__":
    main()
