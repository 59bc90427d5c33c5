"""Compiled versus pure-Python polynomial kernels.

Times the raw kernels on random dense coefficient lists, then factorizations
and the rational-function workloads of the orthogonality checks with each
backend (in a subprocess, since the backend is fixed at import).

    python3 benchmarks/bench_kernels.py [--repeat 5] [--degree 40]
"""
from __future__ import annotations

import argparse
import os
import random
import subprocess
import sys
import timeit

from greenblocks.exactalg import _pykernels

try:
    from greenblocks.exactalg import _ckernels
except ImportError:
    _ckernels = None

WORKLOADS = {
    "factorize GL6": "factorize(gl_principal_block(6), check=False)",
    "factorize GL7": "factorize(gl_principal_block(7), check=False)",
    "factorize SL8 d=2": "factorize(sl_block(8, 2), check=False)",
    "Q~-Gram GL5": "qtilde_gram(factorize(gl_principal_block(5), check=False))",
    "Green products GL4": "[scalar_product_green(t4, a, b) for a in t4.block.W.class_names"
                          " for b in t4.block.W.class_names]",
}


def _poly(rng, deg, bound=50):
    a = [rng.randint(-bound, bound) for _ in range(deg + 1)]
    a[-1] = a[-1] or 1
    return a


def kernel_cases(rng, deg):
    a, b = _poly(rng, deg), _poly(rng, deg // 2)
    ab = _pykernels.mul(a, b)
    g = _poly(rng, deg // 4)
    ag, bg = _pykernels.mul(a, g), _pykernels.mul(b, g)
    return {
        "mul": lambda k: k.mul(a, b),
        "divexact": lambda k: k.divexact(ab, b),
        "divmod": lambda k: k.divmod_(a, b),
        "gcd": lambda k: k.gcd(ag, bg),
    }


def time_kernels(deg, repeat, number=200):
    rng = random.Random(1)
    rows = []
    for name, fn in kernel_cases(rng, deg).items():
        py = min(timeit.repeat(lambda: fn(_pykernels), number=number, repeat=repeat)) / number
        cy = None
        if _ckernels is not None:
            if fn(_ckernels) != fn(_pykernels):
                raise AssertionError(f"backends disagree on {name}")
            cy = min(timeit.repeat(lambda: fn(_ckernels), number=number, repeat=repeat)) / number
        rows.append((name, py, cy))
    return rows


def time_workload(expr, pure, repeat):
    code = ("import timeit\n"
            "from greenblocks.blocks import gl_principal_block, sl_block\n"
            "from greenblocks.lusztig import factorize, qtilde_gram, scalar_product_green\n"
            "t4 = factorize(gl_principal_block(4))\n"
            f"print(min(timeit.repeat(lambda: {expr}, number=1, repeat={repeat})))\n")
    env = dict(os.environ, GREENBLOCKS_PURE_PYTHON="1" if pure else "0")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    return float(out.stdout.strip())


def _ratio(py, cy):
    return f"{py / cy:6.2f}x" if cy else "    n/a"


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--degree", type=int, default=40)
    ap.add_argument("--kernels-only", action="store_true")
    args = ap.parse_args(argv)
    print(f"compiled kernels: {'available' if _ckernels else 'missing'}")
    print(f"\nkernels, dense degree {args.degree} (microseconds per call)")
    print(f"{'kernel':10} {'python':>10} {'cython':>10} {'speedup':>8}")
    for name, py, cy in time_kernels(args.degree, args.repeat):
        cys = f"{cy * 1e6:10.2f}" if cy else f"{'n/a':>10}"
        print(f"{name:10} {py * 1e6:10.2f} {cys} {_ratio(py, cy):>8}")
    if args.kernels_only:
        return
    print("\nend to end, seconds (best of repeats)")
    print(f"{'workload':24} {'python':>10} {'cython':>10} {'speedup':>8}")
    for name, expr in WORKLOADS.items():
        py = time_workload(expr, True, args.repeat)
        cy = time_workload(expr, False, args.repeat) if _ckernels else None
        cys = f"{cy:10.3f}" if cy else f"{'n/a':>10}"
        print(f"{name:24} {py:10.3f} {cys} {_ratio(py, cy):>8}")


if __name__ == "__main__":
    main()
