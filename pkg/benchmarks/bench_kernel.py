#!/usr/bin/env python3
"""Compare the compiled and pure-Python reduction kernels.

Times the Smith normal form and the incremental row echelon on seeded random
workloads shaped like the package's real inputs (relation matrices of product
presentations, quadratic-functor row streams), plus a macro benchmark that
builds a full product presentation through each backend.

Run:  python3 benchmarks/bench_kernel.py [--repeat N]
"""

import argparse
import random
import time

from lieq._kernel import BACKEND, _impl

try:
    from lieq._kernel import _compiled
except ImportError:
    _compiled = None


def snf_workload(rng, count, rows, cols, bound):
    return [[[rng.randint(-bound, bound) for _ in range(cols)]
             for _ in range(rows)] for _ in range(count)]


def time_backend(fn, mats, repeat):
    best = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        for m in mats:
            fn([list(r) for r in m], len(m), len(m[0]))
        dt = time.perf_counter() - t0
        best = dt if best is None else min(best, dt)
    return best


def time_hnf(backend, mats, repeat):
    best = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        for m in mats:
            backend.hnf_rows([list(r) for r in m], len(m[0]))
        dt = time.perf_counter() - t0
        best = dt if best is None else min(best, dt)
    return best


def macro_product(repeat):
    """Build the n4 exterior square at q=2 from scratch, per backend."""
    import os
    import subprocess
    import sys
    code = (
        "import time; t0=time.perf_counter();"
        "from lieq.io_catalog import strictly_upper;"
        "from lieq.qtensor import q_exterior_product;"
        "g = strictly_upper(4);"
        "p = q_exterior_product(g, None, 2);"
        "assert p.invariant_factors();"
        "print(time.perf_counter() - t0)"
    )
    out = {}
    for label, env_extra in (("cython", {}), ("python", {"LIEQ_PURE_PYTHON": "1"})):
        best = None
        for _ in range(repeat):
            env = dict(os.environ, **env_extra)
            res = subprocess.run([sys.executable, "-c", code], env=env,
                                 capture_output=True, text=True, check=True)
            dt = float(res.stdout.strip())
            best = dt if best is None else min(best, dt)
        out[label] = best
    return out


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    print(f"active backend: {BACKEND}")
    if _compiled is None:
        print("compiled kernel unavailable; nothing to compare")
        return

    rng = random.Random(20250809)
    # Dense random SNF blows up coefficients past rank ~10 (that is why the
    # package pre-compresses relation stacks with the Hermite pass before
    # Smith); workloads mirror the real pipeline shapes.
    compressed = [
        _impl.hnf_rows([list(r) for r in m], 12)
        for m in snf_workload(rng, 20, 40, 12, 3)
    ]
    workloads = [
        ("snf dense 6x6, |a|<=20", snf_workload(rng, 60, 6, 6, 20)),
        ("snf compressed 40x12", compressed),
        ("snf wide 8x30, |a|<=6", snf_workload(rng, 20, 8, 30, 6)),
    ]
    print(f"{'workload':28s} {'python':>10s} {'cython':>10s} {'speedup':>8s}")
    for label, mats in workloads:
        tp = time_backend(_impl.snf_with_transforms, mats, args.repeat)
        tc = time_backend(_compiled.snf_with_transforms, mats, args.repeat)
        print(f"{label:28s} {tp * 1e3:9.1f}ms {tc * 1e3:9.1f}ms {tp / tc:7.2f}x")
    hnf_mats = snf_workload(rng, 6, 400, 16, 12)
    tp = time_hnf(_impl, hnf_mats, args.repeat)
    tc = time_hnf(_compiled, hnf_mats, args.repeat)
    print(f"{'hnf stream 400x16':28s} {tp * 1e3:9.1f}ms {tc * 1e3:9.1f}ms "
          f"{tp / tc:7.2f}x")
    ker_mats = snf_workload(rng, 12, 48, 20, 4)
    tp = time_backend(
        lambda m, r, c: _impl.hnf_rows_with_kernel(m, c), ker_mats, args.repeat)
    tc = time_backend(
        lambda m, r, c: _compiled.hnf_rows_with_kernel(m, c), ker_mats, args.repeat)
    print(f"{'row kernel 48x20':28s} {tp * 1e3:9.1f}ms {tc * 1e3:9.1f}ms "
          f"{tp / tc:7.2f}x")

    macro = macro_product(args.repeat)
    print(f"{'n4 exterior square, q=2':28s} {macro['python'] * 1e3:9.1f}ms "
          f"{macro['cython'] * 1e3:9.1f}ms "
          f"{macro['python'] / macro['cython']:7.2f}x   (end to end)")


if __name__ == "__main__":
    main()
