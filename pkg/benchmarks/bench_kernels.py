"""Compare the compiled F_p elimination kernels with the numpy fallback.

Usage: python benchmarks/bench_kernels.py [--repeat 3] [--sizes 40,80,160]

Two workloads: rank and RREF of random dense matrices, and a full brute-force
HP_0 run whose elimination calls are routed through each backend in turn.
"""

from __future__ import annotations

import argparse
import timeit
from contextlib import contextmanager

import numpy as np

from poisson_hp0 import _kernels_py, kernels
from poisson_hp0.presets import surface_preset
from poisson_hp0.quotient import hp0_dims_quotient, swap_group
from poisson_hp0.surface import hp0_series

try:
    from poisson_hp0 import _kernels as _kernels_c
except ImportError:
    _kernels_c = None


@contextmanager
def backend(impl):
    saved = kernels.rank, kernels.rref
    kernels.rank, kernels.rref = impl.rank, impl.rref
    try:
        yield
    finally:
        kernels.rank, kernels.rref = saved


def best(fn, repeat: int) -> float:
    return min(timeit.repeat(fn, number=1, repeat=repeat))


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--sizes", default="40,80,160")
    ap.add_argument("--p", type=int, default=10007)
    args = ap.parse_args()
    if _kernels_c is None:
        raise SystemExit("compiled extension not built; reinstall without POISSON_HP0_NO_EXT")
    impls = {"cython": _kernels_c, "python": _kernels_py}
    rng = np.random.default_rng(0)

    print(f"{'workload':<32}{'cython s':>12}{'python s':>12}{'speedup':>10}")
    for n in (int(x) for x in args.sizes.split(",")):
        # rank-deficient so elimination does real pivot searches
        A = rng.integers(0, args.p, size=(n, n // 2)) @ rng.integers(0, args.p, size=(n // 2, n))
        A = (A % args.p).astype(np.int64)
        for name in ("rank", "rref"):
            t = {k: best(lambda: getattr(m, name)(A, args.p), args.repeat) for k, m in impls.items()}
            assert impls["cython"].rank(A, args.p) == impls["python"].rank(A, args.p)
            print(f"{f'{name} {n}x{n} p={args.p}':<32}{t['cython']:>12.4f}{t['python']:>12.4f}{t['python'] / t['cython']:>10.1f}")

    runs = {
        "surface fermat5 p=11 N=60": lambda: hp0_series(surface_preset("fermat5"), 11, 60),
        "surface E8 p=31 N=400": lambda: hp0_series(surface_preset("E8"), 31, 400),
        "quotient S2 p=5 N=24": lambda: hp0_dims_quotient(swap_group(), 5, 24),
    }
    for label, fn in runs.items():
        t, out = {}, {}
        for k, m in impls.items():
            with backend(m):
                out[k] = fn()
                t[k] = best(fn, args.repeat)
        assert out["cython"] == out["python"]
        print(f"{label:<32}{t['cython']:>12.4f}{t['python']:>12.4f}{t['python'] / t['cython']:>10.1f}")


if __name__ == "__main__":
    main()
