"""Compiled kernels against the numpy fallback.

    python benchmarks/bench_kernels.py [--repeat 3]
"""
import argparse
import timeit

import numpy as np

from ckn import _kernels_py

try:
    from ckn import _kernels
except ImportError:
    _kernels = None


def dcd_case(n=2000, d=800, seed=0):
    rng = np.random.default_rng(seed)
    X = rng.standard_normal((n, d)) / np.sqrt(d)
    y = np.where(rng.random(n) < 0.5, 1.0, -1.0)
    qd = np.einsum("ij,ij->i", X, X) + 0.5

    def run(fn):
        alpha, w = np.zeros(n), np.zeros(d)
        index = np.arange(n, dtype=np.int64)
        for _ in range(3):
            fn(X, y, alpha, w, index, n, 0.5, qd, np.inf)
    return run


def gram_case(n=40, P=36, seed=0):
    rng = np.random.default_rng(seed)
    A = rng.standard_normal((n * P, 8))
    M = np.ascontiguousarray(np.exp(-(A[:, None] - A[None]).__pow__(2).sum(-1) / 8))
    idx = np.arange(n * P, dtype=np.int64).reshape(n, P)
    S = np.ascontiguousarray(np.exp(-rng.random((P, P))))

    def run(fn):
        fn(M, idx, S)
    return run


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    cases = [("dcd_epoch x3 (2000 x 800)", dcd_case(), "dcd_epoch"),
             ("level_gram (40 maps, 36 patches)", gram_case(), "level_gram")]
    print(f"{'kernel':<36}{'python s':>12}{'cython s':>12}{'speedup':>10}")
    for name, run, attr in cases:
        t_py = min(timeit.repeat(lambda: run(getattr(_kernels_py, attr)),
                                 number=1, repeat=args.repeat))
        if _kernels is None:
            print(f"{name:<36}{t_py:12.4f}{'n/a':>12}{'':>10}")
            continue
        t_cy = min(timeit.repeat(lambda: run(getattr(_kernels, attr)),
                                 number=1, repeat=args.repeat))
        print(f"{name:<36}{t_py:12.4f}{t_cy:12.4f}{t_py / t_cy:9.1f}x")


if __name__ == "__main__":
    main()
