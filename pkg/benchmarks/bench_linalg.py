"""Compare the compiled and numpy row-reduction kernels.

    python benchmarks/bench_linalg.py [--sizes 50 100 200] [--repeat 3] [--sweep 7]

The sweep option times a full socle-vs-criterion pass under each kernel by
patching the kernel used by ``scrollideals.linalg``.
"""

import argparse
import time

import numpy as np

from scrollideals import _kernels, linalg
from scrollideals._kernels import gfp_py

try:
    from scrollideals._kernels import gfp
except ImportError:
    gfp = None

P = 32003


def _time(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t)
    return best


def bench_rref(sizes, repeat):
    rng = np.random.default_rng(0)
    kernels = {"python": gfp_py.rref_inplace}
    if gfp is not None:
        kernels["cython"] = gfp.rref_inplace
    print(f"{'size':>6} " + " ".join(f"{k:>10}" for k in kernels) + "   speedup")
    for n in sizes:
        a = rng.integers(0, P, size=(n, n), dtype=np.int64)
        times = {k: _time(lambda: linalg.rank_mod_p(a, P, kern), repeat)
                 for k, kern in kernels.items()}
        ranks = {k: linalg.rank_mod_p(a, P, kern) for k, kern in kernels.items()}
        assert len(set(ranks.values())) == 1, ranks
        speed = f"{times['python'] / times['cython']:8.1f}x" if "cython" in times else "   n/a"
        print(f"{n:>6} " + " ".join(f"{times[k]:>9.4f}s" for k in kernels) + f"  {speed}")


def bench_sweep(n_max):
    from scrollideals import verify

    kernels = {"python": gfp_py.rref_inplace}
    if gfp is not None:
        kernels["cython"] = gfp.rref_inplace
    original = _kernels.rref_inplace
    try:
        for name, kern in kernels.items():
            _kernels.rref_inplace = kern
            t = time.perf_counter()
            rep = verify.verify_gorenstein(n_max)
            print(f"gorenstein sweep n<={n_max} [{name}]: {rep.passed}/{rep.instances} "
                  f"in {time.perf_counter() - t:.2f}s")
    finally:
        _kernels.rref_inplace = original


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", type=int, nargs="+", default=[50, 100, 200, 400])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--sweep", type=int, default=0, help="also time a sweep up to this n")
    args = ap.parse_args()
    print(f"default backend: {linalg.BACKEND}")
    bench_rref(args.sizes, args.repeat)
    if args.sweep:
        bench_sweep(args.sweep)


if __name__ == "__main__":
    main()
