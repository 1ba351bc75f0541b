"""Compare the compiled and pure-Python kernels.

    python benchmarks/bench_kernels.py [--size 60] [--repeat 5] [--cmax 40]

Reports rank computations on random dense matrices and a full degree-zero
oracle sweep run once with each backend.
"""
import argparse
import random
import time

from weylext import _kernels_py, oracle
from weylext.params import FieldParams

try:
    from weylext import _kernels
except ImportError:
    _kernels = None


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        times.append(time.perf_counter() - start)
    return min(times)


def random_rows(n, p, seed):
    rng = random.Random(seed)
    return [[rng.randrange(p) for _ in range(n)] for _ in range(2 * n)]


def oracle_sweep(cmax):
    for p in (2, 3, 5):
        params = FieldParams(p, p)
        for c in range(cmax + 1):
            for c2 in range(c % 2, cmax + 1, 2):
                oracle.oracle_hom_dim(c, c2, params)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--size", type=int, default=60)
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--cmax", type=int, default=40)
    args = ap.parse_args()

    backends = [("python", _kernels_py)]
    if _kernels is None:
        print("compiled kernels not built; timing the Python backend only")
    else:
        backends.insert(0, ("cython", _kernels))

    print(f"{'task':<28}{'backend':<10}{'seconds':>10}")
    results = {}
    for p in (3, 1_073_741_789):
        rows = random_rows(args.size, p, seed=p)
        for name, mod in backends:
            t = best_of(lambda: mod.rank_mod_p(rows, args.size, p), args.repeat)
            results[(f"rank {args.size}x{2 * args.size} mod {p}", name)] = t

    original = oracle.rank_mod_p
    try:
        for name, mod in backends:
            oracle.rank_mod_p = mod.rank_mod_p
            results[(f"oracle sweep c<={args.cmax}", name)] = best_of(lambda: oracle_sweep(args.cmax), 1)
    finally:
        oracle.rank_mod_p = original

    for (task, name), t in results.items():
        print(f"{task:<28}{name:<10}{t:>10.4f}")
    if _kernels is not None:
        print()
        for task in dict.fromkeys(task for task, _ in results):
            print(f"{task:<28}speedup {results[(task, 'python')] / results[(task, 'cython')]:.1f}x")


if __name__ == "__main__":
    main()
