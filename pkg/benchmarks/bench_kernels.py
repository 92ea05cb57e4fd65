"""Time the compiled kernels against the pure-Python fallback.

    python benchmarks/bench_kernels.py [--size 7] [--repeat 3]
"""
import argparse
import random
import timeit

from tabkey import _pykernels, kernels
from tabkey.signmatrix import from_tableau
from tabkey.tableau import random_tableau


def workloads(size):
    rng = random.Random(7)
    mats = [from_tableau(random_tableau(rng, 8, 8)).to_lists() for _ in range(2000)]
    return {
        f"census n={size}": lambda b: b.census_counts(size),
        "eliminate 2000 tableaux": lambda b: [[list(r) for r in b.eliminate_rows(m)]
                                              for m in mats],
        f"132 scan n={size + 1}": lambda b: b.count_132_scan(size + 1),
    }


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--size", type=int, default=7)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    compiled = kernels.compiled_backend
    if compiled is None:
        print("compiled extension not built; only the Python backend is timed")
    print(f"{'workload':<26}{'python s':>10}{'compiled s':>12}{'speedup':>9}")
    for name, fn in workloads(args.size).items():
        py = min(timeit.repeat(lambda: fn(_pykernels), number=1, repeat=args.repeat))
        if compiled is None:
            print(f"{name:<26}{py:>10.3f}")
            continue
        assert fn(compiled) == fn(_pykernels), name
        c = min(timeit.repeat(lambda: fn(compiled), number=1, repeat=args.repeat))
        print(f"{name:<26}{py:>10.3f}{c:>12.4f}{py / c:>8.1f}x")


if __name__ == "__main__":
    main()
