"""Compare the compiled and pure-Python kernels.

    python3 benchmarks/bench_kernels.py [--repeat N]

Each row times one workload on both backends and reports the speedup.
"""

import argparse
import importlib
import random
import timeit

from qsymops.compositions import compositions_of, compositions_up_to
from qsymops.kernels import _pure


def _workloads(k):
    comps6 = list(compositions_up_to(6))
    pairs = [(a, b) for a in comps6 for b in comps6 if sum(a) + sum(b) <= 8]
    shapes = [(a, b) for n in range(1, 8) for a in compositions_of(n) for b in compositions_of(n)]
    rng = random.Random(0)

    def poly(n, d, terms):
        out = {}
        for _ in range(terms):
            m = [0] * n
            for _ in range(rng.randint(0, d)):
                m[rng.randrange(n)] += 1
            out[tuple(m)] = rng.randint(1, 5)
        return out

    f, g = poly(6, 5, 150), poly(6, 5, 150)
    wf = {tuple(rng.randint(1, 5) for _ in range(rng.randint(0, 4))): 1 for _ in range(300)}
    wg = {tuple(rng.randint(1, 5) for _ in range(rng.randint(0, 4))): 1 for _ in range(300)}

    def qsh():
        k._qshuffle.cache_clear() if hasattr(k, "_qshuffle") else None
        for a, b in pairs:
            k.qshuffle(a, b)

    return {
        "qshuffle (|a|+|b| <= 8)": qsh,
        "qshuffle_maps (p,q <= 4)": lambda: [k.qshuffle_maps(p, q) for p in range(5) for q in range(5)],
        "immaculate_count (n <= 7)": lambda: [k.immaculate_count(a, b) for a, b in shapes],
        "series_product (n=6, d=5)": lambda: [k.series_product(f, g, op, 5) for op in range(8)],
        "word_product (len <= 8)": lambda: [k.word_product(wf, wg, op, 8) for op in range(8)],
    }


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    try:
        ext = importlib.import_module("qsymops.kernels._ckernels")
    except ImportError:
        raise SystemExit("compiled kernels are not built; run `pip install -e . --no-build-isolation`")
    pure_w, ext_w = _workloads(_pure), _workloads(ext)
    print(f"{'workload':<30}{'pure (s)':>12}{'cython (s)':>12}{'speedup':>10}")
    for name in pure_w:
        tp = min(timeit.repeat(pure_w[name], number=1, repeat=args.repeat))
        tc = min(timeit.repeat(ext_w[name], number=1, repeat=args.repeat))
        print(f"{name:<30}{tp:>12.4f}{tc:>12.4f}{tp / tc:>9.1f}x")


if __name__ == "__main__":
    main()
