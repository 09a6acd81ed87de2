"""Compare the compiled and pure-Python kernel backends.

    python3 benchmarks/bench_kernels.py [--sizes 40 80 120 200] [--repeat 3]
"""

import argparse
import random
import time
from itertools import combinations

from loosesat import _pykernels
from loosesat.construction import construct_gn
from loosesat.hypergraph import Hypergraph3
from loosesat.saturation import saturate_greedy

try:
    from loosesat import _ckernels
except ImportError:
    _ckernels = None


def best_of(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t)
    return best


def workloads(sizes):
    for n in sizes:
        G, _ = construct_gn(n)
        yield f"G_{n} saturation scan", G
    rng = random.Random(0)
    for s in range(3):
        yield f"greedy n=14 seed={s}", saturate_greedy(Hypergraph3(14), s)
    triples = list(combinations(range(12), 3))
    yield "random n=12 m=30", Hypergraph3(12, rng.sample(triples, 30))


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--sizes", type=int, nargs="*", default=[40, 80, 120, 200])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    backends = [("python", _pykernels)] + ([("cython", _ckernels)] if _ckernels else [])
    print(f"{'workload':28} {'kernel':16} " + " ".join(f"{b:>10}" for b, _ in backends) + "   speedup")
    for name, G in workloads(args.sizes):
        for kname in ("first_uncovered", "find_triangle"):
            times = [best_of(lambda m=m: getattr(m, kname)(G.n, G.edges), args.repeat) for _, m in backends]
            speed = f"{times[0] / times[-1]:8.1f}x" if len(times) > 1 and times[-1] > 0 else "       -"
            print(f"{name:28} {kname:16} " + " ".join(f"{t * 1e3:8.2f}ms" for t in times) + "  " + speed)


if __name__ == "__main__":
    main()
