"""Compare the compiled bit kernel with the pure-Python fallback.

Run with ``python3 benchmarks/bench_kernels.py``. Each workload runs once per
kernel and prints wall time and the speedup. The search workloads also check
that both kernels emit identical streams.
"""

import argparse
import random
import time

from circramsey import PatternSpec, SearchJob, enumerate_block_circulant, enumerate_circulant
from circramsey._backend import BACKEND, BitCore, PurePythonCore

K, J = PatternSpec.clique, PatternSpec.near_clique


def anchored_checks(core_cls, n=64, rounds=20000, seed=1):
    rng = random.Random(seed)
    core = core_cls(n, 2)
    for u in range(n):
        for v in range(u + 1, n):
            core.set(u, v, 1 if rng.random() < 0.3 else 2)
    kernels = [p.kernel_args for p in (K(4), J(5), PatternSpec.cycle(5), PatternSpec.wheel(5),
                                       PatternSpec.bipartite(2, 3))]
    hits = 0
    for _ in range(rounds):
        u, v = rng.sample(range(n), 2)
        kind, p1, p2 = rng.choice(kernels)
        hits += bool(core.contains_through(core.get(u, v), kind, p1, p2, u, v))
    return hits


def search_circ(core_cls):
    return list(enumerate_circulant(SearchJob(17, (K(4), K(4))), core_cls=core_cls))


def search_block(core_cls):
    return list(enumerate_block_circulant(SearchJob(27, (J(4), J(7)), k=3), core_cls=core_cls))


def search_block_large(core_cls):
    return list(enumerate_block_circulant(SearchJob(27, (J(4), J(8)), k=3), core_cls=core_cls))


WORKLOADS = {
    "anchored checks n=64": anchored_checks,
    "circulant search K4,K4 n=17": search_circ,
    "block search J4,J7 n=27 k=3": search_block,
    "block search J4,J8 n=27 k=3": search_block_large,
}


def timed(fn, core_cls):
    start = time.perf_counter()
    result = fn(core_cls)
    return time.perf_counter() - start, result


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--skip-large", action="store_true", help="skip the J4,J8 search")
    args = ap.parse_args()
    if BACKEND == "python":
        print("compiled kernel not built; both columns use the pure-Python kernel")
    print(f"{'workload':32} {'compiled':>10} {'python':>10} {'speedup':>8}")
    for name, fn in WORKLOADS.items():
        if args.skip_large and fn is search_block_large:
            continue
        fast, a = timed(fn, BitCore)
        slow, b = timed(fn, PurePythonCore)
        if a != b:
            raise SystemExit(f"{name}: kernels disagree")
        print(f"{name:32} {fast:9.3f}s {slow:9.3f}s {slow / fast:7.1f}x")


if __name__ == "__main__":
    main()
