"""Time the compiled kernels against their pure-Python twins.

    python bench/benchmark.py [--repeat N]
"""
from __future__ import annotations

import argparse
import random
import timeit

from hfset import _purecore

try:
    from hfset import _speedups
except ImportError:  # extension not built
    _speedups = None


def chain_rows(n: int, seed: int) -> list:
    perm = random.Random(seed).sample(range(n), n)
    pos = {p: k for k, p in enumerate(perm)}
    return [sum(1 << j for j in range(n) if pos[i] <= pos[j]) for i in range(n)]


def workloads():
    rows16 = chain_rows(16, 1)
    rows60 = chain_rows(60, 2)
    masks = [random.Random(3).getrandbits(60) for _ in range(1000)]
    return [
        ("all subsets have a least element (n=16)", lambda m: m.rows_all_subsets_have_least(rows16)),
        ("ordinal test over all 2^16 codes", lambda m: [m.code_is_ordinal(c) for c in range(1 << 16)]),
        ("order axioms (n=60) x 50", lambda m: [m.rows_is_order(rows60) for _ in range(50)]),
        ("least element of 1000 subsets (n=60)", lambda m: m.rows_subsets_have_least(rows60, masks)),
    ]


def main(argv=None) -> None:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--repeat", type=int, default=3)
    args = p.parse_args(argv)
    if _speedups is None:
        print("compiled extension not available; build it with `pip install -e . --no-build-isolation`")
    print(f"{'workload':44s} {'python s':>10s} {'cython s':>10s} {'speedup':>8s}")
    for name, fn in workloads():
        slow = min(timeit.repeat(lambda: fn(_purecore), number=1, repeat=args.repeat))
        if _speedups is None:
            print(f"{name:44s} {slow:10.4f} {'-':>10s} {'-':>8s}")
            continue
        assert fn(_purecore) == fn(_speedups)
        fast = min(timeit.repeat(lambda: fn(_speedups), number=1, repeat=args.repeat))
        print(f"{name:44s} {slow:10.4f} {fast:10.4f} {slow / fast:7.1f}x")


if __name__ == "__main__":
    main()
