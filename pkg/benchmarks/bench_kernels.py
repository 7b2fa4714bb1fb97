"""Time the compiled and pure-Python cyclotomic kernels on the same inputs.

    python3 benchmarks/bench_kernels.py [--conductor 420] [--repeat 200]

Each kernel runs on both backends; the outputs are compared before timing.
"""

from __future__ import annotations

import argparse
import math
import random
import timeit

from mixedbraid import kernels
from mixedbraid.rep import gram_matrix, signature_from_gram
from mixedbraid.sweep import SweepPlan


def random_vector(rng: random.Random, M: int, bound: int = 50) -> tuple:
    return tuple(rng.randint(-bound, bound) for _ in range(M))


def bench_kernels(M: int, repeat: int) -> None:
    rng = random.Random(0)
    a, b = random_vector(rng, M), random_vector(rng, M)
    unit = next(u for u in range(M // 2 + 1, M) if math.gcd(u, M) == 1)
    cases = {
        "mul": lambda pure: kernels.mul(a, b, M, pure=pure),
        "lincomb": lambda pure: kernels.lincomb(a, 3, b, -7, pure=pure),
        "permute_reduce": lambda pure: kernels.permute_reduce(a, unit, M, pure=pure),
    }
    print(f"kernels at conductor {M}, {repeat} calls each (compiled backend: {kernels.BACKEND})")
    for name, fn in cases.items():
        if fn(True) != fn(False):
            raise SystemExit(f"{name}: backends disagree")
        pure = timeit.timeit(lambda: fn(True), number=repeat)
        compiled = timeit.timeit(lambda: fn(False), number=repeat)
        print(f"  {name:15s} python {pure / repeat * 1e6:9.1f} us   compiled {compiled / repeat * 1e6:9.1f} us   x{pure / compiled:6.1f}")


def bench_end_to_end(count: int) -> None:
    """Signature of Gram matrices, the hot loop of the largest sweep."""
    chars = list(SweepPlan(4, 6, 7, budget=count, seed=1).instances(lambda r: r.nondegenerate))
    grams = [gram_matrix(r.cover, r) for r in chars]
    original = kernels._ckernels
    timings = {}
    for label, backend in (("python", None), ("compiled", original)):
        kernels._ckernels = backend
        timings[label] = timeit.timeit(lambda: [signature_from_gram(G) for G in grams], number=1)
    kernels._ckernels = original
    print(f"signature of {len(grams)} Gram matrices: python {timings['python']:.2f} s, compiled {timings['compiled']:.2f} s")


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--conductor", type=int, default=420)
    parser.add_argument("--repeat", type=int, default=200)
    parser.add_argument("--characters", type=int, default=100)
    args = parser.parse_args()
    if kernels._ckernels is None:
        raise SystemExit("compiled extension not available; build with pip install -e . --no-build-isolation")
    bench_kernels(args.conductor, args.repeat)
    bench_end_to_end(args.characters)


if __name__ == "__main__":
    main()
