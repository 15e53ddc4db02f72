"""Compare the compiled kernels against the pure-Python fallback.

Run as: python benchmarks/bench_kernels.py
"""

import random
import time

from zigzagmetric import _pykernels

try:
    from zigzagmetric import _ckernels
except ImportError:
    _ckernels = None


def random_antichain(rng, maxlen=4, count=3):
    words = {
        "".join(rng.choice("+-") for _ in range(rng.randint(0, maxlen)))
        for _ in range(count)
    }
    return _pykernels.min_antichain(words)


def bench(name, fn, args_list):
    t0 = time.perf_counter()
    for args in args_list:
        fn(*args)
    dt = time.perf_counter() - t0
    print(f"  {name:24s} {dt * 1000:9.1f} ms  ({len(args_list)} calls)")
    return dt


def main():
    rng = random.Random(1)
    chains = [random_antichain(rng) for _ in range(2000)]
    member_args = [
        ("".join(rng.choice("+-") for _ in range(6)), c) for c in chains
    ]
    anti_args = [
        (
            [
                "".join(rng.choice("+-") for _ in range(rng.randint(0, 6)))
                for _ in range(8)
            ],
        )
        for _ in range(2000)
    ]
    cancel_args = [(c, 10) for c in chains]

    backends = [("python", _pykernels)]
    if _ckernels is not None:
        backends.append(("compiled", _ckernels))
    else:
        print("compiled backend not available; showing python only")

    times = {}
    for label, mod in backends:
        print(f"{label}:")
        times[label] = (
            bench("member", mod.member, member_args)
            + bench("min_antichain", mod.min_antichain, anti_args)
            + bench("cancellation_search", mod.cancellation_search, cancel_args)
        )
    if len(times) == 2:
        print(f"speedup: {times['python'] / times['compiled']:.1f}x")


if __name__ == "__main__":
    main()
