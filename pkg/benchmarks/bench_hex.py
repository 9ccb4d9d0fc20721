"""Compare the compiled and pure-Python hex kernels.

    python benchmarks/bench_hex.py [--repeat 3]
"""

import argparse
import random
import time

from ferrers import _hexcore_py

try:
    from ferrers import _hexcore
except ImportError:
    _hexcore = None


def sweep_4x4(kernel):
    return kernel.sweep(4, 4, 0, 1 << 16)


def samples_11x11(kernel, count=1000, seed=0):
    rng = random.Random(seed)
    failures = 0
    for _ in range(count):
        cells = [rng.getrandbits(1) for _ in range(121)]
        failures += kernel.check(11, 11, cells) is not None
    return failures


CASES = {
    "exhaustive 4x4 (65536 boards)": sweep_4x4,
    "random 11x11 (1000 boards)": samples_11x11,
}


def best_of(fn, kernel, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(kernel)
        times.append(time.perf_counter() - t0)
    return min(times)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if _hexcore is None:
        print("compiled kernel not built; only timing the Python fallback")
    print(f"{'case':34} {'python':>10} {'compiled':>10} {'speedup':>8}")
    for name, fn in CASES.items():
        py = best_of(fn, _hexcore_py, args.repeat)
        if _hexcore is None:
            print(f"{name:34} {py:9.3f}s {'-':>10} {'-':>8}")
            continue
        cc = best_of(fn, _hexcore, args.repeat)
        print(f"{name:34} {py:9.3f}s {cc:9.4f}s {py / cc:7.0f}x")


if __name__ == "__main__":
    main()
