"""Compare the compiled and pure-Python kernel backends.

Run from the repository root after building the extension:

    python3 benchmarks/bench_kernels.py [--repeat N]

Kernel timings use both backends in one process; end-to-end timings run the
CLI in subprocesses with ``EQSPRINGER_PURE_PYTHON`` toggled.
"""

import argparse
import os
import random
import subprocess
import sys
import time
import timeit

from eqspringer import kernels


def kernel_cases(rng):
    nvars = 16
    def rand_terms(k):
        return {tuple(rng.randint(0, 3) for _ in range(nvars)): rng.randint(-99, 99) or 1 for _ in range(k)}
    a, b = rand_terms(60), rand_terms(60)
    target = tuple(rng.randrange(-1, nvars) for _ in range(nvars))
    big = rand_terms(2000)
    rows = [[rng.randint(-9, 9) for _ in range(60)] for _ in range(80)]
    return {
        "mul_terms 60x60": lambda mod: mod.mul_terms(a, b),
        "rename_terms 2000 terms": lambda mod: mod.rename_terms(big, target),
        "rank 80x60": lambda mod: mod.rank(rows, 60),
    }


END_TO_END = [
    ["verify", "--lambda", "3,2,1", "--suite", "vanishing"],
    ["hilbert", "--lambda", "1,1,1,1,1,1"],
    ["rank", "--lambda", "2,1,1,1"],
]


def run_cli(argv, pure):
    env = dict(os.environ, EQSPRINGER_PURE_PYTHON="1" if pure else "0")
    start = time.perf_counter()
    subprocess.run([sys.executable, "-m", "eqspringer", *argv], env=env, check=True, stdout=subprocess.DEVNULL)
    return time.perf_counter() - start


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()

    backends = kernels.available_backends()
    if "cython" not in backends:
        print("compiled backend not built; only the pure-Python kernels are timed")
    cases = kernel_cases(random.Random(0))
    names = sorted(backends)
    print(f"{'kernel':<26}" + "".join(f"{n:>12}" for n in names) + ("     speedup" if len(names) == 2 else ""))
    for label, fn in cases.items():
        times = {}
        for name in names:
            mod = backends[name]
            times[name] = min(timeit.repeat(lambda: fn(mod), number=3, repeat=args.repeat)) / 3
        row = f"{label:<26}" + "".join(f"{times[n] * 1e3:>10.2f}ms" for n in names)
        if len(names) == 2:
            row += f"{times['python'] / times['cython']:>11.1f}x"
        print(row)

    if "cython" in backends:
        print()
        print(f"{'command':<44}{'cython':>10}{'python':>10}")
        for argv in END_TO_END:
            fast = min(run_cli(argv, False) for _ in range(2))
            slow = min(run_cli(argv, True) for _ in range(2))
            print(f"{' '.join(argv):<44}{fast:>9.2f}s{slow:>9.2f}s")


if __name__ == "__main__":
    main()
