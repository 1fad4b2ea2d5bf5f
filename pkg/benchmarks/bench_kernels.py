"""Time the compiled kernels against their pure-Python fallbacks.

    python benchmarks/bench_kernels.py [--repeat 5]

Prints best-of-N wall time per kernel and backend, and the speedup.
"""
import argparse
import random
import timeit

from contpaths import kernels
from contpaths.contcoeff import series_route_table


def workloads():
    table = series_route_table(3, 30)
    items = sorted(table.coeffs.items())
    exps = [e for e, _ in items]
    coefs = [float(c) for _, c in items]
    rng = random.Random(1)
    points = [[rng.uniform(0, 4) for _ in range(3)] for _ in range(20)]
    qs = [rng.uniform(0, 100) for _ in range(2000)]
    return {
        "scaled_bessel_sum x2000": lambda m: [m.scaled_bessel_sum(1, q, 1e-17, 10_000) for q in qs],
        "smirnov_tally d=4 n=9": lambda m: m.smirnov_tally(4, 9),
        f"eval_bands {len(coefs)} terms x20": lambda m: [m.eval_bands(exps, coefs, p, table.cap) for p in points],
    }


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()
    backends = kernels.available_backends()
    if "cython" not in backends:
        print("compiled extension not built; only the pure-Python backend is timed")
    print(f"{'kernel':<34}" + "".join(f"{name:>12}" for name in backends) + f"{'speedup':>10}")
    for label, job in workloads().items():
        times = {}
        for name, module in backends.items():
            times[name] = min(timeit.repeat(lambda: job(module), number=1, repeat=args.repeat))
        row = f"{label:<34}" + "".join(f"{times[n] * 1e3:>10.2f}ms" for n in backends)
        if "cython" in times:
            row += f"{times['python'] / times['cython']:>9.1f}x"
        print(row)


if __name__ == "__main__":
    main()
