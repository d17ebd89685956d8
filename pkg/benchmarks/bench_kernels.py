"""Time the full-sweep kernels on both backends.

    python3 benchmarks/bench_kernels.py [--repeat N]
"""
import argparse
import timeit

from cellblock import kernels

SWEEPS = {
    "complete_table": lambda mod: [mod.complete_table(k) for k in range(4)],
    "irreducible_table": lambda mod: [mod.irreducible_table(k) for k in range(4)],
    "count_table": lambda mod: [mod.count_table(k) for k in range(4)],
    "canonical": lambda mod: [mod.canonical(m) for m in range(kernels.NSETS)],
}


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    backends = [("python", kernels.python_backend)]
    if kernels.compiled_backend is None:
        print("compiled extension not available; timing the Python backend only")
    else:
        backends.append(("cython", kernels.compiled_backend))
    print(f"{'sweep':<20}" + "".join(f"{name:>12}" for name, _ in backends) + "     speedup")
    for sweep, fn in SWEEPS.items():
        times = [min(timeit.repeat(lambda: fn(mod), number=1, repeat=args.repeat))
                 for _, mod in backends]
        ratio = f"{times[0] / times[1]:>10.1f}x" if len(times) == 2 else ""
        print(f"{sweep:<20}" + "".join(f"{t * 1e3:>10.2f}ms" for t in times) + ratio)


if __name__ == "__main__":
    main()
