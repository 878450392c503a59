"""Time the numba kernels against their numpy twins.

    python benchmarks/bench_kernels.py [--repeats 5]

Both paths are called directly, so the OTFUSE_DISABLE_NUMBA flag does not
matter here. The first numba call (compilation or cache load) is excluded.
"""

import argparse
import time

import numpy as np

from otfuse import _accel, kernels


def best_of(fn, repeats):
    times = []
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def cases(rng):
    for n in (64, 256):
        cost = rng.random((n, n))
        yield f"assignment n={n}", (lambda c=cost: kernels._assignment_numba(c)), \
            (lambda c=cost: kernels._assignment_numpy(c))

    sizes = np.array([2, 64, 64, 4], dtype=np.int64)
    n_params = sum(int(a * b + b) for a, b in zip(sizes[:-1], sizes[1:]))
    params = rng.normal(scale=0.3, size=n_params)
    for n_ep in (4, 32, 256):
        targets = rng.integers(1, 5, size=(n_ep, 2))
        uniforms = rng.random((n_ep, 50))
        args = (params, sizes, 0, targets, uniforms, 4, 0.1, False)
        yield f"rollout {n_ep}x50 2-64-64-4", (lambda a=args: kernels._rollout_numba(*a)), \
            (lambda a=args: kernels._rollout_numpy(*a))

    for n in (8, 64):
        c = rng.random((n, n))
        log_u = np.full(n, -np.log(n))

        def sink(fn, c=c, log_u=log_u, n=n):
            return lambda: fn(c, log_u, log_u, 0.05, np.zeros(n), np.zeros(n), 200, 0.0, 10)

        yield f"sinkhorn_log {n}x{n} 200 sweeps", sink(kernels._sinkhorn_log_numba), \
            sink(kernels._sinkhorn_log_numpy)


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeats", type=int, default=5)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()
    if not _accel.HAS_NUMBA:
        raise SystemExit("numba is not importable; nothing to compare")
    rng = np.random.default_rng(args.seed)
    print(f"{'kernel':32s} {'numba ms':>10s} {'numpy ms':>10s} {'speedup':>8s}")
    for name, fast, slow in cases(rng):
        fast()  # compile / load cache
        t_fast = best_of(fast, args.repeats)
        t_slow = best_of(slow, args.repeats)
        print(f"{name:32s} {1e3 * t_fast:10.3f} {1e3 * t_slow:10.3f} {t_slow / t_fast:8.1f}x")


if __name__ == "__main__":
    main()
