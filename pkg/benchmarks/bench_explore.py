"""Time the exploration kernel under numba and plain numpy on swept systems.

    python3 benchmarks/bench_explore.py [--systems N] [--seed S] [--repeat R]

Every system is explored with both backends; the script fails if any
result differs.
"""

import argparse
import sys
import time

import numpy as np

from tecsoe.optimizer import initial_plan, optimize
from tecsoe.simcheck import lower_to_sim
from tecsoe.simcheck.explore import DEFAULT_STATE_BOUND, state_strides
from tecsoe.simcheck.kernels import explore_kernel, explore_jit
from tecsoe.sweep import SweepBounds, sweep

BOUNDS = {
    "default": SweepBounds(),
    "large": SweepBounds(max_cells=6, max_tasks=4, max_invocations=6, max_depth=3),
}


def programs(n, seed, bounds):
    for s in sweep(n, base_seed=seed, bounds=bounds):
        model, flows = s.load()
        for plan in (initial_plan(model, flows), optimize(model, flows)):
            prog = lower_to_sim(model, flows, plan)
            yield prog.arrays() + (state_strides(prog), np.int64(DEFAULT_STATE_BOUND))


def timed(inputs, backend, repeat):
    best, results = float("inf"), None
    for _ in range(repeat):
        start = time.perf_counter()
        results = [explore_kernel(*args, backend=backend) for args in inputs]
        best = min(best, time.perf_counter() - start)
    return best, results


def same(a, b):
    return all(np.array_equal(np.asarray(x), np.asarray(y)) for x, y in zip(a, b, strict=True))


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--systems", type=int, default=100)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)
    if explore_jit is None:
        print("numba is not installed; nothing to compare", file=sys.stderr)
        return 1

    start = time.perf_counter()
    explore_kernel(*next(programs(1, args.seed, BOUNDS["default"])), backend="numba")
    print(f"numba compile/load: {time.perf_counter() - start:.2f}s")

    print(f"{'workload':<8} {'programs':>8} {'states':>10} {'numpy s':>9} {'numba s':>9} {'speedup':>8}")
    ok = True
    for name, bounds in BOUNDS.items():
        inputs = list(programs(args.systems, args.seed, bounds))
        t_py, r_py = timed(inputs, "numpy", args.repeat)
        t_jit, r_jit = timed(inputs, "numba", args.repeat)
        match = all(same(a, b) for a, b in zip(r_py, r_jit, strict=True))
        ok &= match
        states = sum(int(r[0]) for r in r_py)
        print(f"{name:<8} {len(inputs):>8} {states:>10} {t_py:>9.3f} {t_jit:>9.3f} "
              f"{t_py / t_jit:>7.1f}x{'' if match else '  MISMATCH'}")
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
