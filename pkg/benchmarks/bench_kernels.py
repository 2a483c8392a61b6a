#!/usr/bin/env python3
"""Benchmark the form-evaluation kernel: compiled extension vs numpy fallback.

Batch sizes mirror the real sweeps: 6 rows (one family), 60 (orbit), 360
(product values over even relabelings), 720 (over all relabelings).

    python benchmarks/bench_kernels.py
    python benchmarks/bench_kernels.py --end-to-end   # adds a verify-run timing
"""

import argparse
import os
import statistics
import subprocess
import sys
import time

import numpy as np

from quinticlab.kernels import implementations

BATCH_SIZES = (6, 60, 360, 720)
REPEATS = 400


def time_impl(impl, x, idx) -> float:
    """Median seconds per call over REPEATS calls (after warmup)."""
    for _ in range(10):
        impl(x, idx)
    times = []
    for _ in range(7):
        start = time.perf_counter()
        for _ in range(REPEATS):
            impl(x, idx)
        times.append((time.perf_counter() - start) / REPEATS)
    return statistics.median(times)


def kernel_benchmark() -> None:
    rng = np.random.default_rng(0)
    x = np.ascontiguousarray(rng.normal(size=5) + 1j * rng.normal(size=5))
    impls = implementations()
    names = sorted(impls)
    print(f"kernel benchmark ({REPEATS} calls per timing, median of 7)")
    header = f"{'rows':>6} " + "".join(f"{name:>14} " for name in names)
    if "compiled" in impls and "numpy" in impls:
        header += f"{'speedup':>9}"
    print(header)
    for k in BATCH_SIZES:
        idx = np.ascontiguousarray(rng.integers(0, 5, size=(k, 5)), dtype=np.int64)
        per_call = {name: time_impl(impls[name], x, idx) for name in names}
        row = f"{k:>6} " + "".join(
            f"{per_call[name] * 1e6:>12.2f}us " for name in names
        )
        if "compiled" in per_call and "numpy" in per_call:
            row += f"{per_call['numpy'] / per_call['compiled']:>8.1f}x"
        print(row)


def end_to_end() -> None:
    """Time a fixed verification workload under each backend in subprocesses."""
    script = (
        "import time, quinticlab\n"
        "from quinticlab.verify import run_verify\n"
        "start = time.perf_counter()\n"
        "run_verify(seed=1, n=40)\n"
        "print(f'{quinticlab.backend_name()} {time.perf_counter() - start:.3f}s')\n"
    )
    print("\nend-to-end: run_verify(seed=1, n=40)")
    for pure in ("", "1"):
        env = dict(os.environ)
        if pure:
            env["QUINTICLAB_PURE"] = pure
        else:
            env.pop("QUINTICLAB_PURE", None)
        out = subprocess.run(
            [sys.executable, "-c", script], env=env, capture_output=True, text=True
        )
        sys.stdout.write(out.stdout)
        if out.returncode != 0:
            sys.stderr.write(out.stderr)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--end-to-end", action="store_true")
    args = parser.parse_args()
    kernel_benchmark()
    if args.end_to_end:
        end_to_end()


if __name__ == "__main__":
    main()
