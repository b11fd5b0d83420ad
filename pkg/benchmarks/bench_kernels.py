"""Numba vs pure-numpy timings for the hot kernels.

    python benchmarks/bench_kernels.py [--repeats 3]

Both backends run in the same process (``backend=`` forces a path), and each
pair of outputs is checked for agreement before timing is reported. The
first numba call per kernel is excluded as compilation / cache load.
"""
import argparse
import time

import numpy as np

from fsoest import _accel
from fsoest.channel import SystemConfig, sample_channel_state, synthesize_measurement
from fsoest.estimators.map_search import MapGridSpec, map_estimate
from fsoest.kernels import psf_cell_masses


def best_of(fn, repeats):
    times = []
    for _ in range(repeats):
        t0 = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t0)
    return min(times), out


def main():
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--repeats", type=int, default=3)
    ap.add_argument("--psf-shifts", type=int, default=200)
    args = ap.parse_args()
    if not _accel.HAVE_NUMBA:
        raise SystemExit("numba is not installed; nothing to compare")

    config = SystemConfig(n_lens=16)
    rng = np.random.default_rng(0)
    block = synthesize_measurement(sample_channel_state(config, rng), config, rng)
    shifts = rng.uniform(-1, 1, size=(args.psf_shifts, 2)) * config.quad_side / 2

    cases = {
        "map_estimate (n_lens=16, adaptive)":
            lambda b: map_estimate(block, config, MapGridSpec(), backend=b).objective,
        "map_estimate (n_lens=16, fixed fades)":
            lambda b: map_estimate(block, config, MapGridSpec(fade_search="fixed"), backend=b).objective,
        f"psf_cell_masses ({args.psf_shifts} shifts, 2000^2 grid)":
            lambda b: psf_cell_masses(shifts, config.quad_side, config.spot_width, backend=b),
    }
    print(f"{'kernel':45s} {'numpy [s]':>10s} {'numba [s]':>10s} {'speedup':>8s}")
    for name, run in cases.items():
        run("numba")                                       # compile / load cache
        t_nb, out_nb = best_of(lambda: run("numba"), args.repeats)
        t_np, out_np = best_of(lambda: run("numpy"), args.repeats)
        if not np.allclose(out_nb, out_np, rtol=1e-9, atol=1e-12):
            raise SystemExit(f"{name}: backends disagree")
        print(f"{name:45s} {t_np:10.3f} {t_nb:10.3f} {t_np / t_nb:7.1f}x")


if __name__ == "__main__":
    main()
