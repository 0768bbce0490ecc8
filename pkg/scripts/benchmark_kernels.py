#!/usr/bin/env python3
"""Benchmark the compiled decoherence kernels against the numpy fallback.

Runs the same mode-product series through both implementations (selected
via the SPINBATH_KERNEL environment flag), checks they agree to 1e-12, and
prints a timing table.
"""

import os
import time

import numpy as np

from spinbath import ChainParams, EnvPreparation, FactorRequest, decoherence_factor
from spinbath._kernels import HAVE_NUMBA, warmup

CASES = [
    # (N, time samples, prep)
    (100, 201, EnvPreparation.GROUND),
    (400, 201, EnvPreparation.GROUND),
    (400, 2001, EnvPreparation.GROUND),
    (2000, 2001, EnvPreparation.GROUND),
    (400, 2001, EnvPreparation.VACUUM),
    (2000, 2001, EnvPreparation.VACUUM),
]
REPEATS = 5


def run_case(N, samples, prep, kernel):
    os.environ["SPINBATH_KERNEL"] = kernel
    req = FactorRequest(
        chain=ChainParams(N=N, gamma=0.5, lam=1.0, D=0.5),
        lambda_k=1.15,
        lambda_kp=0.85,
        prep=prep,
        times=np.linspace(0.0, 20.0, samples),
    )
    best = float("inf")
    for _ in range(REPEATS):
        start = time.perf_counter()
        series = decoherence_factor(req)
        best = min(best, time.perf_counter() - start)
    return best, series.magnitudes


def main():
    if not HAVE_NUMBA:
        print("numba unavailable; nothing to compare")
        return
    warmup()  # compile outside the timed region
    print(f"{'N':>6} {'samples':>8} {'prep':>7} {'numpy[ms]':>10} "
          f"{'numba[ms]':>10} {'speedup':>8} {'max|diff|':>10}")
    for N, samples, prep in CASES:
        t_np, mags_np = run_case(N, samples, prep, "numpy")
        t_nb, mags_nb = run_case(N, samples, prep, "numba")
        diff = float(np.max(np.abs(mags_np - mags_nb)))
        assert diff <= 1e-12, f"kernel mismatch {diff:g} for N={N}"
        print(f"{N:>6} {samples:>8} {prep.value:>7} {1e3 * t_np:>10.3f} "
              f"{1e3 * t_nb:>10.3f} {t_np / t_nb:>8.2f} {diff:>10.2e}")
    os.environ.pop("SPINBATH_KERNEL", None)


if __name__ == "__main__":
    main()
