"""Hot loops for the mode-product decoherence series.

Two interchangeable implementations of each series: a numba-compiled kernel
(parallel over time samples, strictly sequential ascending-j mode reduction
inside each sample, so results are bit-identical for any thread count) and a
vectorized pure-numpy fallback.  Selection: numba when importable, unless
SPINBATH_KERNEL=numpy requests the fallback.

Inputs are precomputed per-mode tables (see decoherence._ground_tables /
._vacuum_tables); outputs are magnitude arrays.  A vacuum bracket below
-BRACKET_TOL marks the sample with -1.0 so the caller can raise.
"""

import contextlib
import os
import warnings

import numpy as np

try:
    from numba import njit, prange

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - exercised only without numba installed
    HAVE_NUMBA = False

    def njit(*args, **kwargs):  # type: ignore
        def wrap(fn):
            return fn

        return wrap

    prange = range  # type: ignore

BRACKET_TOL = 1e-6


def numba_enabled() -> bool:
    return HAVE_NUMBA and os.environ.get("SPINBATH_KERNEL", "numba").lower() != "numpy"


@njit(cache=True, parallel=True)
def _ground_numba(times, wk, wkp, ck, ckp, ckk, out):
    for ti in prange(times.shape[0]):
        t = times[ti]
        acc = 0.0
        hit_zero = False
        for j in range(wk.shape[0]):
            a = wk[j] * t
            b = wkp[j] * t
            sa = np.sin(a)
            ca = np.cos(a)
            sb = np.sin(b)
            cb = np.cos(b)
            re = ca * cb + sa * sb * ckk[j]
            im = sa * cb * ck[j] - ca * sb * ckp[j]
            m2 = re * re + im * im
            if m2 <= 0.0:
                hit_zero = True
                break
            acc += 0.5 * np.log(m2)
        out[ti] = 0.0 if hit_zero else np.exp(acc)


@njit(cache=True, parallel=True)
def _vacuum_numba(times, wk, wkp, sk, skp, sd, out):
    for ti in prange(times.shape[0]):
        t = times[ti]
        acc = 0.0
        hit_zero = False
        bad = False
        for j in range(wk.shape[0]):
            a = wk[j] * t
            b = wkp[j] * t
            sa = np.sin(a)
            ca = np.cos(a)
            sb = np.sin(b)
            cb = np.cos(b)
            u = sa * sb * sd[j]
            v = sa * cb * sk[j] - ca * sb * skp[j]
            br = 1.0 - u * u - v * v
            if br < -BRACKET_TOL:
                bad = True
                break
            if br <= 0.0:
                hit_zero = True
                break
            acc += 0.5 * np.log(br)
        if bad:
            out[ti] = -1.0
        elif hit_zero:
            out[ti] = 0.0
        else:
            out[ti] = np.exp(acc)


@contextlib.contextmanager
def _quiet_tbb():
    # the first parallel launch probes TBB and warns if only an older
    # version is around; numba still runs on another threading layer, so
    # that one message is pure noise for callers
    with warnings.catch_warnings():
        warnings.filterwarnings("ignore", category=Warning, message=".*TBB.*")
        yield


def ground_series_numba(times, wk, wkp, ck, ckp, ckk):
    out = np.empty(times.shape[0], dtype=np.float64)
    with _quiet_tbb():
        _ground_numba(times, wk, wkp, ck, ckp, ckk, out)
    return out


def vacuum_series_numba(times, wk, wkp, sk, skp, sd):
    out = np.empty(times.shape[0], dtype=np.float64)
    with _quiet_tbb():
        _vacuum_numba(times, wk, wkp, sk, skp, sd, out)
    return out


def ground_log_matrix(times, wk, wkp, ck, ckp, ckk):
    """(T, L) matrix of per-mode log magnitudes, pure numpy."""
    a = np.outer(times, wk)
    b = np.outer(times, wkp)
    re = np.cos(a) * np.cos(b) + np.sin(a) * np.sin(b) * ckk
    im = np.sin(a) * np.cos(b) * ck - np.cos(a) * np.sin(b) * ckp
    m2 = re * re + im * im
    with np.errstate(divide="ignore"):
        return 0.5 * np.log(m2)


def _vacuum_brackets(times, wk, wkp, sk, skp, sd):
    a = np.outer(times, wk)
    b = np.outer(times, wkp)
    u = np.sin(a) * np.sin(b) * sd
    v = np.sin(a) * np.cos(b) * sk - np.cos(a) * np.sin(b) * skp
    return 1.0 - u * u - v * v


def vacuum_log_matrix(times, wk, wkp, sk, skp, sd):
    """(T, L) matrix of per-mode log magnitudes, pure numpy."""
    br = np.clip(_vacuum_brackets(times, wk, wkp, sk, skp, sd), 0.0, None)
    with np.errstate(divide="ignore"):
        return 0.5 * np.log(br)


def ground_series_numpy(times, wk, wkp, ck, ckp, ckk):
    logs = ground_log_matrix(times, wk, wkp, ck, ckp, ckk)
    total = logs.sum(axis=1)
    return np.where(np.isneginf(total), 0.0, np.exp(total))


def vacuum_series_numpy(times, wk, wkp, sk, skp, sd):
    br = _vacuum_brackets(times, wk, wkp, sk, skp, sd)
    bad_rows = (br < -BRACKET_TOL).any(axis=1)
    with np.errstate(divide="ignore"):
        logs = 0.5 * np.log(np.clip(br, 0.0, None))
    total = logs.sum(axis=1)
    out = np.where(np.isneginf(total), 0.0, np.exp(total))
    out[bad_rows] = -1.0
    return out


def warmup():
    """Compile the numba kernels on tiny inputs (no-op on the numpy path)."""
    if not numba_enabled():
        return
    t = np.array([0.0, 0.1])
    m = np.array([1.0, 2.0])
    c = np.array([0.5, 0.5])
    ground_series_numba(t, m, m, c, c, c)
    vacuum_series_numba(t, m, m, c, c, c)
