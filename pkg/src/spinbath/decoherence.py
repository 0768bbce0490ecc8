"""Exact decoherence-factor magnitudes |F_kk'(t)| as products over mode pairs.

For a central-spin pair of levels (k, k') the chain evolves under two
effective fields lambda_k and lambda_k'.  The overlap of the two evolved
environment states factorizes over the (j, -j) fermion pairs; each factor is
a two-level problem in the pair's even-parity sector, solved here in closed
form.  Within that sector the DM interaction cancels between j and -j, so the
exact magnitudes depend on the chain only through (N, gamma, lam): a
``ChainParams.D`` value influences quasiparticle energies (see
``chain_spectrum.mode_energy``) but not these magnitudes.  The brute-force
oracle in ``oracle.py`` pins that behavior independently.

Per-mode trig arguments use the pair frequencies 2*epsilon_j(lambda_k) and
angle mismatches against the base field; products accumulate in log space in
fixed ascending-j order, and any exactly-zero factor short-circuits the
product to exactly 0.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .chain_spectrum import (
    ChainParams,
    bogoliubov_angle,
    single_particle_energy,
)
from .errors import DegenerateMode, NumericalNegativity

__all__ = [
    "EnvPreparation",
    "FactorRequest",
    "DecoherenceSeries",
    "ground_mode_amplitude",
    "vacuum_mode_magnitude",
    "decoherence_factor",
]


class EnvPreparation(enum.Enum):
    """Initial state of the chain: its ground state at the base field, or the
    vacuum of the momentum-space fermions."""

    GROUND = "ground"
    VACUUM = "vacuum"

    @classmethod
    def from_string(cls, name: str) -> "EnvPreparation":
        try:
            return cls(name.lower())
        except ValueError:
            raise ValueError(f"preparation must be 'ground' or 'vacuum', got {name!r}")


@dataclass(frozen=True)
class FactorRequest:
    """One decoherence-factor computation: chain, the two effective fields,
    the preparation, and the time grid (strictly increasing, t >= 0)."""

    chain: ChainParams
    lambda_k: float
    lambda_kp: float
    prep: EnvPreparation
    times: np.ndarray

    def __post_init__(self):
        times = np.asarray(self.times, dtype=np.float64)
        if times.ndim != 1 or times.size == 0:
            raise ValueError("times must be a nonempty 1-D array")
        if not np.all(np.isfinite(times)) or times[0] < 0.0:
            raise ValueError("times must be finite and nonnegative")
        if times.size > 1 and not np.all(np.diff(times) > 0.0):
            raise ValueError("times must be strictly increasing")
        if not (math.isfinite(self.lambda_k) and math.isfinite(self.lambda_kp)):
            raise ValueError("effective fields must be finite")
        object.__setattr__(self, "times", times)


@dataclass(frozen=True)
class DecoherenceSeries:
    """Time grid plus |F(t)| values; ``per_mode_log`` optionally carries the
    (T, L) matrix of per-mode log-magnitude contributions."""

    times: np.ndarray
    magnitudes: np.ndarray
    per_mode_log: np.ndarray | None = None


def ground_mode_amplitude(
    j: int, lambda_k: float, lambda_kp: float, t: float, chain: ChainParams
) -> complex:
    """Complex per-mode overlap for the ground-state preparation.

    Overall dynamical phases common to both branches are dropped (they cancel
    in magnitudes); the modulus is the per-mode decoherence factor and never
    exceeds 1 beyond rounding.
    """
    theta_base = bogoliubov_angle(j, chain.lam, chain)
    theta_k = bogoliubov_angle(j, lambda_k, chain)
    theta_kp = bogoliubov_angle(j, lambda_kp, chain)
    a = 2.0 * single_particle_energy(j, lambda_k, chain) * t
    b = 2.0 * single_particle_energy(j, lambda_kp, chain) * t
    ck = math.cos(theta_k - theta_base)
    ckp = math.cos(theta_kp - theta_base)
    ckk = math.cos(theta_k - theta_kp)
    sa, ca = math.sin(a), math.cos(a)
    sb, cb = math.sin(b), math.cos(b)
    return complex(ca * cb + sa * sb * ckk, sa * cb * ck - ca * sb * ckp)


def vacuum_mode_magnitude(
    j: int, lambda_k: float, lambda_kp: float, t: float, chain: ChainParams
) -> float:
    """Per-mode magnitude in [0, 1] for the vacuum preparation.

    Computed as the square root of a 1 - (...) - (...) bracket; brackets in
    [-BRACKET_TOL, 0) are rounding noise near exact zeros and clamp to 0,
    anything more negative raises NumericalNegativity.
    """
    theta_k = bogoliubov_angle(j, lambda_k, chain)
    theta_kp = bogoliubov_angle(j, lambda_kp, chain)
    a = 2.0 * single_particle_energy(j, lambda_k, chain) * t
    b = 2.0 * single_particle_energy(j, lambda_kp, chain) * t
    sa, ca = math.sin(a), math.cos(a)
    sb, cb = math.sin(b), math.cos(b)
    u = sa * sb * math.sin(theta_k - theta_kp)
    v = sa * cb * math.sin(theta_k) - ca * sb * math.sin(theta_kp)
    bracket = 1.0 - u * u - v * v
    if bracket < -_kernels.BRACKET_TOL:
        raise NumericalNegativity(
            f"vacuum bracket {bracket} < -{_kernels.BRACKET_TOL} at j={j}, t={t}"
        )
    if bracket < 0.0:
        bracket = 0.0
    return math.sqrt(bracket)


def _mode_geometry(chain: ChainParams, lambda_k: float, lambda_kp: float):
    """Per-mode tables shared by both preparations.

    Raises DegenerateMode if either effective field closes a mode gap.
    """
    N = chain.N
    phi = 2.0 * np.pi * np.arange(1, N // 2) / N
    y = chain.gamma * np.sin(phi)
    xk = lambda_k - np.cos(phi)
    xkp = lambda_kp - np.cos(phi)
    eps_k = np.hypot(xk, y)
    eps_kp = np.hypot(xkp, y)
    for eps, field in ((eps_k, lambda_k), (eps_kp, lambda_kp)):
        if np.any(eps == 0.0):
            j_bad = int(np.argmin(eps)) + 1
            raise DegenerateMode(
                f"mode j={j_bad} is gapless at lambda_k={field}; angle undefined"
            )
    return phi, y, xk, xkp, eps_k, eps_kp


def _ground_tables(chain: ChainParams, lambda_k: float, lambda_kp: float):
    phi, y, xk, xkp, eps_k, eps_kp = _mode_geometry(chain, lambda_k, lambda_kp)
    x0 = chain.lam - np.cos(phi)
    eps0 = np.hypot(x0, y)
    if np.any(eps0 == 0.0):
        j_bad = int(np.argmin(eps0)) + 1
        raise DegenerateMode(
            f"mode j={j_bad} is gapless at the base field {chain.lam}; angle undefined"
        )
    wk = 2.0 * eps_k
    wkp = 2.0 * eps_kp
    # cos of angle differences, directly from the Cartesian components
    ck = (xk * x0 + y * y) / (eps_k * eps0)
    ckp = (xkp * x0 + y * y) / (eps_kp * eps0)
    ckk = (xk * xkp + y * y) / (eps_k * eps_kp)
    return wk, wkp, ck, ckp, ckk


def _vacuum_tables(chain: ChainParams, lambda_k: float, lambda_kp: float):
    phi, y, xk, xkp, eps_k, eps_kp = _mode_geometry(chain, lambda_k, lambda_kp)
    wk = 2.0 * eps_k
    wkp = 2.0 * eps_kp
    sk = y / eps_k
    skp = y / eps_kp
    sd = y * (xkp - xk) / (eps_k * eps_kp)  # sin(theta_k - theta_kp)
    return wk, wkp, sk, skp, sd


def decoherence_factor(req: FactorRequest, with_per_mode_log: bool = False) -> DecoherenceSeries:
    """|F(t)| over the requested time grid as a product over paired modes."""
    times = req.times
    per_mode = None
    if req.prep is EnvPreparation.GROUND:
        tables = _ground_tables(req.chain, req.lambda_k, req.lambda_kp)
        if _kernels.numba_enabled():
            mags = _kernels.ground_series_numba(times, *tables)
        else:
            mags = _kernels.ground_series_numpy(times, *tables)
        if with_per_mode_log:
            per_mode = _kernels.ground_log_matrix(times, *tables)
    else:
        tables = _vacuum_tables(req.chain, req.lambda_k, req.lambda_kp)
        if _kernels.numba_enabled():
            mags = _kernels.vacuum_series_numba(times, *tables)
        else:
            mags = _kernels.vacuum_series_numpy(times, *tables)
        if np.any(mags < 0.0):
            t_bad = float(times[int(np.argmax(mags < 0.0))])
            raise NumericalNegativity(
                f"vacuum bracket below -{_kernels.BRACKET_TOL} at t={t_bad}"
            )
        if with_per_mode_log:
            per_mode = _kernels.vacuum_log_matrix(times, *tables)
    return DecoherenceSeries(times=times, magnitudes=mags, per_mode_log=per_mode)
