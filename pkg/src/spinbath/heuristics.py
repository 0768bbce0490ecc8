"""Closed-form approximations of |F_kk'(t)| in each coupling regime.

These are short-time / stationary-phase approximations built from truncated
mode sums; only the final boxed forms are exposed.  They keep the printed DM
terms of their derivations even though the exact magnitudes are DM-free (the
approximations are reported as-is and compared against the exact product only
qualitatively).

Regime naming: preparation (ground/vacuum) x coupling strength (weak/strong)
x field position (critical ~ lambda near 1 / far), with the strong-coupling
ground case split by the relative sign of the two level shifts.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .chain_spectrum import ChainParams
from .errors import SingularField, WrongRegime, ZeroAlpha

__all__ = [
    "HeuristicRegime",
    "EnvelopeShape",
    "cutoff_sum",
    "tau_ground_critical",
    "approx_ground_weak",
    "tau_ground_far",
    "strong_coupling_envelope",
    "strong_coupling_oscillation",
    "vacuum_strong",
    "tau_vacuum_critical",
    "tau_vacuum_far",
    "heuristic_series",
]


class HeuristicRegime(enum.Enum):
    GROUND_WEAK_CRITICAL = "ground-weak-critical"
    GROUND_WEAK_FAR = "ground-weak-far"
    GROUND_STRONG_OPPOSITE = "ground-strong-opposite"
    GROUND_STRONG_SAME = "ground-strong-same"
    VACUUM_STRONG = "vacuum-strong"
    VACUUM_WEAK_CRITICAL = "vacuum-weak-critical"
    VACUUM_WEAK_FAR = "vacuum-weak-far"

    @classmethod
    def from_string(cls, name: str) -> "HeuristicRegime":
        try:
            return cls(name.lower())
        except ValueError:
            valid = ", ".join(r.value for r in cls)
            raise ValueError(f"unknown regime {name!r}; expected one of: {valid}")


@dataclass(frozen=True)
class EnvelopeShape:
    """Oscillation period and Gaussian width of a strong-coupling envelope;
    either may be infinite when the corresponding decay channel vanishes."""

    period: float
    width: float

    def __post_init__(self):
        if not (self.period > 0.0 and self.width > 0.0):
            raise ValueError("period and width must be positive")


def cutoff_sum(i: int, Kc: int, N: int) -> float:
    """Partial sum over the Kc lowest modes of (2*pi*j/N)**i."""
    if i < 1:
        raise ValueError(f"order i must be >= 1, got {i}")
    if not 1 <= Kc <= N // 2 - 1:
        raise ValueError(f"Kc must lie in [1, N/2 - 1], got Kc={Kc}, N={N}")
    j = np.arange(1, Kc + 1, dtype=np.float64)
    return float(np.sum((2.0 * np.pi * j / N) ** i))


def _require_offcritical(chain: ChainParams) -> None:
    if chain.lam == 1.0:
        raise SingularField("these coefficients carry a 1/(lambda-1)^2 denominator")


def _require_nonzero(*alphas: float) -> None:
    for a in alphas:
        if a == 0.0:
            raise ZeroAlpha("alpha must be nonzero in this regime")


def tau_ground_critical(
    alpha_k: float, alpha_kp: float, chain: ChainParams, Kc: int
) -> tuple[float, float]:
    """Gaussian-decay coefficients near the critical point, ground preparation.

    |F|(t) ~ exp(-(tau1 + tau2) t^2); tau2 carries the DM contribution and is
    nonzero only when the two shifts differ in sign.
    """
    _require_offcritical(chain)
    _require_nonzero(alpha_k, alpha_kp)
    g2 = chain.gamma**2
    denom = (chain.lam - 1.0) ** 2
    e2 = cutoff_sum(2, Kc, chain.N)
    e3 = cutoff_sum(3, Kc, chain.N)
    tau1 = 2.0 * g2 * (alpha_k - alpha_kp) ** 2 * e2 / denom
    tau2 = (
        8.0
        * chain.D
        * g2
        * (alpha_k - alpha_kp)
        * (math.copysign(1.0, alpha_k) - math.copysign(1.0, alpha_kp))
        * e3
        / denom
    )
    return tau1, tau2


def approx_ground_weak(tau1: float, tau2: float, t: float) -> float:
    """exp(-(tau1 + tau2) t^2)."""
    return math.exp(-(tau1 + tau2) * t * t)


def tau_ground_far(
    alpha_k: float, alpha_kp: float, chain: ChainParams, Kc: int
) -> tuple[float, float]:
    """Like tau_ground_critical but with the far-from-critical DM coefficient,
    which is quadratic in (alpha_kp - alpha_k) and sign-independent."""
    _require_offcritical(chain)
    g2 = chain.gamma**2
    denom = (chain.lam - 1.0) ** 2
    tau1 = 2.0 * g2 * (alpha_k - alpha_kp) ** 2 * cutoff_sum(2, Kc, chain.N) / denom
    tau2p = 8.0 * chain.D * g2 * (alpha_kp - alpha_k) ** 2 * cutoff_sum(3, Kc, chain.N) / denom
    return tau1, tau2p


def strong_coupling_envelope(
    alpha_k: float, alpha_kp: float, chain: ChainParams
) -> tuple[EnvelopeShape, float]:
    """Oscillatory Gaussian envelope for strong opposite-sign shifts.

    |F|(t) ~ exp(-t^2 / (2 W^2)) * |cos(mean_energy * t)|^(N/2), with the
    zero spacing set by period = pi / mean_energy.  W shrinks with |D| and N.
    """
    _require_nonzero(alpha_k, alpha_kp)
    if alpha_k * alpha_kp > 0.0:
        raise WrongRegime("envelope form needs opposite-sign shifts")
    ak, akp = abs(alpha_k), abs(alpha_kp)
    inv = 1.0 / ak + 1.0 / akp
    mean_energy = 2.0 * (ak + akp) + 0.5 * chain.gamma**2 * inv
    decay = (0.25 * chain.gamma**4 * inv**2 + 64.0 * chain.D**2) * chain.N
    width = math.inf if decay == 0.0 else 1.0 / math.sqrt(decay)
    period = math.inf if mean_energy == 0.0 else math.pi / mean_energy
    return EnvelopeShape(period=period, width=width), mean_energy


def strong_coupling_oscillation(
    alpha_k: float, alpha_kp: float, chain: ChainParams
) -> tuple[float, float]:
    """Pure |cos|^(N/2) oscillation for strong same-sign shifts.

    Returns (period, exponent); period is infinite when |alpha_k| = |alpha_kp|
    (the two branches dephase identically and |F| stays 1).
    """
    _require_nonzero(alpha_k, alpha_kp)
    if alpha_k * alpha_kp < 0.0:
        raise WrongRegime("oscillation form needs same-sign shifts")
    ak, akp = abs(alpha_k), abs(alpha_kp)
    beat = 2.0 * (ak - akp) + 0.5 * chain.gamma**2 * (1.0 / ak - 1.0 / akp)
    period = math.inf if beat == 0.0 else math.pi / abs(beat)
    return period, chain.N / 2.0


def vacuum_strong(alpha_k: float, alpha_kp: float) -> float:
    """Strong-coupling vacuum preparation: |F| ~ 1, independent of parameters."""
    return 1.0


def tau_vacuum_critical(
    alpha_k: float, alpha_kp: float, chain: ChainParams, Kc: int
) -> tuple[float, float, float]:
    """Vacuum preparation near the critical point:
    |F|(t) ~ exp(-(tau1 + tau2) t^4) * exp(-tau3 t^2)."""
    _require_nonzero(alpha_k, alpha_kp)
    g2 = chain.gamma**2
    d = alpha_kp - alpha_k
    inv_sum = 1.0 / abs(alpha_k) + 1.0 / abs(alpha_kp)
    inv_dif = 1.0 / abs(alpha_k) - 1.0 / abs(alpha_kp)
    tau1 = 8.0 * g2 * d * d * cutoff_sum(2, Kc, chain.N)
    tau2 = 32.0 * chain.D * g2 * d * d * cutoff_sum(3, Kc, chain.N) * inv_sum
    tau3 = 8.0 * chain.D**2 * g2 * cutoff_sum(4, Kc, chain.N) * inv_dif**2
    return tau1, tau2, tau3


def tau_vacuum_far(
    alpha_k: float, alpha_kp: float, chain: ChainParams, Kc: int
) -> tuple[float, float]:
    """Vacuum preparation far from the critical point:
    |F|(t) ~ exp(-(tau1 + tau2) t^4)."""
    if chain.lam == 1.0:
        raise SingularField("far-field coefficient carries a 1/|lambda-1| factor")
    g2 = chain.gamma**2
    d = alpha_kp - alpha_k
    tau1 = 8.0 * g2 * d * d * cutoff_sum(2, Kc, chain.N)
    tau2 = 64.0 * chain.D * g2 * d * d * cutoff_sum(3, Kc, chain.N) / abs(chain.lam - 1.0)
    return tau1, tau2


def heuristic_series(
    regime: HeuristicRegime,
    alpha_k: float,
    alpha_kp: float,
    chain: ChainParams,
    Kc: int,
    times: np.ndarray,
) -> np.ndarray:
    """Evaluate the regime's approximation of |F| on a time grid."""
    t = np.asarray(times, dtype=np.float64)
    if regime is HeuristicRegime.GROUND_WEAK_CRITICAL:
        tau1, tau2 = tau_ground_critical(alpha_k, alpha_kp, chain, Kc)
        return np.exp(-(tau1 + tau2) * t**2)
    if regime is HeuristicRegime.GROUND_WEAK_FAR:
        tau1, tau2p = tau_ground_far(alpha_k, alpha_kp, chain, Kc)
        return np.exp(-(tau1 + tau2p) * t**2)
    if regime is HeuristicRegime.GROUND_STRONG_OPPOSITE:
        shape, mean_energy = strong_coupling_envelope(alpha_k, alpha_kp, chain)
        gauss = (
            np.ones_like(t)
            if math.isinf(shape.width)
            else np.exp(-(t**2) / (2.0 * shape.width**2))
        )
        return gauss * np.abs(np.cos(mean_energy * t)) ** (chain.N / 2.0)
    if regime is HeuristicRegime.GROUND_STRONG_SAME:
        period, exponent = strong_coupling_oscillation(alpha_k, alpha_kp, chain)
        if math.isinf(period):
            return np.ones_like(t)
        return np.abs(np.cos(math.pi * t / period)) ** exponent
    if regime is HeuristicRegime.VACUUM_STRONG:
        return np.full_like(t, vacuum_strong(alpha_k, alpha_kp))
    if regime is HeuristicRegime.VACUUM_WEAK_CRITICAL:
        tau1, tau2, tau3 = tau_vacuum_critical(alpha_k, alpha_kp, chain, Kc)
        return np.exp(-(tau1 + tau2) * t**4) * np.exp(-tau3 * t**2)
    if regime is HeuristicRegime.VACUUM_WEAK_FAR:
        tau1, tau2 = tau_vacuum_far(alpha_k, alpha_kp, chain, Kc)
        return np.exp(-(tau1 + tau2) * t**4)
    raise ValueError(f"unhandled regime {regime!r}")
