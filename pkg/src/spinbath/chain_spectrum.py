"""Momentum-space quantities of the diagonalized XY+DM chain.

The chain of N spins maps to free fermion modes labelled j = -L..L with
L = N/2 - 1.  Modes j and -j pair up; the unpaired points j = 0 and j = N/2
(where sin(2*pi*j/N) = 0) never mix and contribute only phases, so all
magnitude products elsewhere in the package run over j = 1..L.

Every function here is a pure function of its arguments and is safe to
evaluate concurrently.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DegenerateMode

__all__ = [
    "ChainParams",
    "ModeSpectrum",
    "alpha_of_bitstring",
    "single_particle_energy",
    "mode_energy",
    "bogoliubov_angle",
    "delta_angle",
    "mode_spectrum",
]


@dataclass(frozen=True)
class ChainParams:
    """Environment chain configuration.

    Parameters
    ----------
    N : int
        Number of chain spins; must be even and at least 4.
    gamma : float
        XY anisotropy.  gamma = 0 is the XX chain, gamma = 1 the Ising chain.
    lam : float
        Transverse field acting on the chain.
    D : float
        Strength of the Dzyaloshinskii-Moriya (z-axis) interaction.
    """

    N: int
    gamma: float
    lam: float
    D: float = 0.0

    def __post_init__(self):
        if self.N < 4 or self.N % 2 != 0:
            raise ValueError(f"N must be even and >= 4, got {self.N}")
        for name in ("gamma", "lam", "D"):
            if not math.isfinite(getattr(self, name)):
                raise ValueError(f"{name} must be finite")

    @property
    def n_pair_modes(self) -> int:
        """Number of paired modes L = N/2 - 1."""
        return self.N // 2 - 1


@dataclass(frozen=True)
class ModeSpectrum:
    """All per-mode quantities at one effective field.

    Attributes
    ----------
    theta : float
        Bogoliubov mixing angle, in (-pi, pi].
    epsilon : float
        Single-particle energy, >= 0.
    energy : float
        Quasiparticle energy 2*(epsilon + 2*D*sin(2*pi*j/N)); reduces to
        2*epsilon when D = 0 and may be negative for large negative D.
    delta : float
        Half the angle mismatch against the base field, (theta_k - theta)/2.
    """

    theta: float
    epsilon: float
    energy: float
    delta: float


def _phase(j: int, N: int) -> float:
    return 2.0 * math.pi * j / N


def _check_mode(j: int, params: ChainParams) -> None:
    if not 1 <= j <= params.n_pair_modes:
        raise ValueError(
            f"mode index must satisfy 1 <= j <= N/2 - 1 = {params.n_pair_modes}, got {j}"
        )


def alpha_of_bitstring(k: int, couplings) -> float:
    """Level shift alpha for central-spin basis state ``k``.

    Bit i of ``k`` (most significant bit = first spin) contributes
    ``+couplings[i]`` when 0 and ``-couplings[i]`` when 1, so complementary
    bitstrings produce exactly opposite shifts.
    """
    R = len(couplings)
    if not 0 <= k < 2**R:
        raise IndexError(f"k must lie in [0, {2**R - 1}] for {R} couplings, got {k}")
    total = 0.0
    for i, g in enumerate(couplings):
        bit = (k >> (R - 1 - i)) & 1
        total += -g if bit else g
    return total


def single_particle_energy(j: int, lambda_k: float, params: ChainParams) -> float:
    """Energy epsilon_j >= 0 of one fermion mode at effective field ``lambda_k``."""
    _check_mode(j, params)
    phi = _phase(j, params.N)
    return math.hypot(lambda_k - math.cos(phi), params.gamma * math.sin(phi))


def mode_energy(j: int, lambda_k: float, params: ChainParams) -> float:
    """Quasiparticle energy 2*(epsilon_j + 2*D*sin(2*pi*j/N)).

    The DM term shifts modes j and -j oppositely, so this may be negative
    for large |D|; the pair combination (j, -j) is always DM-free.
    """
    _check_mode(j, params)
    phi = _phase(j, params.N)
    eps = single_particle_energy(j, lambda_k, params)
    return 2.0 * (eps + 2.0 * params.D * math.sin(phi))


def bogoliubov_angle(j: int, lambda_k: float, params: ChainParams) -> float:
    """Mixing angle theta_j in (-pi, pi] at effective field ``lambda_k``.

    Defined through the two-argument arctangent of
    (gamma*sin(2*pi*j/N), lambda_k - cos(2*pi*j/N)) so that
    sin(theta) = gamma*sin(phi)/epsilon and cos(theta) = (lambda_k - cos(phi))/epsilon.

    Raises
    ------
    DegenerateMode
        If epsilon_j = 0, where the angle is undefined.
    """
    _check_mode(j, params)
    phi = _phase(j, params.N)
    y = params.gamma * math.sin(phi)
    x = lambda_k - math.cos(phi)
    if x == 0.0 and y == 0.0:
        raise DegenerateMode(
            f"mode j={j} is gapless at lambda_k={lambda_k}; mixing angle undefined"
        )
    return math.atan2(y, x)


def delta_angle(j: int, lambda_k: float, params: ChainParams) -> float:
    """Half the rotation between the ``lambda_k`` and base-field quasiparticle bases."""
    return 0.5 * (
        bogoliubov_angle(j, lambda_k, params) - bogoliubov_angle(j, params.lam, params)
    )


def mode_spectrum(j: int, lambda_k: float, params: ChainParams) -> ModeSpectrum:
    """Bundle theta, epsilon, the quasiparticle energy and the half-angle shift."""
    return ModeSpectrum(
        theta=bogoliubov_angle(j, lambda_k, params),
        epsilon=single_particle_energy(j, lambda_k, params),
        energy=mode_energy(j, lambda_k, params),
        delta=delta_angle(j, lambda_k, params),
    )
