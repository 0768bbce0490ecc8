"""Three interacting central qubits: XXZ+DM ring spectrum, GHZ/W initial
mixtures, and their dephasing under the chain-induced decoherence factors.

The three-qubit Hamiltonian is an XXZ Heisenberg ring with a z-axis DM term
and a uniform field:

    H = (J/2) * sum_i [ X_i X_{i+1} + Y_i Y_{i+1} + Delta * Z_i Z_{i+1}
                        + M * (X_i Y_{i+1} - Y_i X_{i+1}) ] + B * sum_i Z_i

with i+1 taken mod 3.  Its eight eigenstates each live in one magnetization
sector, so each level k couples to the chain through a single shift alpha_k
and the reduced dynamics is pure dephasing in the eigenbasis: eigenbasis
element (k, k') picks up exp(-i (E_k - E_k') t) times the magnitude of the
decoherence factor for the field pair (lam + alpha_k, lam + alpha_k').
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .chain_spectrum import ChainParams
from .decoherence import (
    DecoherenceSeries,
    EnvPreparation,
    FactorRequest,
    decoherence_factor,
)
from .errors import NotDensityMatrix

__all__ = [
    "CentralParams",
    "EigenLevel",
    "eigen_energies",
    "eigen_states",
    "level_alphas",
    "levels",
    "build_central_hamiltonian",
    "initial_density",
    "evolve_density",
]

_ALPHA_PATTERN = np.array([3.0, 1.0, 1.0, -1.0, 1.0, -1.0, -1.0, -3.0])


@dataclass(frozen=True)
class CentralParams:
    """Couplings of the central three-qubit system.

    J: exchange strength, Delta: z anisotropy, M: z-axis DM between central
    spins, B: field on the central spins, g: uniform coupling of each central
    spin to every chain spin.
    """

    J: float
    Delta: float
    M: float
    B: float
    g: float

    def __post_init__(self):
        for name in ("J", "Delta", "M", "B", "g"):
            if not math.isfinite(getattr(self, name)):
                raise ValueError(f"{name} must be finite")
        if self.g < 0.0:
            raise ValueError("g must be nonnegative")


@dataclass(frozen=True)
class EigenLevel:
    index: int
    energy: float
    alpha: float
    lambda_k: float


def eigen_energies(p: CentralParams) -> np.ndarray:
    """The eight level energies, ordered to match ``eigen_states`` columns."""
    J, D, M, B = p.J, p.Delta, p.M, p.B
    root3 = math.sqrt(3.0)
    return np.array(
        [
            3.0 * B + 1.5 * J * D,
            -J - J * M * root3 + B - 0.5 * J * D,
            -J + J * M * root3 + B - 0.5 * J * D,
            2.0 * J - B - 0.5 * J * D,
            2.0 * J + B - 0.5 * J * D,
            -J + J * M * root3 - B - 0.5 * J * D,
            -J - J * M * root3 - B - 0.5 * J * D,
            -3.0 * B + 1.5 * J * D,
        ]
    )


def eigen_states() -> np.ndarray:
    """Eigenvectors as columns, in the computational basis |q1 q2 q3> with
    q1 the most significant bit.  Independent of all couplings: the sectors
    are fixed by symmetry and the chiral phases by the ring geometry."""
    w = 1.0 / math.sqrt(3.0)
    e1 = w * np.exp(1j * math.pi / 6.0)
    e5 = w * np.exp(1j * 5.0 * math.pi / 6.0)
    e9 = w * np.exp(1j * 3.0 * math.pi / 2.0)
    V = np.zeros((8, 8), dtype=complex)
    V[0, 0] = 1.0
    V[[1, 2, 4], 1] = [e1, e5, e9]
    V[[1, 2, 4], 2] = [e5, e1, e9]
    V[[3, 5, 6], 3] = [w, w, w]
    V[[1, 2, 4], 4] = [w, w, w]
    V[[3, 5, 6], 5] = [e5, e1, e9]
    V[[3, 5, 6], 6] = [e1, e5, e9]
    V[7, 7] = 1.0
    return V


def level_alphas(g: float) -> np.ndarray:
    """Chain-field shift alpha_k of each level: 3g for the all-up state, g in
    the single-excitation sector, -g with two excitations, -3g for all-down."""
    return g * _ALPHA_PATTERN


def levels(p: CentralParams, lam: float) -> list[EigenLevel]:
    """Energies, shifts, and effective fields bundled per level."""
    energies = eigen_energies(p)
    alphas = level_alphas(p.g)
    return [
        EigenLevel(index=k, energy=float(energies[k]), alpha=float(alphas[k]), lambda_k=lam + float(alphas[k]))
        for k in range(8)
    ]


_SX = np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex)
_SY = np.array([[0.0, -1j], [1j, 0.0]], dtype=complex)
_SZ = np.array([[1.0, 0.0], [0.0, -1.0]], dtype=complex)
_ID = np.eye(2, dtype=complex)


def _three(op, site):
    mats = [_ID, _ID, _ID]
    mats[site] = op
    return np.kron(np.kron(mats[0], mats[1]), mats[2])


def build_central_hamiltonian(p: CentralParams) -> np.ndarray:
    """Explicit 8x8 matrix of the central Hamiltonian (for cross-checks)."""
    H = np.zeros((8, 8), dtype=complex)
    for i in range(3):
        j = (i + 1) % 3
        H += 0.5 * p.J * (
            _three(_SX, i) @ _three(_SX, j)
            + _three(_SY, i) @ _three(_SY, j)
            + p.Delta * _three(_SZ, i) @ _three(_SZ, j)
            + p.M * (_three(_SX, i) @ _three(_SY, j) - _three(_SY, i) @ _three(_SX, j))
        )
        H += p.B * _three(_SZ, i)
    return H


def initial_density(a: float) -> np.ndarray:
    """GHZ/W statistical mixture with GHZ weight a^2 and W weight 1 - a^2."""
    if not 0.0 <= a <= 1.0:
        raise ValueError(f"mixing amplitude a must lie in [0, 1], got {a}")
    a2 = a * a
    rho = np.zeros((8, 8), dtype=complex)
    rho[0, 0] = rho[7, 7] = rho[0, 7] = rho[7, 0] = a2 / 2.0
    w_block = [1, 2, 4]
    rho[np.ix_(w_block, w_block)] = (1.0 - a2) / 3.0
    return rho


def _magnitude_table(
    alphas: np.ndarray, t: float, lam: float, chain: ChainParams, prep: EnvPreparation
) -> np.ndarray:
    """|F| for every level pair at one time, from the distinct alpha pairs."""
    G = np.ones((8, 8))
    times = np.array([t])
    cache: dict[tuple[float, float], float] = {}
    for k in range(8):
        for kp in range(k + 1, 8):
            key = (alphas[k], alphas[kp])
            if key[0] == key[1]:
                continue
            if key not in cache:
                series = decoherence_factor(
                    FactorRequest(
                        chain=chain,
                        lambda_k=lam + key[0],
                        lambda_kp=lam + key[1],
                        prep=prep,
                        times=times,
                    )
                )
                cache[key] = float(series.magnitudes[0])
            G[k, kp] = G[kp, k] = cache[key]
    return G


def evolve_density(
    rho0: np.ndarray,
    t: float,
    p: CentralParams,
    chain: ChainParams,
    prep: EnvPreparation,
) -> np.ndarray:
    """Density matrix at time ``t`` under eigenbasis dephasing.

    Populations in the eigenbasis are exactly conserved; each coherence is
    multiplied by its phase factor and decoherence magnitude.  The update is
    applied as a correction on top of ``rho0`` so that unaffected entries
    (all diagonals of the GHZ/W family) pass through untouched.
    """
    rho0 = np.asarray(rho0, dtype=complex)
    if rho0.shape != (8, 8):
        raise NotDensityMatrix(f"expected an 8x8 matrix, got shape {rho0.shape}")
    if np.max(np.abs(rho0 - rho0.conj().T)) > 1e-10:
        raise NotDensityMatrix("initial state is not Hermitian within 1e-10")
    if abs(np.trace(rho0).real - 1.0) > 1e-9:
        raise NotDensityMatrix("initial state trace is not 1 within 1e-9")
    if t < 0.0:
        raise ValueError("t must be nonnegative")

    V = eigen_states()
    energies = eigen_energies(p)
    alphas = level_alphas(p.g)
    rho_eig = V.conj().T @ rho0 @ V

    G = _magnitude_table(alphas, t, chain.lam, chain, prep)
    phases = np.exp(-1j * np.subtract.outer(energies, energies) * t)
    multiplier = G * phases - 1.0  # exactly zero on the diagonal
    correction = V @ (rho_eig * multiplier) @ V.conj().T
    return rho0 + correction
