"""Decoherence of central spins coupled to a transverse-field XY chain with
DM interaction: exact mode-product decoherence factors, the closed-form
approximations in each coupling regime, and the resulting quantum-correlation
dynamics of three interacting central qubits."""

from .chain_spectrum import (
    ChainParams,
    ModeSpectrum,
    alpha_of_bitstring,
    bogoliubov_angle,
    delta_angle,
    mode_energy,
    mode_spectrum,
    single_particle_energy,
)
from .decoherence import (
    DecoherenceSeries,
    EnvPreparation,
    FactorRequest,
    decoherence_factor,
    ground_mode_amplitude,
    vacuum_mode_magnitude,
)
from .central_system import (
    CentralParams,
    EigenLevel,
    build_central_hamiltonian,
    eigen_energies,
    eigen_states,
    evolve_density,
    initial_density,
    level_alphas,
    levels,
)
from .errors import (
    DegenerateMode,
    NoConvergence,
    NotDensityMatrix,
    NotHermitian,
    NumericalNegativity,
    SingularField,
    SpinbathError,
    WrongRegime,
    ZeroAlpha,
)
from .heuristics import (
    EnvelopeShape,
    HeuristicRegime,
    approx_ground_weak,
    cutoff_sum,
    heuristic_series,
    strong_coupling_envelope,
    strong_coupling_oscillation,
    tau_ground_critical,
    tau_ground_far,
    tau_vacuum_critical,
    tau_vacuum_far,
    vacuum_strong,
)
from .oracle import build_mode_hamiltonian, mode_factor_bruteforce
from .qcorr import (
    QCSample,
    Spectrum8,
    genuine_total_correlation,
    gtqd_closed_form,
    gtqd_grid_bound,
    hermitian_eigen,
    negativity_closed_form,
    negativity_exact,
    partial_transpose_C,
    von_neumann_entropy,
)

__version__ = "0.1.0"
