"""Quantum-correlation measures for the three-qubit state.

Tripartite negativity via partial-transpose eigenvalues and via its closed
form in the GHZ/W family, the genuine-tripartite-discord closed form, von
Neumann entropies, and the small dense Hermitian eigen-solver they all share.
All logarithms are base 2 and 0*log(0) = 0 throughout.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import NoConvergence, NotDensityMatrix, NotHermitian

__all__ = [
    "Spectrum8",
    "QCSample",
    "hermitian_eigen",
    "partial_transpose_C",
    "negativity_exact",
    "negativity_closed_form",
    "gtqd_closed_form",
    "von_neumann_entropy",
    "genuine_total_correlation",
    "gtqd_grid_bound",
]

_CONVERGENCE = 1e-13
_HERMITICITY = 1e-10


@dataclass(frozen=True)
class Spectrum8:
    """Spectral decomposition: eigenvalues ascending, eigenvectors as the
    matching orthonormal columns of ``vectors``.  (Named for its primary 8x8
    use; the solver accepts any small Hermitian matrix.)"""

    values: np.ndarray
    vectors: np.ndarray


@dataclass(frozen=True)
class QCSample:
    """One row of a correlation time series."""

    t: float
    f07: float
    negativity: float
    gtqd: float


def hermitian_eigen(matrix, max_rotations: int = 6400) -> Spectrum8:
    """Full spectrum of a Hermitian matrix by cyclic complex Jacobi rotations.

    Each step zeroes the largest off-diagonal element with a unitary plane
    rotation; converged entries deflate implicitly as the off-diagonal norm
    shrinks.  Stops when every off-diagonal magnitude falls below
    1e-13 * ||A||_F; raises NoConvergence after ``max_rotations`` rotations.
    """
    A = np.array(matrix, dtype=complex)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise NotHermitian(f"expected a square matrix, got shape {A.shape}")
    if np.max(np.abs(A - A.conj().T)) > _HERMITICITY:
        raise NotHermitian("matrix is not Hermitian within 1e-10")
    A = 0.5 * (A + A.conj().T)
    n = A.shape[0]
    V = np.eye(n, dtype=complex)
    norm = float(np.linalg.norm(A))
    if norm == 0.0 or n == 1:
        return Spectrum8(values=np.zeros(n) + np.diag(A).real, vectors=V)
    threshold = _CONVERGENCE * norm

    off = np.abs(A - np.diag(np.diag(A)))
    for _ in range(max_rotations):
        p, q = divmod(int(np.argmax(off)), n)
        if p > q:
            p, q = q, p
        # off[p, q] is zero on the diagonal, so an argmax landing there
        # means the off-diagonal part vanished entirely -- converged.
        r = float(off[p, q])
        if r < threshold:
            break
        apq = A[p, q]
        phase = apq / r
        tau = (A[q, q].real - A[p, p].real) / (2.0 * r)
        t = math.copysign(1.0, tau) / (abs(tau) + math.hypot(tau, 1.0))
        c = 1.0 / math.hypot(t, 1.0)
        s = t * c
        # unitary plane rotation R: R[p,p]=c, R[p,q]=s*phase,
        # R[q,p]=-s*conj(phase), R[q,q]=c; apply A <- R^dag A R, V <- V R
        col_p = c * A[:, p] - s * np.conj(phase) * A[:, q]
        col_q = s * phase * A[:, p] + c * A[:, q]
        A[:, p], A[:, q] = col_p, col_q
        row_p = c * A[p, :] - s * phase * A[q, :]
        row_q = s * np.conj(phase) * A[p, :] + c * A[q, :]
        A[p, :], A[q, :] = row_p, row_q
        A[p, q] = 0.0
        A[q, p] = 0.0
        A[p, p] = A[p, p].real
        A[q, q] = A[q, q].real
        vec_p = c * V[:, p] - s * np.conj(phase) * V[:, q]
        vec_q = s * phase * V[:, p] + c * V[:, q]
        V[:, p], V[:, q] = vec_p, vec_q
        off = np.abs(A - np.diag(np.diag(A)))
    else:
        raise NoConvergence(f"off-diagonal norm still above threshold after {max_rotations} rotations")

    values = np.diag(A).real
    order = np.argsort(values, kind="stable")
    return Spectrum8(values=values[order], vectors=V[:, order])


def partial_transpose_C(rho) -> np.ndarray:
    """Partial transpose over the third qubit: entry ((a,b,c),(a',b',c'))
    moves to ((a,b,c'),(a',b',c))."""
    r = np.asarray(rho, dtype=complex).reshape(2, 2, 2, 2, 2, 2)
    return r.transpose(0, 1, 5, 3, 4, 2).reshape(8, 8)


def negativity_exact(rho) -> float:
    """Sum of |eigenvalues| of the C-partial-transpose, minus one.

    For the permutation-symmetric GHZ/W family every one-vs-two bipartition
    gives the same value, so this is the tripartite negativity.
    """
    spec = hermitian_eigen(partial_transpose_C(rho))
    return max(0.0, float(np.sum(np.abs(spec.values)) - 1.0))


def _check_unit_interval(name: str, value: float) -> None:
    if not 0.0 <= value <= 1.0:
        raise ValueError(f"{name} must lie in [0, 1], got {value}")


def negativity_closed_form(a: float, f07: float) -> float:
    """Tripartite negativity of the evolved GHZ/W mixture with GHZ weight a^2
    and coherence magnitude ``f07``."""
    _check_unit_interval("a", a)
    _check_unit_interval("f07", f07)
    a2 = a * a
    w = (1.0 - a2) / 3.0
    return (
        -(a2 + 2.0) / 6.0
        + math.sqrt(a2 * a2 / 4.0 + 8.0 * w * w)
        + math.sqrt(a2 * a2 * f07 * f07 + w * w)
    )


def _xlog2(x: float) -> float:
    return 0.0 if x == 0.0 else x * math.log2(x)


def gtqd_closed_form(a: float, f07: float) -> float:
    """Genuine tripartite quantum discord of the evolved GHZ/W mixture."""
    _check_unit_interval("a", a)
    _check_unit_interval("f07", f07)
    a2 = a * a
    h = a2 / 2.0
    return (
        h * _xlog2(1.0 - f07)
        + h * _xlog2(1.0 + f07)
        - h
        - _xlog2((2.0 + a2) / 6.0)
        - 2.0 * (1.0 - a2) / 3.0 * math.log2(2.0 / 3.0)
    )


def von_neumann_entropy(rho, base2: bool = True) -> float:
    """-Tr(rho log rho) with eigenvalues in [-1e-10, 0) clamped to 0."""
    r = np.asarray(rho, dtype=complex)
    if abs(np.trace(r).real - 1.0) > 1e-9 or abs(np.trace(r).imag) > 1e-9:
        raise NotDensityMatrix(f"trace {np.trace(r)} is not 1 within 1e-9")
    values = hermitian_eigen(r).values
    if values[0] < -1e-10:
        raise NotDensityMatrix(f"negative eigenvalue {values[0]} beyond -1e-10")
    total = 0.0
    for v in values:
        if v > 0.0:
            total -= v * math.log2(v)
    return total if base2 else total * math.log(2.0)


def _trace_out_C(rho: np.ndarray) -> np.ndarray:
    return np.einsum("abcdec->abde", rho.reshape(2, 2, 2, 2, 2, 2)).reshape(4, 4)


def _trace_out_AB(rho: np.ndarray) -> np.ndarray:
    return np.einsum("abcabf->cf", rho.reshape(2, 2, 2, 2, 2, 2))


def genuine_total_correlation(rho) -> float:
    """S(rho_C) + S(rho_AB) - S(rho_ABC)."""
    r = np.asarray(rho, dtype=complex)
    return (
        von_neumann_entropy(_trace_out_AB(r))
        + von_neumann_entropy(_trace_out_C(r))
        - von_neumann_entropy(r)
    )


def _entropy2(m: np.ndarray) -> float:
    """Entropy of an (unnormalized-safe) 2x2 Hermitian PSD matrix with unit trace."""
    half_tr = 0.5 * (m[0, 0].real + m[1, 1].real)
    det = (m[0, 0].real * m[1, 1].real) - (m[0, 1] * m[1, 0]).real
    gap = math.sqrt(max(0.0, half_tr * half_tr - det))
    total = 0.0
    for v in (half_tr + gap, half_tr - gap):
        if v > 0.0:
            total -= v * math.log2(v)
    return total


def gtqd_grid_bound(rho, steps: int = 8) -> float:
    """Loose upper bound on the discord from a grid of product projective
    measurements on qubits A and B.

    Scans ``steps`` polar x ``steps`` azimuthal angles per qubit, keeps the
    grid minimum of the conditional entropy of C, and returns
    S(rho_AB) - S(rho_ABC) + min_grid sum_ij p_ij S(rho_C|ij).  The true
    discord minimizes over all measurements, so it never exceeds this value.

    Because the grid contains the computational-basis measurement, this bound
    can fall below :func:`gtqd_closed_form` at intermediate mixing weights;
    the two provably coincide at the pure-GHZ and pure-W endpoints.
    """
    r = np.asarray(rho, dtype=complex)
    s_ab = von_neumann_entropy(_trace_out_C(r))
    s_abc = von_neumann_entropy(r)

    thetas = np.linspace(0.0, math.pi, steps)
    phis = np.linspace(0.0, 2.0 * math.pi, steps, endpoint=False)
    directions = []
    for th in thetas:
        for ph in phis:
            u = np.array([math.cos(th / 2.0), math.sin(th / 2.0) * np.exp(1j * ph)])
            p0 = np.outer(u, u.conj())
            directions.append((p0, np.eye(2) - p0))

    r6 = r.reshape(2, 2, 2, 2, 2, 2)
    best = math.inf
    for pa0, pa1 in directions:
        for pb0, pb1 in directions:
            cond = 0.0
            for pa in (pa0, pa1):
                for pb in (pb0, pb1):
                    # rho_C conditioned on the (A,B) outcome, trace = p_ij
                    m = np.einsum("ad,be,abcdef->cf", pa.T, pb.T, r6)
                    p = m[0, 0].real + m[1, 1].real
                    if p > 1e-12:
                        cond += p * _entropy2(m / p)
            if cond < best:
                best = cond
    return s_ab - s_abc + best
