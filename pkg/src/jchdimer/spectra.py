"""Spectral analysis: Hermitian eigendecomposition, analytic polariton states,
and the spectroscopy quantities of the two-polariton manifolds.

Conventions
-----------
Eigenvectors are phase-fixed so the largest-magnitude component is real and
positive (ties broken by lowest basis index). The analytic lower-polariton
state is taken as

    |n-> = sin(theta_n)|n, g> - cos(theta_n)|n-1, e>,    |0-> = |0, g>,

i.e. the overall sign is chosen so that for positive detuning the dominant
photonic component is positive, matching the numeric phase convention above.
Energies, orthonormality and theta_n are unaffected by this choice; the sign
structure of the delocalized reference states below depends on it and is what
reproduces the reference overlap values.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .hamiltonian import SystemParams, build_h_eff
from .hilbert import (EXCITED, GROUND, Basis, BasisState, Operator,
                      build_basis, embed_vector, qubit_lowering,
                      restrict_matrix, subspace_indices)


@dataclass(frozen=True)
class EigenDecomposition:
    """Ascending eigenvalues with orthonormal, phase-fixed eigenvectors."""

    values: np.ndarray
    vectors: np.ndarray  # columns
    residuals: np.ndarray

    @property
    def dim(self) -> int:
        return len(self.values)

    def relative_values(self) -> np.ndarray:
        """Eigenvalues re-referenced to the ground level."""
        return self.values - self.values[0]


def _fix_phases(vectors: np.ndarray) -> np.ndarray:
    fixed = vectors.copy()
    for k in range(vectors.shape[1]):
        col = fixed[:, k]
        i = int(np.argmax(np.abs(col)))
        phase = col[i] / abs(col[i])
        fixed[:, k] = col * np.conj(phase)
    return fixed


def eig_hermitian(op: Operator | np.ndarray) -> EigenDecomposition:
    """Diagonalize a Hermitian operator; reject non-Hermitian input."""
    matrix = op.matrix if isinstance(op, Operator) else np.asarray(op, dtype=complex)
    if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
        raise ValueError("eig_hermitian requires a square matrix")
    defect = np.max(np.abs(matrix - matrix.conj().T))
    if defect >= 1e-12:
        raise ValueError(f"matrix is not Hermitian: max|M - M^dag| = {defect:.3e}")
    values, vectors = np.linalg.eigh(matrix)
    vectors = _fix_phases(vectors)
    residuals = np.linalg.norm(matrix @ vectors - vectors * values, axis=0)
    return EigenDecomposition(values=values, vectors=vectors, residuals=residuals)


# ---------------------------------------------------------------------------
# analytic polariton states of a single Jaynes-Cummings site
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PolaritonState:
    """Dressed n-excitation state of one resonator-qubit site."""

    n: int
    branch: str           # "-" or "+"
    theta: float          # mixing angle, radians
    energy: float         # units of g
    site: int = 1

    def amplitudes(self) -> dict[tuple[int, int], float]:
        """Map (photon_count, qubit_label) -> amplitude for this site."""
        if self.n == 0:
            return {(0, GROUND): 1.0}
        c, s = np.cos(self.theta), np.sin(self.theta)
        if self.branch == "-":
            return {(self.n, GROUND): s, (self.n - 1, EXCITED): -c}
        return {(self.n, GROUND): c, (self.n - 1, EXCITED): s}


def mixing_angle(detuning: float, g: float, n: int) -> float:
    """theta_n with tan(theta_n) = (Delta/2 + sqrt((Delta/2)^2 + n g^2)) / (sqrt(n) g)."""
    if n < 1:
        raise ValueError("mixing angle is defined for n >= 1")
    half = detuning / 2
    return float(np.arctan((half + np.sqrt(half**2 + n * g**2)) / (np.sqrt(n) * g)))


def polariton_states(params: SystemParams, wprime: float, n: int,
                     site: int = 1) -> tuple[PolaritonState, PolaritonState]:
    """Lower and upper n-polariton states for the given shifted resonator
    frequency w'.

    Energies are E_{n±} = n w' + Delta/2 ± sqrt((Delta/2)^2 + n g^2) with
    Delta = epsilon - w'. For n = 0 the lower state is |0, g> at zero energy
    and the upper slot holds the same state (there is no upper branch).
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    delta = params.epsilon - wprime
    if n == 0:
        zero = PolaritonState(n=0, branch="-", theta=0.0, energy=0.0, site=site)
        return zero, zero
    theta = mixing_angle(delta, params.g, n)
    root = np.sqrt((delta / 2)**2 + n * params.g**2)
    center = n * wprime + delta / 2
    lower = PolaritonState(n=n, branch="-", theta=theta, energy=center - root, site=site)
    upper = PolaritonState(n=n, branch="+", theta=theta, energy=center + root, site=site)
    return lower, upper


def single_site_block(params: SystemParams, wprime: float, n: int) -> np.ndarray:
    """The 2x2 (1x1 for n = 0) single-site JC block of the n-excitation
    sector, ordered (|n-1, e>, |n, g>)."""
    if n == 0:
        return np.zeros((1, 1))
    delta = params.epsilon - wprime
    return np.array([
        [(n - 1) * wprime + params.epsilon, np.sqrt(n) * params.g],
        [np.sqrt(n) * params.g, n * wprime],
    ])


def repulsion_energy(params: SystemParams, wprime: float) -> float:
    """Effective on-site repulsion between two lower-branch polaritons:
    u_r = E(|2->|0->) - E(|1->|1->), closed form."""
    delta = params.epsilon - wprime
    g = params.g
    return float(-delta / 2 + 2 * np.sqrt(delta**2 / 4 + g**2)
                 - np.sqrt(delta**2 / 4 + 2 * g**2))


def repulsion_energy_numeric(params: SystemParams, wprime: float) -> float:
    """u_r from diagonalizing the decoupled two-site system: gap between the
    two lowest levels of two JC sites at w' holding two excitations total."""
    e1 = np.linalg.eigvalsh(single_site_block(params, wprime, 1))[0]
    e2 = np.linalg.eigvalsh(single_site_block(params, wprime, 2))[0]
    levels = sorted([2 * e1, e2])  # |1-,1-> vs |2-,0-> / |0-,2->
    return float(levels[1] - levels[0])


# ---------------------------------------------------------------------------
# two-polariton manifolds of the effective Hamiltonian
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class TwoPolaritonSpectrum:
    """16-level spectrum of the effective Hamiltonian over the states with two
    resonator excitations, both knob branches."""

    eig: EigenDecomposition
    basis: Basis                      # full unconstrained basis
    indices: list[int]                # positions of the 16 states in `basis`
    states: tuple[BasisState, ...]

    def eigenvector_full(self, level: int) -> np.ndarray:
        """Eigenvector of 1-indexed `level` embedded in the full basis."""
        return embed_vector(self.eig.vectors[:, level - 1], self.indices, self.basis.dim)

    def knob_excited_weight(self, level: int) -> float:
        """Population of the knob-excited states in 1-indexed `level`."""
        vec = self.eig.vectors[:, level - 1]
        mask = np.array([s.qc == EXCITED for s in self.states])
        return float(np.sum(np.abs(vec[mask])**2))


def two_polariton_spectrum(params: SystemParams, basis: Basis | None = None) -> TwoPolaritonSpectrum:
    """Diagonalize the effective Hamiltonian on the 16 states with exactly two
    resonator excitations (knob ground and excited branches together).

    The restriction is exact: the effective Hamiltonian conserves both the
    knob state and the resonator excitation count, so these 16 states form an
    invariant subspace (dimension independent of n_max >= 2).
    """
    if params.n_max < 2:
        raise ValueError("two-polariton spectrum requires n_max >= 2")
    if basis is None:
        basis = build_basis(params.n_max)
    h = build_h_eff(params, basis).matrix
    indices = subspace_indices(basis, lambda s: s.resonator_excitations == 2)
    sub = restrict_matrix(h, indices)
    eig = eig_hermitian(sub)
    states = tuple(basis.states[i] for i in indices)
    return TwoPolaritonSpectrum(eig=eig, basis=basis, indices=indices, states=states)


def polariton_product_state(basis: Basis, site1: PolaritonState,
                            site2: PolaritonState, knob: int) -> np.ndarray:
    """|site1>_1 |site2>_2 |knob> as a vector over `basis`."""
    v = np.zeros(basis.dim, dtype=complex)
    for (na, qa), amp_a in site1.amplitudes().items():
        for (nb, qb), amp_b in site2.amplitudes().items():
            i = basis.index.get(BasisState(na, nb, qa, qb, knob))
            if i is None:
                raise ValueError("product state exceeds the basis cutoff")
            v[i] = amp_a * amp_b
    return v


def localized_ground_state(params: SystemParams, basis: Basis) -> np.ndarray:
    """|g^c>|1-,1->: both sites holding one lower polariton, knob ground."""
    lower, _ = polariton_states(params, params.wprime("g"), 1)
    return polariton_product_state(basis, lower, lower, GROUND)


def delocalized_reference_states(params: SystemParams,
                                 basis: Basis) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """The three knob-excited delocalized reference states over `basis`:

        phi_1 = 1/2|2-,0-> + 1/2|0-,2-> - (sqrt2/2)|1-,1->
        phi_2 = (sqrt2/2)(|2-,0-> - |0-,2->)
        phi_3 = 1/2|2-,0-> + 1/2|0-,2-> + (sqrt2/2)|1-,1->

    built from lower polaritons at the knob-excited branch w'. Normalized and
    mutually orthogonal.
    """
    wp = params.wprime("e")
    p0 = polariton_states(params, wp, 0)[0]
    p1 = polariton_states(params, wp, 1)[0]
    p2 = polariton_states(params, wp, 2)[0]
    s20 = polariton_product_state(basis, p2, p0, EXCITED)
    s02 = polariton_product_state(basis, p0, p2, EXCITED)
    s11 = polariton_product_state(basis, p1, p1, EXCITED)
    half, diag = 0.5, np.sqrt(2) / 2
    phi1 = half * s20 + half * s02 - diag * s11
    phi2 = diag * (s20 - s02)
    phi3 = half * s20 + half * s02 + diag * s11
    return phi1, phi2, phi3


def transition_elements(spectrum: TwoPolaritonSpectrum, raise_op: Operator) -> np.ndarray:
    """Magnitudes T[k, j] = |<psi^k| op |psi^j>| between the 16 eigenstates
    (0-indexed array; level l is row/column l-1).

    The knob raising operator maps the knob-ground block into the
    knob-excited block, so T vanishes within each block.
    """
    if raise_op.basis is not spectrum.basis and raise_op.basis.states != spectrum.basis.states:
        raise ValueError("operator basis does not match the spectrum basis")
    sub = restrict_matrix(raise_op.matrix, spectrum.indices)
    v = spectrum.eig.vectors
    return np.abs(v.conj().T @ sub @ v)


def knob_raising_operator(basis: Basis) -> Operator:
    """sigma_c^+ on the full basis."""
    return qubit_lowering(basis, "qc").dag()


class ResonanceResult(NamedTuple):
    w_d: float     # drive frequency for the ground -> delocalized transition
    delta: float   # minimal off-resonance of the unwanted transitions
    usable: bool   # False when the protecting gap collapses


def resonance_and_detuning(eig: EigenDecomposition) -> ResonanceResult:
    """Drive frequency w_d = E_9 - E_1 and minimal off-resonance
    delta = min(E_2, E_10 - E_9 - E_2), energies referenced to E_1 = 0."""
    if eig.dim < 10:
        raise ValueError("resonance extraction requires at least 10 levels")
    rel = eig.relative_values()
    w_d = float(rel[8])
    delta = float(min(rel[1], rel[9] - rel[8] - rel[1]))
    return ResonanceResult(w_d=w_d, delta=delta, usable=delta > 1e-9)
