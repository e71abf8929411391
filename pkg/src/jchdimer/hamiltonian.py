"""Hamiltonians of the knob-coupled two-resonator system.

Energy unit is the resonator-qubit coupling g (time unit 1/g, hbar = 1).
Four constructions are provided:

* ``build_h_full``      — the exact undriven Hamiltonian: two local
  Jaynes-Cummings sites, the knob qubit exchanging photons with both
  resonators at strength g_c, and direct capacitive hopping kappa0.
* ``build_h_eff``       — the second-order dispersive effective Hamiltonian:
  knob-state-dependent Stark shifts and a hopping coefficient
  kappa0 + (g_c^2/Delta_c) sigma_c^z, block diagonal in the knob state.
* ``build_dispersive_unitary`` — the exact matrix exponential of the
  dispersive generator, for validating the expansion.
* ``build_h_driven_rotating``  — the static rotating-frame Hamiltonian of the
  knob-driven system, exact because the undriven part conserves N_tot.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, replace

import numpy as np

from .hilbert import (Basis, Operator, annihilator, excited_projector,
                      knob_sigma_z, qubit_lowering, total_excitation)

DISPERSIVE_RATIO_LIMIT = 0.5


@dataclass(frozen=True)
class SystemParams:
    """All energies in units of g; g itself is fixed to 1 internally.

    epsilon / epsilon_c / w are the resonance frequencies of the resonator
    qubits, the knob qubit and the bare resonators; g_c the knob-resonator
    coupling; kappa0 the capacitive hopping; omega and w_d the drive strength
    and frequency (omega = 0 when undriven); n_max the photon cutoff per
    resonator.
    """

    epsilon: float
    epsilon_c: float
    w: float
    g_c: float
    kappa0: float
    g: float = 1.0
    omega: float = 0.0
    w_d: float = 0.0
    n_max: int = 4

    def __post_init__(self):
        if self.g <= 0:
            raise ValueError("g must be positive")
        if self.g_c < 0 or self.kappa0 < 0 or self.omega < 0:
            raise ValueError("g_c, kappa0 and omega must be nonnegative")
        if self.n_max < 1:
            raise ValueError("n_max must be >= 1")
        for name in ("epsilon", "epsilon_c", "w", "g_c", "kappa0", "g", "omega", "w_d"):
            if not np.isfinite(getattr(self, name)):
                raise ValueError(f"{name} must be finite")
        if self.g_c > 0 and not self.dispersive_ok:
            warnings.warn(
                f"dispersive ratio |g_c/Delta_c| = {abs(self.dispersive_ratio):.3f} "
                f">= {DISPERSIVE_RATIO_LIMIT}; the effective Hamiltonian is unreliable",
                stacklevel=2)

    @property
    def delta_c(self) -> float:
        """Knob-resonator detuning epsilon_c - w."""
        return self.epsilon_c - self.w

    @property
    def stark_shift(self) -> float:
        """Knob-state-dependent resonator shift g_c^2/Delta_c."""
        if self.delta_c == 0:
            raise ValueError("Delta_c = 0: dispersive quantities undefined")
        return self.g_c**2 / self.delta_c

    @property
    def dispersive_ratio(self) -> float:
        if self.delta_c == 0:
            return np.inf
        return self.g_c / self.delta_c

    @property
    def dispersive_ok(self) -> bool:
        return abs(self.dispersive_ratio) < DISPERSIVE_RATIO_LIMIT

    def wprime(self, knob: str) -> float:
        """Stark-shifted resonator frequency for knob branch "g" or "e"."""
        if knob == "g":
            return self.w - self.stark_shift
        if knob == "e":
            return self.w + self.stark_shift
        raise ValueError(f"knob branch must be 'g' or 'e', got {knob!r}")

    def detuning(self, knob: str) -> float:
        """Qubit-resonator detuning epsilon - w' on the given knob branch."""
        return self.epsilon - self.wprime(knob)

    def hopping_coefficient(self, knob: str) -> float:
        """Net photon hopping kappa0 -/+ g_c^2/Delta_c for knob "g"/"e"."""
        if knob == "g":
            return self.kappa0 - self.stark_shift
        if knob == "e":
            return self.kappa0 + self.stark_shift
        raise ValueError(f"knob branch must be 'g' or 'e', got {knob!r}")

    def with_overrides(self, **kwargs) -> "SystemParams":
        return replace(self, **kwargs)


def _check_basis(params: SystemParams, basis: Basis):
    if basis.n_max != params.n_max:
        raise ValueError(
            f"basis cutoff n_max={basis.n_max} does not match params n_max={params.n_max}")
    if basis.sector is not None:
        raise ValueError("Hamiltonians are built on the unconstrained basis")


def _elementary(basis: Basis):
    a1 = annihilator(basis, 1).matrix
    a2 = annihilator(basis, 2).matrix
    sm1 = qubit_lowering(basis, "q1").matrix
    sm2 = qubit_lowering(basis, "q2").matrix
    smc = qubit_lowering(basis, "qc").matrix
    return a1, a2, sm1, sm2, smc


def _jc_terms(params: SystemParams, basis: Basis) -> np.ndarray:
    """Local resonator terms: qubit energies, photon energies, JC exchange."""
    a1, a2, sm1, sm2, _ = _elementary(basis)
    pe1 = excited_projector(basis, "q1").matrix
    pe2 = excited_projector(basis, "q2").matrix
    h = params.epsilon * (pe1 + pe2)
    h += params.w * (a1.conj().T @ a1 + a2.conj().T @ a2)
    h += params.g * (sm1.conj().T @ a1 + a1.conj().T @ sm1)
    h += params.g * (sm2.conj().T @ a2 + a2.conj().T @ sm2)
    return h


def _hop(basis: Basis) -> np.ndarray:
    a1, a2, *_ = _elementary(basis)
    return a1.conj().T @ a2 + a2.conj().T @ a1


def build_h_full(params: SystemParams, basis: Basis) -> Operator:
    """Exact undriven Hamiltonian; Hermitian, conserves total excitation."""
    _check_basis(params, basis)
    a1, a2, _, _, smc = _elementary(basis)
    pec = excited_projector(basis, "qc").matrix
    h = _jc_terms(params, basis)
    h += params.epsilon_c * pec
    h += params.g_c * (smc.conj().T @ a1 + a1.conj().T @ smc)
    h += params.g_c * (smc.conj().T @ a2 + a2.conj().T @ smc)
    h += params.kappa0 * _hop(basis)
    return Operator(h, basis).require_hermitian()


def build_h_eff(params: SystemParams, basis: Basis) -> Operator:
    """Second-order dispersive effective Hamiltonian, block diagonal in the
    knob state.

    The knob imprints opposite Stark shifts on the resonators and adds
    +/- g_c^2/Delta_c to the hopping, so with g_c^2/Delta_c = kappa0 the net
    hopping is exactly zero on the knob-ground branch and 2*kappa0 on the
    knob-excited branch.
    """
    _check_basis(params, basis)
    if params.delta_c == 0:
        raise ValueError("Delta_c = 0: the dispersive expansion is undefined")
    chi = params.stark_shift
    a1, a2, *_ = _elementary(basis)
    pec = excited_projector(basis, "qc").matrix
    pgc = np.eye(basis.dim) - pec
    n12 = a1.conj().T @ a1 + a2.conj().T @ a2
    h = _jc_terms(params, basis)
    h -= chi * n12 @ pgc
    h += (params.epsilon_c + 2 * chi) * pec + chi * n12 @ pec
    h += (params.kappa0 * np.eye(basis.dim) + chi * knob_sigma_z(basis).matrix) @ _hop(basis)
    return Operator(h, basis).require_hermitian()


def build_dispersive_unitary(params: SystemParams, basis: Basis) -> Operator:
    """Exact exponential of the dispersive generator
    (g_c/Delta_c)(a_1 sigma_c^+ - a_1^dag sigma_c^- + a_2 sigma_c^+ - a_2^dag sigma_c^-).

    Computed by eigendecomposition of the Hermitian matrix i*G; unitary to
    1e-10. Reduces to the identity when g_c = 0.
    """
    _check_basis(params, basis)
    if params.delta_c == 0:
        raise ValueError("Delta_c = 0: the dispersive generator is undefined")
    a1, a2, _, _, smc = _elementary(basis)
    scp = smc.conj().T
    gen = (params.g_c / params.delta_c) * (
        a1 @ scp - a1.conj().T @ smc + a2 @ scp - a2.conj().T @ smc)
    herm = 1j * gen
    vals, vecs = np.linalg.eigh(herm)
    u = vecs @ (np.exp(-1j * vals)[:, None] * vecs.conj().T)
    return Operator(u, basis)


def build_h_driven_rotating(params: SystemParams, basis: Basis) -> Operator:
    """Static rotating-frame Hamiltonian of the driven system:
    H - w_d * N_tot + omega * (sigma_c^+ + sigma_c^-).

    Exactly equivalent to the time-dependent drive because the undriven
    Hamiltonian commutes with N_tot; the frame transform is exp(-i w_d t N_tot).
    """
    _check_basis(params, basis)
    if params.omega > 0 and params.w_d <= 0:
        raise ValueError("driven construction requires w_d > 0")
    smc = qubit_lowering(basis, "qc").matrix
    h = build_h_full(params, basis).matrix
    h = h - params.w_d * total_excitation(basis).matrix
    h = h + params.omega * (smc.conj().T + smc)
    return Operator(h, basis).require_hermitian()
