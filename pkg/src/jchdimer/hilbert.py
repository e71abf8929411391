"""Truncated Hilbert space for two boson modes and three two-level systems.

The joint space is spanned by occupation states |n1, n2, q1, q2, qc> where
n_i is the photon number of resonator i (0..n_max) and q1, q2, qc label the
two resonator qubits and the coupler ("knob") qubit, ground < excited.
States are ordered lexicographically by (n1, n2, q1, q2, qc), which fixes
matrix layouts, eigenvector component indices and CSV output across runs.

All operators are dense complex matrices bound to the basis they act on.
Applying a lowering operator to a sector-constrained basis yields a
rectangular map into the sector below; zero-padding is never used.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Iterable, NamedTuple

import numpy as np

GROUND, EXCITED = 0, 1

_QUBIT_NAMES = ("q1", "q2", "qc")
_HERMITIAN_TOL = 1e-12


class BasisState(NamedTuple):
    """One occupation-number state; qubit fields are GROUND (0) or EXCITED (1)."""

    n1: int
    n2: int
    q1: int
    q2: int
    qc: int

    @property
    def excitation_total(self) -> int:
        """Total excitation number including the knob qubit."""
        return self.n1 + self.n2 + self.q1 + self.q2 + self.qc

    @property
    def resonator_excitations(self) -> int:
        """Excitations held by the resonators and their local qubits (knob excluded)."""
        return self.n1 + self.n2 + self.q1 + self.q2

    def label(self) -> str:
        q = "ge"
        return f"{self.n1};{self.n2};{q[self.q1]};{q[self.q2]};{q[self.qc]}"


@dataclass(frozen=True)
class Basis:
    """Ordered, deduplicated list of BasisState with an optional excitation sector."""

    n_max: int
    states: tuple[BasisState, ...]
    sector: int | None = None
    index: dict[BasisState, int] = field(repr=False, compare=False, default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "index", {s: i for i, s in enumerate(self.states)})

    @property
    def dim(self) -> int:
        return len(self.states)

    def state_vector(self, state: BasisState | tuple) -> np.ndarray:
        """Unit vector on the given occupation state."""
        v = np.zeros(self.dim, dtype=complex)
        v[self.index[BasisState(*state)]] = 1.0
        return v


def build_basis(n_max: int, sector: int | None = None) -> Basis:
    """Enumerate the truncated joint space, optionally restricted to one
    total-excitation sector.

    Pure function: identical inputs give identical orderings. The
    unconstrained dimension is (n_max+1)^2 * 8.
    """
    if not isinstance(n_max, (int, np.integer)) or n_max < 0:
        raise ValueError(f"n_max must be a nonnegative integer, got {n_max!r}")
    if sector is not None:
        max_sector = 2 * n_max + 3
        if not isinstance(sector, (int, np.integer)) or not 0 <= sector <= max_sector:
            raise ValueError(
                f"sector must be in [0, {max_sector}] for n_max={n_max}, got {sector!r}"
            )
    states = tuple(
        BasisState(n1, n2, q1, q2, qc)
        for n1, n2, q1, q2, qc in itertools.product(
            range(n_max + 1), range(n_max + 1), (GROUND, EXCITED),
            (GROUND, EXCITED), (GROUND, EXCITED))
        if sector is None or n1 + n2 + q1 + q2 + qc == sector
    )
    return Basis(n_max=int(n_max), states=states, sector=None if sector is None else int(sector))


@dataclass(frozen=True)
class Operator:
    """Dense complex matrix bound to the basis it acts on.

    `basis` is the domain; `basis_out` the codomain (defaults to `basis`,
    rectangular for sector-to-sector maps).
    """

    matrix: np.ndarray
    basis: Basis
    basis_out: Basis | None = None

    def __post_init__(self):
        out = self.basis_out or self.basis
        if self.matrix.shape != (out.dim, self.basis.dim):
            raise ValueError(
                f"matrix shape {self.matrix.shape} does not match bases "
                f"({out.dim}, {self.basis.dim})")

    @property
    def is_square(self) -> bool:
        return self.matrix.shape[0] == self.matrix.shape[1]

    def dag(self) -> "Operator":
        return Operator(self.matrix.conj().T, self.basis_out or self.basis,
                        None if self.basis_out is None else self.basis)

    def hermiticity_defect(self) -> float:
        if not self.is_square:
            raise ValueError("hermiticity is defined for square operators only")
        return float(np.max(np.abs(self.matrix - self.matrix.conj().T)))

    def require_hermitian(self, tol: float = _HERMITIAN_TOL) -> "Operator":
        defect = self.hermiticity_defect()
        if defect >= tol:
            raise ValueError(f"operator is not Hermitian: max|M - M^dag| = {defect:.3e}")
        return self

    def expectation(self, state: np.ndarray) -> float:
        """<psi|O|psi>, returned real (operator must be Hermitian)."""
        self.require_hermitian()
        return float(np.real(np.vdot(state, self.matrix @ state)))


def _build_matrix(basis: Basis, action: Callable[[BasisState], Iterable[tuple[float, BasisState]]],
                  basis_out: Basis | None = None) -> np.ndarray:
    """Assemble a matrix column by column from a state -> [(amp, state)] rule."""
    out = basis_out or basis
    m = np.zeros((out.dim, basis.dim), dtype=complex)
    for j, s in enumerate(basis.states):
        for amp, t in action(s):
            i = out.index.get(t)
            if i is not None:
                m[i, j] += amp
    return m


def _lowered_basis(basis: Basis) -> Basis | None:
    """Codomain of a lowering operator on a sector-constrained basis."""
    if basis.sector is None:
        return None
    if basis.sector == 0:
        raise ValueError("cannot lower the zero-excitation sector")
    return build_basis(basis.n_max, basis.sector - 1)


def annihilator(basis: Basis, mode: int) -> Operator:
    """Photon annihilation operator for resonator `mode` (1 or 2).

    <n-1|a|n> = sqrt(n) on the addressed mode, identity elsewhere. On a
    sector-N basis the result is a rectangular map into sector N-1.
    """
    if mode not in (1, 2):
        raise ValueError(f"mode must be 1 or 2, got {mode!r}")
    pos = mode - 1

    def act(s: BasisState):
        n = s[pos]
        if n == 0:
            return []
        t = list(s)
        t[pos] = n - 1
        return [(np.sqrt(n), BasisState(*t))]

    out = _lowered_basis(basis)
    return Operator(_build_matrix(basis, act, out), basis, out)


def qubit_lowering(basis: Basis, which: str) -> Operator:
    """Lowering operator for qubit `which` in {"q1", "q2", "qc"}.

    sigma^- maps excited -> ground with amplitude 1 on the addressed qubit;
    sigma^+ is the conjugate transpose.
    """
    if which not in _QUBIT_NAMES:
        raise ValueError(f"which must be one of {_QUBIT_NAMES}, got {which!r}")
    pos = 2 + _QUBIT_NAMES.index(which)

    def act(s: BasisState):
        if s[pos] == EXCITED:
            t = list(s)
            t[pos] = GROUND
            return [(1.0, BasisState(*t))]
        return []

    out = _lowered_basis(basis)
    return Operator(_build_matrix(basis, act, out), basis, out)


def excited_projector(basis: Basis, which: str) -> Operator:
    """|e><e| on the addressed qubit, diagonal in the occupation basis."""
    if which not in _QUBIT_NAMES:
        raise ValueError(f"which must be one of {_QUBIT_NAMES}, got {which!r}")
    pos = 2 + _QUBIT_NAMES.index(which)
    diag = np.array([1.0 if s[pos] == EXCITED else 0.0 for s in basis.states])
    return Operator(np.diag(diag).astype(complex), basis)


def knob_sigma_z(basis: Basis) -> Operator:
    """sigma_z of the knob qubit, |e^c><e^c| - |g^c><g^c|."""
    diag = np.array([1.0 if s.qc == EXCITED else -1.0 for s in basis.states])
    return Operator(np.diag(diag).astype(complex), basis)


def number_operator(basis: Basis, mode: int) -> Operator:
    """Photon number operator a_i^dag a_i, diagonal."""
    if mode not in (1, 2):
        raise ValueError(f"mode must be 1 or 2, got {mode!r}")
    pos = mode - 1
    diag = np.array([float(s[pos]) for s in basis.states])
    return Operator(np.diag(diag).astype(complex), basis)


def polariton_number(basis: Basis, mode: int) -> Operator:
    """Local excitation count of resonator `mode`: photons plus its qubit.

    a_i^dag a_i + |e>_i<e|_i; Hermitian and diagonal in the occupation basis.
    """
    n = number_operator(basis, mode)
    p = excited_projector(basis, _QUBIT_NAMES[mode - 1])
    return Operator(n.matrix + p.matrix, basis)


def total_excitation(basis: Basis) -> Operator:
    """N_tot = n1 + n2 + all three qubit excitations, diagonal."""
    diag = np.array([float(s.excitation_total) for s in basis.states])
    return Operator(np.diag(diag).astype(complex), basis)


def subspace_indices(basis: Basis, predicate: Callable[[BasisState], bool]) -> list[int]:
    """Indices (in basis order) of the states satisfying `predicate`."""
    return [i for i, s in enumerate(basis.states) if predicate(s)]


def restrict_matrix(matrix: np.ndarray, indices: list[int]) -> np.ndarray:
    """Square submatrix of `matrix` on the given index set."""
    idx = np.asarray(indices)
    return matrix[np.ix_(idx, idx)]


def embed_vector(sub: np.ndarray, indices: list[int], dim: int) -> np.ndarray:
    """Lift a subspace vector back into the full space."""
    v = np.zeros(dim, dtype=complex)
    v[np.asarray(indices)] = sub
    return v
