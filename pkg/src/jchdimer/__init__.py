"""Two-site Jaynes-Cummings-Hubbard simulator with a knob-qubit-controlled
photon hopping rate."""

from .dynamics import (TimeSeries, observe, propagate_driven_rotating,
                       propagate_static, propagate_timedep)
from .hamiltonian import (SystemParams, build_dispersive_unitary, build_h_eff,
                          build_h_driven_rotating, build_h_full)
from .hilbert import (EXCITED, GROUND, Basis, BasisState, Operator,
                      annihilator, build_basis, excited_projector,
                      knob_sigma_z, number_operator, polariton_number,
                      qubit_lowering, total_excitation)
from .spectra import (EigenDecomposition, PolaritonState, TwoPolaritonSpectrum,
                      delocalized_reference_states, eig_hermitian,
                      knob_raising_operator, localized_ground_state,
                      mixing_angle, polariton_product_state, polariton_states,
                      repulsion_energy, repulsion_energy_numeric,
                      resonance_and_detuning, transition_elements,
                      two_polariton_spectrum)

__version__ = "0.1.0"

__all__ = [
    "Basis", "BasisState", "EigenDecomposition", "EXCITED", "GROUND",
    "Operator", "PolaritonState", "SystemParams", "TimeSeries",
    "TwoPolaritonSpectrum", "annihilator", "build_basis",
    "build_dispersive_unitary", "build_h_driven_rotating", "build_h_eff",
    "build_h_full", "delocalized_reference_states", "eig_hermitian",
    "excited_projector", "knob_raising_operator", "knob_sigma_z",
    "localized_ground_state", "mixing_angle", "number_operator", "observe",
    "polariton_number", "polariton_product_state", "polariton_states",
    "propagate_driven_rotating", "propagate_static", "propagate_timedep",
    "qubit_lowering", "repulsion_energy", "repulsion_energy_numeric",
    "resonance_and_detuning", "total_excitation", "transition_elements",
    "two_polariton_spectrum",
]
