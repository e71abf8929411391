"""The sixteen-level spectrum with two polaritons in the resonators.

The lower eight levels belong to the knob-ground manifold (hopping off,
localized polaritons); the upper eight to the knob-excited manifold (hopping
2*kappa0, delocalized). The on-site repulsion u_r and the overlaps of the
delocalized eigenstates with their ideal superposition forms are the
quantities that place the two manifolds in distinct regimes.
"""
import numpy as np

from jchdimer import (SystemParams, delocalized_reference_states,
                      localized_ground_state, repulsion_energy,
                      repulsion_energy_numeric, resonance_and_detuning,
                      two_polariton_spectrum)

params = SystemParams(epsilon=41, epsilon_c=50, w=40, g_c=1, kappa0=0.1)
spectrum = two_polariton_spectrum(params)

wp = params.wprime("e")
print(f"u_r (closed form)        = {repulsion_energy(params, wp):.6f}")
print(f"u_r (two-site diagonal.) = {repulsion_energy_numeric(params, wp):.6f}")
print(f"hopping J (knob excited) = {params.hopping_coefficient('e'):.3f}"
      f"  ->  J/u_r = {params.hopping_coefficient('e') / repulsion_energy(params, wp):.3f}")

rel = spectrum.eig.relative_values()
print("\nlevel   E - E_1    knob-excited weight")
for level in range(1, 17):
    print(f"{level:5d}   {rel[level - 1]:8.4f}    {spectrum.knob_excited_weight(level):.3f}")

ground = localized_ground_state(params, spectrum.basis)
print(f"\n|<psi_1 | localized product>| = "
      f"{abs(np.vdot(spectrum.eigenvector_full(1), ground)):.4f}")
for k, phi in enumerate(delocalized_reference_states(params, spectrum.basis), 1):
    ov = abs(np.vdot(spectrum.eigenvector_full(8 + k), phi))
    print(f"|<psi_{8 + k} | phi_{k}>| = {ov:.4f}")

res = resonance_and_detuning(spectrum.eig)
print(f"\ndrive frequency w_d = {res.w_d:.4f}, protecting gap delta = {res.delta:.4f}")
