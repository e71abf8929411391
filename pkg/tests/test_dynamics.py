import numpy as np
import pytest

from jchdimer import (EXCITED, GROUND, BasisState, SystemParams, TimeSeries,
                      build_basis, build_h_full, observe, polariton_number,
                      propagate_driven_rotating, propagate_static,
                      propagate_timedep, two_polariton_spectrum)


def test_zero_hamiltonian_is_frozen():
    psi0 = np.array([0.6, 0.8], dtype=complex)
    states = propagate_static(np.zeros((2, 2), dtype=complex), psi0, [0.0, 1.0, 5.0])
    assert np.allclose(states, psi0)


def test_eigenstate_acquires_only_global_phase():
    h = np.diag([0.0, 2.5]).astype(complex)
    psi0 = np.array([0.0, 1.0], dtype=complex)
    times = np.linspace(0, 3, 7)
    states = propagate_static(h, psi0, times)
    for t, psi in zip(times, states):
        assert abs(np.vdot(psi0, psi)) == pytest.approx(1.0, abs=1e-12)
        assert psi[1] == pytest.approx(np.exp(-1j * 2.5 * t))


def test_two_level_hopping_transfer_at_quarter_period():
    # closed-form 2x2: population transfer sin^2(Jt), complete at pi/(2J)
    j = 0.37
    h = np.array([[0.0, j], [j, 0.0]], dtype=complex)
    psi0 = np.array([1.0, 0.0], dtype=complex)
    t_full = np.pi / (2 * j)
    times = np.linspace(0, t_full, 50)
    states = propagate_static(h, psi0, times)
    assert np.allclose(np.abs(states[:, 1])**2, np.sin(j * times)**2, atol=1e-12)
    assert abs(states[-1, 1])**2 == pytest.approx(1.0, abs=1e-12)


def test_norm_and_energy_conserved_along_trajectory(spectrum_params, full_basis):
    h = build_h_full(spectrum_params, full_basis)
    psi0 = full_basis.state_vector(BasisState(1, 1, GROUND, GROUND, GROUND))
    times = np.linspace(0, 50, 101)
    states = propagate_static(h, psi0, times)
    norms = np.linalg.norm(states, axis=1)
    assert np.max(np.abs(norms - 1)) < 1e-10
    energies = np.real(np.einsum("ti,ij,tj->t", states.conj(), h.matrix, states))
    assert np.max(np.abs(energies - energies[0])) < 1e-8


def test_static_rejects_bad_input(full_basis):
    h = np.eye(4, dtype=complex)
    with pytest.raises(ValueError):
        propagate_static(h, np.array([1.0, 0, 0], dtype=complex), [0, 1])
    with pytest.raises(ValueError):
        propagate_static(h, np.array([1.0, 1.0, 0, 0], dtype=complex), [0, 1])
    with pytest.raises(ValueError, match="not Hermitian"):
        propagate_static(np.array([[0, 1], [0, 0]], dtype=complex),
                         np.array([1.0, 0], dtype=complex), [0, 1])


def _two_level_drive_params(omega):
    # decoupled knob qubit: g_c = 0 and kappa0 = 0 isolate a driven two-level system
    return SystemParams(epsilon=45.0, epsilon_c=50.0, w=40.0, g_c=0.0,
                        kappa0=0.0, omega=omega, w_d=50.0, n_max=1)


def test_undriven_timedep_matches_static():
    params = _two_level_drive_params(0.0)
    basis = build_basis(params.n_max)
    psi0 = basis.state_vector(BasisState(1, 0, GROUND, GROUND, GROUND))
    times = np.linspace(0, 2.0, 9)
    direct = propagate_timedep(params, basis, psi0, times, step=1e-3)
    static = propagate_static(build_h_full(params, basis), psi0, times)
    assert np.max(np.abs(direct - static)) < 1e-8


def test_resonant_rabi_flopping_closed_form():
    omega = 0.3
    params = _two_level_drive_params(omega)
    basis = build_basis(params.n_max)
    psi0 = basis.state_vector(BasisState(0, 0, GROUND, GROUND, GROUND))
    excited = basis.state_vector(BasisState(0, 0, GROUND, GROUND, EXCITED))
    times = np.linspace(0, np.pi / omega, 40)
    states = propagate_timedep(params, basis, psi0, times, step=5e-4)
    ground_pop = np.abs(states.conj() @ psi0)
    excited_pop = np.abs(states.conj() @ excited)
    assert np.max(np.abs(ground_pop - np.abs(np.cos(omega * times)))) < 1e-6
    assert np.max(np.abs(excited_pop - np.abs(np.sin(omega * times)))) < 1e-6


def test_rotating_frame_matches_direct_integration_short_window(drive_params):
    basis = build_basis(drive_params.n_max)
    spectrum = two_polariton_spectrum(drive_params, basis)
    psi0 = spectrum.eigenvector_full(1)
    times = np.linspace(0, 2.0, 5)
    rotating = propagate_driven_rotating(drive_params, basis, psi0, times)
    e1 = float(np.real(np.vdot(psi0, build_h_full(drive_params, basis).matrix @ psi0)))
    direct = propagate_timedep(drive_params, basis, psi0, times, step=5e-4,
                               energy_shift=e1 + drive_params.w_d / 2)
    dist = np.max(np.linalg.norm(rotating - direct, axis=1))
    assert dist < 5e-8


def test_coarse_step_raises_with_diagnostic():
    params = _two_level_drive_params(0.3)
    basis = build_basis(params.n_max)
    psi0 = basis.state_vector(BasisState(0, 0, GROUND, GROUND, GROUND))
    with pytest.raises(RuntimeError, match="norm drift"):
        propagate_timedep(params, basis, psi0, np.linspace(0, 50, 6), step=0.3,
                          energy_shift=0.0)


def test_observe_contracts(spectrum_params, full_basis):
    h = build_h_full(spectrum_params, full_basis)
    psi0 = full_basis.state_vector(BasisState(1, 0, GROUND, GROUND, EXCITED))
    times = np.linspace(0, 20, 41)
    states = propagate_static(h, psi0, times)
    n1 = polariton_number(full_basis, 1)
    n2 = polariton_number(full_basis, 2)
    series = observe(states, times, expectations={"n1": n1, "n2": n2},
                     overlaps={"self": psi0})
    assert series.channels["self"][0] == pytest.approx(1.0, abs=1e-12)
    # the summed polariton count only exchanges with the knob qubit
    from jchdimer import excited_projector
    pec = excited_projector(full_basis, "qc")
    total = observe(states, times, expectations={"pc": pec}).channels["pc"]
    conserved = series.channels["n1"] + series.channels["n2"] + total
    assert np.max(np.abs(conserved - conserved[0])) < 1e-10


def test_observe_rejects_non_hermitian(full_basis, spectrum_params):
    psi0 = full_basis.state_vector(BasisState(0, 0, GROUND, GROUND, GROUND))
    states = psi0[None, :]
    bad = np.zeros((full_basis.dim, full_basis.dim), dtype=complex)
    bad[0, 1] = 1.0
    with pytest.raises(ValueError, match="not Hermitian"):
        observe(states, [0.0], expectations={"bad": bad})


def test_timeseries_validation_and_csv(tmp_path):
    with pytest.raises(ValueError, match="strictly increasing"):
        TimeSeries(times=np.array([0.0, 0.0, 1.0]),
                   channels={"a": np.zeros(3)})
    with pytest.raises(ValueError, match="length"):
        TimeSeries(times=np.array([0.0, 1.0]), channels={"a": np.zeros(3)})
    series = TimeSeries(times=np.array([0.0, 0.5]),
                        channels={"x": np.array([1.0, 1 / 3])})
    path = tmp_path / "series.csv"
    series.write_csv(path)
    lines = path.read_text().splitlines()
    assert lines[0] == "t,x"
    assert lines[2] == "0.5,0.333333333333"  # 12 significant digits
