"""Scenario runners reproducing the reference spectra, switching dynamics,
phase-superposition Rabi oscillation and the knob-controlled two-qubit gate.

Each runner returns a ScenarioReport whose targets carry a provenance kind:

* ``reference`` — published reference value with an explicit tolerance;
* ``exact``     — mathematical identity that must hold to near machine level;
* ``derived``   — engineering bound established by independent reasoning.

Reports are reproducible: identical parameters produce identical CSV bytes.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field

import numpy as np

from .dynamics import TimeSeries, observe, propagate_driven_rotating, propagate_static
from .hamiltonian import SystemParams, build_h_eff, build_h_full
from .hilbert import (EXCITED, GROUND, BasisState, build_basis,
                      polariton_number)
from .spectra import (TwoPolaritonSpectrum, delocalized_reference_states,
                      eig_hermitian, knob_raising_operator,
                      localized_ground_state, mixing_angle, polariton_states,
                      polariton_product_state, repulsion_energy,
                      repulsion_energy_numeric, resonance_and_detuning,
                      transition_elements, two_polariton_spectrum)

SQRT_HALF = float(np.sqrt(2) / 2)

# default parameter sets for the reference scenarios (energies in units of g)
SWITCHING_DEFAULTS = dict(epsilon=45.0, epsilon_c=50.0, w=40.0, g_c=1.0, kappa0=0.1, n_max=4)
SPECTRUM_DEFAULTS = dict(epsilon=41.0, epsilon_c=50.0, w=40.0, g_c=1.0, kappa0=0.1, n_max=4)
DRIVE_DEFAULTS = dict(omega=0.07, w_d=50.2750)

# published reference values this simulator is checked against
REF_REPULSION = (0.259, 0.005)
REF_HOPPING_ON = (0.2, 1e-12)
REF_OVERLAPS = ((0.980, 0.002), (0.998, 0.002), (0.979, 0.002))
REF_DRIVE_FREQUENCY = (50.2750, 0.001)
REF_MIN_OFF_RESONANCE = (0.2151, 0.001)
REF_RABI_RATE = (0.0495, 0.002)


def format_float(x: float) -> str:
    return format(float(x), ".12g")


@dataclass(frozen=True)
class TargetCheck:
    """One computed quantity compared against its target."""

    name: str
    value: float
    target: float
    tolerance: float
    kind: str           # "reference" | "exact" | "derived"
    comparison: str = "abs"   # "abs" |V-T|<=tol, "le" V<=T, "ge" V>=T
    detail: str = ""

    @property
    def passed(self) -> bool:
        if self.comparison == "abs":
            return abs(self.value - self.target) <= self.tolerance
        if self.comparison == "le":
            return self.value <= self.target
        if self.comparison == "ge":
            return self.value >= self.target
        raise ValueError(f"unknown comparison {self.comparison!r}")


@dataclass
class ScenarioReport:
    """Inputs, computed targets and emitted files of one scenario run."""

    scenario: str
    params: SystemParams
    targets: list[TargetCheck] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)
    csv_paths: list[str] = field(default_factory=list)

    def add(self, *args, **kwargs) -> TargetCheck:
        check = TargetCheck(*args, **kwargs)
        self.targets.append(check)
        return check

    def get(self, name: str) -> TargetCheck:
        for t in self.targets:
            if t.name == name:
                return t
        raise KeyError(name)

    @property
    def reference_targets_pass(self) -> bool:
        return all(t.passed for t in self.targets if t.kind == "reference")

    @property
    def all_targets_pass(self) -> bool:
        return all(t.passed for t in self.targets)

    def summary_lines(self) -> list[str]:
        lines = [f"scenario = {self.scenario}"]
        for name in ("epsilon", "epsilon_c", "w", "g", "g_c", "kappa0",
                     "omega", "w_d", "n_max"):
            lines.append(f"param.{name} = {getattr(self.params, name)}")
        for t in self.targets:
            status = "pass" if t.passed else "FAIL"
            lines.append(f"target.{t.name}.value = {format_float(t.value)}")
            lines.append(f"target.{t.name}.target = {format_float(t.target)}")
            lines.append(f"target.{t.name}.tolerance = {format_float(t.tolerance)}")
            lines.append(f"target.{t.name}.comparison = {t.comparison}")
            lines.append(f"target.{t.name}.kind = {t.kind}")
            lines.append(f"target.{t.name}.status = {status}")
            if t.detail:
                lines.append(f"target.{t.name}.detail = {t.detail}")
        for i, note in enumerate(self.notes, 1):
            lines.append(f"note.{i} = {note}")
        lines.append(f"reference_targets_pass = {str(self.reference_targets_pass).lower()}")
        lines.append(f"all_targets_pass = {str(self.all_targets_pass).lower()}")
        return lines

    def write(self, out_dir: str) -> None:
        os.makedirs(out_dir, exist_ok=True)
        with open(os.path.join(out_dir, "summary.txt"), "w", encoding="utf-8") as fh:
            fh.write("\n".join(self.summary_lines()) + "\n")
        with open(os.path.join(out_dir, "summary.csv"), "w", encoding="utf-8") as fh:
            fh.write("name,value,target,tolerance,comparison,kind,status\n")
            for t in self.targets:
                fh.write(",".join([
                    t.name, format_float(t.value), format_float(t.target),
                    format_float(t.tolerance), t.comparison, t.kind,
                    "pass" if t.passed else "FAIL"]) + "\n")
        with open(os.path.join(out_dir, "resolved_params.txt"), "w", encoding="utf-8") as fh:
            for name in ("epsilon", "epsilon_c", "w", "g", "g_c", "kappa0",
                         "omega", "w_d", "n_max"):
                fh.write(f"{name} = {getattr(self.params, name)}\n")


def _write_timeseries(report: ScenarioReport, series: TimeSeries,
                      out_dir: str | None, filename: str) -> None:
    if out_dir is None:
        return
    os.makedirs(out_dir, exist_ok=True)
    path = os.path.join(out_dir, filename)
    series.write_csv(path)
    report.csv_paths.append(path)


def _dispersive_note(report: ScenarioReport, params: SystemParams) -> None:
    if not params.dispersive_ok:
        report.notes.append(
            f"dispersive ratio |g_c/Delta_c| = {abs(params.dispersive_ratio):.3f} "
            "violates the dispersive-regime requirement")


# ---------------------------------------------------------------------------
# knob switching (localized vs delocalized photon dynamics)
# ---------------------------------------------------------------------------

def run_knob_switch(params: SystemParams | None = None, out_dir: str | None = None,
                    t_end: float = 100.0, samples: int = 2001
                    ) -> tuple[ScenarioReport, TimeSeries]:
    """One photon in resonator 1; compare full and effective dynamics with the
    knob prepared ground (hopping off) and excited (hopping on)."""
    params = params or SystemParams(**SWITCHING_DEFAULTS)
    report = ScenarioReport("knob-switch", params)
    _dispersive_note(report, params)

    basis = build_basis(params.n_max)
    times = np.linspace(0.0, t_end, samples)
    n_ops = {"n1": polariton_number(basis, 1), "n2": polariton_number(basis, 2)}
    h_by_kind = {"full": build_h_full(params, basis), "eff": build_h_eff(params, basis)}

    channels: dict[str, np.ndarray] = {}
    for knob_label, knob in (("g", GROUND), ("e", EXCITED)):
        psi0 = basis.state_vector(BasisState(1, 0, GROUND, GROUND, knob))
        for kind, h in h_by_kind.items():
            states = propagate_static(h, psi0, times)
            series = observe(states, times, expectations=n_ops)
            for ch in ("n1", "n2"):
                channels[f"{ch}_{kind}_knob_{knob_label}"] = series.channels[ch]

    series = TimeSeries(times=times, channels=channels)
    _write_timeseries(report, series, out_dir, "knob_switch.csv")

    report.add("eff_knob_g_max_n2", float(np.max(channels["n2_eff_knob_g"])),
               1e-9, 0.0, "exact", "le",
               detail="hopping coefficient is exactly zero on the knob-ground branch")
    report.add("full_knob_g_max_n2", float(np.max(channels["n2_full_knob_g"])),
               0.05, 0.0, "derived", "le",
               detail="residual beyond-second-order hopping grows secularly")
    report.add("full_knob_e_peak_n2", float(np.max(channels["n2_full_knob_e"])),
               0.9, 0.0, "derived", "ge")
    report.add("eff_knob_e_peak_n2", float(np.max(channels["n2_eff_knob_e"])),
               0.9, 0.0, "derived", "ge")

    # first substantial transfer peak vs the two-level polariton-hopping model
    theta1 = mixing_angle(params.detuning("e"), params.g, 1)
    j_pol = params.hopping_coefficient("e") * np.sin(theta1)**2
    t_pred = np.pi / (2 * j_pol)
    n2e = channels["n2_full_knob_e"]
    peak_t = t_end
    for i in range(1, len(times) - 1):
        if n2e[i] > 0.5 and n2e[i] >= n2e[i - 1] and n2e[i] >= n2e[i + 1]:
            peak_t = float(times[i])
            break
    report.add("full_knob_e_first_peak_time", peak_t, t_pred, 0.15 * t_pred,
               "derived", "abs",
               detail=f"two-level prediction pi/(2*J*sin^2(theta_1)) = {t_pred:.3f}")

    if out_dir is not None:
        report.write(out_dir)
    return report, series


# ---------------------------------------------------------------------------
# two-polariton spectrum and its reference quantities
# ---------------------------------------------------------------------------

def full_hamiltonian_resonance(params: SystemParams,
                               spectrum: TwoPolaritonSpectrum) -> tuple[float, float]:
    """(w_d, delta) recomputed from the exact Hamiltonian's eigenstates,
    matched to the effective-Hamiltonian levels by overlap."""
    h = build_h_full(params, spectrum.basis).matrix
    eig = eig_hermitian(h)

    def match(level: int) -> float:
        ref = spectrum.eigenvector_full(level)
        return float(eig.values[int(np.argmax(np.abs(eig.vectors.conj().T @ ref)))])

    e1, e2, e9, e10 = (match(level) for level in (1, 2, 9, 10))
    w_d = e9 - e1
    delta = min(e2 - e1, (e10 - e9) - (e2 - e1))
    return float(w_d), float(delta)


def run_spectrum(params: SystemParams | None = None,
                 out_dir: str | None = None) -> tuple[ScenarioReport, TwoPolaritonSpectrum]:
    """16-level two-polariton spectrum with repulsion energy, hopping
    strengths, reference-state overlaps and the drive spectroscopy values."""
    params = params or SystemParams(**SPECTRUM_DEFAULTS)
    report = ScenarioReport("spectrum", params)
    _dispersive_note(report, params)

    spectrum = two_polariton_spectrum(params)
    basis = spectrum.basis

    # repulsion energy on the knob-excited branch, closed form and numeric
    wp_e = params.wprime("e")
    u_closed = repulsion_energy(params, wp_e)
    u_numeric = repulsion_energy_numeric(params, wp_e)
    report.add("u_r_closed_form", u_closed, *REF_REPULSION, "reference")
    report.add("u_r_closed_vs_numeric", abs(u_closed - u_numeric), 1e-10, 0.0,
               "exact", "le")

    # net hopping read directly from effective-Hamiltonian matrix elements
    h_eff = build_h_eff(params, basis).matrix
    j_vals = {}
    for knob_label, knob in (("g", GROUND), ("e", EXCITED)):
        bra = basis.index[BasisState(1, 0, GROUND, GROUND, knob)]
        ket = basis.index[BasisState(0, 1, GROUND, GROUND, knob)]
        j_vals[knob_label] = float(np.real(h_eff[bra, ket]))
    report.add("hopping_knob_e", j_vals["e"], *REF_HOPPING_ON, "reference",
               detail="2*kappa0 with the knob excited")
    report.add("hopping_knob_g", abs(j_vals["g"]), 1e-15, 0.0, "reference", "le",
               detail="exactly zero when g_c^2/Delta_c = kappa0")

    # manifold split: lower 8 knob-ground, upper 8 knob-excited
    weights = [spectrum.knob_excited_weight(level) for level in range(1, 17)]
    split_ok = max(weights[:8]) < 1e-12 and min(weights[8:]) > 1 - 1e-12
    report.add("manifold_split", 1.0 if split_ok else 0.0, 1.0, 0.0, "exact", "ge",
               detail="knob-excited population per level: lower 8 = 0, upper 8 = 1")

    # overlap labeling against reference states (never by index alone)
    ground_ref = localized_ground_state(params, basis)
    phis = delocalized_reference_states(params, basis)
    ov_ground = abs(np.vdot(spectrum.eigenvector_full(1), ground_ref))
    report.add("ground_overlap_localized", float(ov_ground), 0.999, 0.0, "derived", "ge")
    for k, (phi, (target, tol)) in enumerate(zip(phis, REF_OVERLAPS), start=1):
        level = 9 + k - 1
        ovs = [abs(np.vdot(spectrum.eigenvector_full(m), phi)) for m in range(9, 17)]
        best = 9 + int(np.argmax(ovs))
        if best != level:
            report.notes.append(
                f"overlap labeling: phi_{k} matches level {best}, not {level}")
        report.add(f"overlap_psi{level}_phi{k}",
                   float(abs(np.vdot(spectrum.eigenvector_full(level), phi))),
                   target, tol, "reference")

    res = resonance_and_detuning(spectrum.eig)
    report.add("drive_frequency", res.w_d, *REF_DRIVE_FREQUENCY, "reference",
               detail="E9 - E1 of the effective 16-level spectrum")
    report.add("min_off_resonance", res.delta, *REF_MIN_OFF_RESONANCE, "reference")
    if not res.usable:
        report.notes.append("protecting gap collapsed: drive regime unusable")
    wd_full, delta_full = full_hamiltonian_resonance(params, spectrum)
    report.notes.append(
        f"exact-Hamiltonian comparison: w_d = {wd_full:.6f}, delta = {delta_full:.6f}")

    if out_dir is not None:
        os.makedirs(out_dir, exist_ok=True)
        path = os.path.join(out_dir, "spectrum.csv")
        rel = spectrum.eig.relative_values()
        with open(path, "w", encoding="utf-8") as fh:
            fh.write("index,eigenvalue,relative_to_E1,dominant_basis_state,dominant_amplitude\n")
            for level in range(1, 17):
                vec = spectrum.eig.vectors[:, level - 1]
                dom = int(np.argmax(np.abs(vec)))
                fh.write(",".join([
                    str(level),
                    format_float(spectrum.eig.values[level - 1]),
                    format_float(rel[level - 1]),
                    spectrum.states[dom].label(),
                    format_float(abs(vec[dom]))]) + "\n")
        report.csv_paths.append(path)
        report.write(out_dir)
    return report, spectrum


# ---------------------------------------------------------------------------
# Rabi oscillation between the localized and delocalized photon phases
# ---------------------------------------------------------------------------

def extract_first_trough(times: np.ndarray, overlap: np.ndarray,
                         rate_estimate: float | None = None) -> int:
    """Index of the first Rabi trough of an overlap trace.

    The fast dressing wiggles produce shallow local minima on the descent, so
    the search takes the global minimum inside a window around the expected
    trough time pi/(2*rate_estimate) (whole trace when no estimate is given).
    """
    if rate_estimate is None or rate_estimate <= 0:
        return int(np.argmin(overlap))
    t_est = np.pi / (2 * rate_estimate)
    window = (times >= 0.5 * t_est) & (times <= 1.5 * t_est)
    if not np.any(window):
        return int(np.argmin(overlap))
    candidates = np.where(window)[0]
    return int(candidates[np.argmin(overlap[candidates])])


def run_phase_rabi(params: SystemParams | None = None, out_dir: str | None = None,
                   sample_step: float = 0.02) -> tuple[ScenarioReport, TimeSeries]:
    """Drive the knob at w_d from the localized two-polariton ground state and
    track the overlap with that state and with the delocalized target."""
    if params is None:
        params = SystemParams(**SPECTRUM_DEFAULTS, **DRIVE_DEFAULTS)
    if params.omega <= 0 or params.w_d <= 0:
        raise ValueError("phase-rabi scenario requires omega > 0 and w_d > 0")
    report = ScenarioReport("phase-rabi", params)
    _dispersive_note(report, params)

    spectrum = two_polariton_spectrum(params)
    basis = spectrum.basis
    psi1 = spectrum.eigenvector_full(1)
    psi9 = spectrum.eigenvector_full(9)
    phi1 = delocalized_reference_states(params, basis)[0]

    raise_op = knob_raising_operator(basis)
    t_matrix = transition_elements(spectrum, raise_op)
    coupling = params.omega * float(t_matrix[8, 0])

    res = resonance_and_detuning(spectrum.eig)
    mismatch = abs(params.w_d - res.w_d)
    if mismatch > res.delta / 10:
        report.notes.append(
            f"drive resonance mismatch {mismatch:.4f} exceeds delta/10 = {res.delta / 10:.4f}")
    report.notes.append(f"recomputed resonance (effective spectrum): w_d = {res.w_d:.6f}")
    wd_full, _ = full_hamiltonian_resonance(params, spectrum)
    report.notes.append(f"recomputed resonance (exact Hamiltonian): w_d = {wd_full:.6f}")

    # full window covers one revival of the expected two-level oscillation
    t_end = 2 * np.pi / coupling
    times = np.arange(0.0, t_end + sample_step, sample_step)
    states = propagate_driven_rotating(params, basis, psi1, times)
    series = observe(states, times, overlaps={"overlap_psi1": psi1,
                                              "overlap_phi1e": phi1,
                                              "overlap_psi9": psi9})
    o1 = series.channels["overlap_psi1"]
    o9 = series.channels["overlap_psi9"]
    leakage = 1.0 - o1**2 - o9**2
    series = TimeSeries(times=times, channels={
        "overlap_psi1": o1, "overlap_phi1e": series.channels["overlap_phi1e"],
        "span_leakage": leakage})
    _write_timeseries(report, series, out_dir, "phase_rabi.csv")

    i_min = extract_first_trough(times, o1, rate_estimate=coupling)
    omega_prime = float(np.pi / (2 * times[i_min]))
    report.add("rabi_rate_extracted", omega_prime, *REF_RABI_RATE, "reference",
               detail=f"first trough at t = {times[i_min]:.3f}, depth {o1[i_min]:.4f}")
    report.add("matrix_element_vs_extracted", abs(coupling - omega_prime),
               1e-3, 0.0, "derived", "le",
               detail=f"omega*T[9,1] = {coupling:.6f}")

    # equal-superposition instant of the extracted oscillation
    t_cat = np.pi / (4 * omega_prime)
    cat_state = propagate_driven_rotating(params, basis, psi1, np.array([0.0, t_cat]))[1]
    cat1 = float(abs(np.vdot(psi1, cat_state)))
    cat_phi = float(abs(np.vdot(phi1, cat_state)))
    report.add("cat_overlap_psi1", cat1, SQRT_HALF, 0.05, "reference",
               detail=f"evaluated at t = pi/(4*Omega') = {t_cat:.3f}")
    report.add("cat_overlap_phi1e", cat_phi, SQRT_HALF, 0.05, "reference")

    both_close = (np.abs(o1 - SQRT_HALF) <= 0.05) \
        & (np.abs(series.channels["overlap_phi1e"] - SQRT_HALF) <= 0.05)
    if np.any(both_close):
        first = float(times[int(np.argmax(both_close))])
        report.notes.append(f"first equal-superposition instant on the grid: t = {first:.3f}")

    report.add("span_leakage_max", float(np.max(leakage)), 0.05, 0.0, "derived", "le",
               detail="population outside span{psi1, psi9}")
    half = times <= np.pi / omega_prime
    two_state_dev = float(np.max(np.abs(o1[half] - np.abs(np.cos(omega_prime * times[half])))))
    report.add("two_state_model_deviation", two_state_dev, 0.05, 0.0, "derived", "le")

    if out_dir is not None:
        report.write(out_dir)
    return report, series


# ---------------------------------------------------------------------------
# knob-controlled exchange gate
# ---------------------------------------------------------------------------

def solve_stark_for_exchange(params: SystemParams, jprime: float) -> float:
    """Stark shift x = g_c^2/Delta_c such that the logical exchange rate
    (kappa0 - x) sin^2(theta_1) equals `jprime` (knob kept in the ground state,
    so w' = w - x). Solved by damped Newton iteration."""
    if not 0 < jprime < params.kappa0:
        raise ValueError("target exchange rate must lie in (0, kappa0)")

    def rate(x: float) -> float:
        theta = mixing_angle(params.epsilon - (params.w - x), params.g, 1)
        return (params.kappa0 - x) * np.sin(theta)**2

    x = params.kappa0 / 2
    for _ in range(100):
        f = rate(x) - jprime
        if abs(f) < 1e-14:
            return float(x)
        h = 1e-8
        df = (rate(x + h) - rate(x - h)) / (2 * h)
        x -= f / df
        x = min(max(x, 1e-6), params.kappa0 - 1e-6)
    raise RuntimeError("exchange-rate solve did not converge")


def _gate_params(base: SystemParams, stark: float) -> SystemParams:
    return base.with_overrides(epsilon_c=base.w + base.g_c**2 / stark)


def _logical_states(params: SystemParams, basis):
    lower1, _ = polariton_states(params, params.wprime("g"), 1)
    zero = polariton_states(params, params.wprime("g"), 0)[0]
    return {
        "00": polariton_product_state(basis, zero, zero, GROUND),
        "01": polariton_product_state(basis, zero, lower1, GROUND),
        "10": polariton_product_state(basis, lower1, zero, GROUND),
        "11": polariton_product_state(basis, lower1, lower1, GROUND),
    }


def run_iswap_gate(params: SystemParams | None = None, out_dir: str | None = None,
                   jprime_targets: tuple[float, ...] = (0.01, 0.02, 0.05),
                   primary_jprime: float = 0.02, samples: int = 801
                   ) -> tuple[ScenarioReport, TimeSeries]:
    """Exchange gate on the logical states |0>_L = |0->, |1>_L = |1-> with the
    knob held in its ground state.

    OFF setting: g_c^2/Delta_c = kappa0, zero net hopping, no exchange at all.
    ON settings: Delta_c detuned so the polariton exchange rate J' hits each
    target; the |01> population follows sin^2(J' t) and a quarter exchange
    period realizes the entangling square-root-of-iSWAP gate.
    """
    base = params or SystemParams(**SPECTRUM_DEFAULTS)
    report = ScenarioReport("iswap-gate", base)

    basis = build_basis(base.n_max)

    # OFF: exact decoupling
    off_params = _gate_params(base, base.kappa0)
    logical_off = _logical_states(off_params, basis)
    h_off = build_h_eff(off_params, basis)
    t_off = np.linspace(0.0, 200.0, 201)
    states_off = propagate_static(h_off, logical_off["01"], t_off)
    off_series = observe(states_off, t_off, overlaps={"ov": logical_off["10"]})
    report.add("off_exchange_max", float(np.max(off_series.channels["ov"])),
               1e-12, 0.0, "exact", "le",
               detail="knob-ground hopping identically zero in the OFF setting")
    for name in ("00", "11"):
        states = propagate_static(h_off, logical_off[name], t_off)
        ov = observe(states, t_off, overlaps={"ov": logical_off[name]}).channels["ov"]
        report.add(f"off_stationary_{name}", float(np.min(ov)), 1.0, 1e-6,
                   "reference", "abs",
                   detail="logical basis state is an exact eigenstate when hopping is off")

    # ON sweep
    primary_series: TimeSeries | None = None
    sweep_rows = []
    for jp in jprime_targets:
        stark = solve_stark_for_exchange(base, jp)
        on_params = _gate_params(base, stark)
        exchange = on_params.hopping_coefficient("g")
        u_r = repulsion_energy(on_params, on_params.wprime("g"))
        ratio = exchange / u_r
        if ratio > 0.3:
            report.notes.append(
                f"J' = {jp}: J/u_r = {ratio:.3f} exceeds the 0.3 blockade criterion")
        logical = _logical_states(on_params, basis)
        h_on = build_h_eff(on_params, basis)
        t_gate = np.pi / (4 * jp)
        times = np.linspace(0.0, 2 * t_gate, samples)
        traj = propagate_static(h_on, logical["01"], times)
        ser = observe(traj, times, overlaps={"p01": logical["01"], "p10": logical["10"]})
        p10 = ser.channels["p10"]**2
        sin2_err = float(np.max(np.abs(p10 - np.sin(jp * times)**2)))

        ov_states = {}
        for name in ("00", "11"):
            st = propagate_static(h_on, logical[name], times)
            ov_states[name] = observe(st, times,
                                      overlaps={"ov": logical[name]}).channels["ov"]
        # sqrt(iSWAP) fidelity at the quarter-exchange instant
        psi_gate = propagate_static(h_on, logical["01"], np.array([0.0, t_gate]))[1]
        ideal = (logical["01"] - 1j * logical["10"]) / np.sqrt(2)
        fidelity = float(abs(np.vdot(ideal, psi_gate))**2)

        sweep_rows.append((jp, stark, on_params.delta_c, exchange, u_r, ratio,
                           sin2_err, float(np.min(ov_states["00"])),
                           float(np.min(ov_states["11"])), fidelity))
        if abs(jp - primary_jprime) < 1e-12:
            report.add("on_exchange_sin2_error", sin2_err, 0.02, 0.0, "derived", "le",
                       detail=f"J' = {jp}, J/u_r = {ratio:.3f}")
            report.add("on_stationary_00", float(np.min(ov_states["00"])), 1.0, 1e-6,
                       "reference", "abs")
            report.add("on_min_overlap_11", float(np.min(ov_states["11"])), 0.93, 0.0,
                       "derived", "ge",
                       detail="virtual blockade leakage at the (J/u_r)^2 scale")
            report.add("sqrt_iswap_fidelity", fidelity, 0.99, 0.0, "derived", "ge",
                       detail=f"evaluated at t = pi/(4 J') = {t_gate:.2f}")
            # exchanged component must lag by -pi/2
            mid = samples // 2
            rel_phase = np.angle(np.vdot(logical["10"], traj[mid])
                                 / np.vdot(logical["01"], traj[mid]))
            report.add("on_exchange_phase", rel_phase, -np.pi / 2, 0.02, "derived", "abs")
            primary_series = TimeSeries(times=times, channels={
                "p01": ser.channels["p01"]**2, "p10": p10,
                "sin2_reference": np.sin(jp * times)**2,
                "overlap_00": ov_states["00"], "overlap_11": ov_states["11"]})

    if primary_series is not None:
        _write_timeseries(report, primary_series, out_dir, "iswap_gate.csv")
    if out_dir is not None:
        os.makedirs(out_dir, exist_ok=True)
        path = os.path.join(out_dir, "iswap_sweep.csv")
        with open(path, "w", encoding="utf-8") as fh:
            fh.write("jprime,stark_shift,delta_c,exchange_J,u_r,J_over_ur,"
                     "sin2_error,min_overlap_00,min_overlap_11,sqrt_iswap_fidelity\n")
            for row in sweep_rows:
                fh.write(",".join(format_float(x) for x in row) + "\n")
        report.csv_paths.append(path)
        report.write(out_dir)
    return report, primary_series


# ---------------------------------------------------------------------------
# dispersive-approximation validation
# ---------------------------------------------------------------------------

def _max_curve_deviation(params: SystemParams, basis, knob: int,
                         times: np.ndarray) -> float:
    psi0 = basis.state_vector(BasisState(1, 0, GROUND, GROUND, knob))
    n_ops = {"n1": polariton_number(basis, 1), "n2": polariton_number(basis, 2)}
    dev = 0.0
    full = observe(propagate_static(build_h_full(params, basis), psi0, times),
                   times, expectations=n_ops)
    eff = observe(propagate_static(build_h_eff(params, basis), psi0, times),
                  times, expectations=n_ops)
    for ch in ("n1", "n2"):
        dev = max(dev, float(np.max(np.abs(full.channels[ch] - eff.channels[ch]))))
    return dev


def run_dispersive_validation(params: SystemParams | None = None,
                              out_dir: str | None = None,
                              detuning_sweep: tuple[float, ...] = (10.0, 8.0, 6.0, 4.0, 2.0),
                              t_end: float = 100.0, samples: int = 1001
                              ) -> ScenarioReport:
    """Maximum deviation between exact and effective polariton-number curves,
    per knob state, plus its growth as the knob detuning shrinks."""
    params = params or SystemParams(**SWITCHING_DEFAULTS)
    report = ScenarioReport("validate-dispersive", params)
    _dispersive_note(report, params)
    basis = build_basis(params.n_max)
    times = np.linspace(0.0, t_end, samples)

    dev_g = _max_curve_deviation(params, basis, GROUND, times)
    dev_e = _max_curve_deviation(params, basis, EXCITED, times)
    report.add("max_deviation_knob_g", dev_g, 0.1, 0.0, "derived", "le")
    report.add("max_deviation_knob_e", dev_e, 0.1, 0.0, "derived", "le",
               detail="degraded by the accidental two-qubit resonance "
                      "2*epsilon = w + epsilon_c of the default parameters")

    rows = []
    for d_c in detuning_sweep:
        swept = params.with_overrides(epsilon_c=params.w + d_c)
        rows.append((d_c, _max_curve_deviation(swept, basis, GROUND, times),
                     _max_curve_deviation(swept, basis, EXCITED, times)))
    devs = [r[1] for r in rows]
    monotone = all(devs[i] < devs[i + 1] for i in range(len(devs) - 1))
    report.add("deviation_monotonic_in_detuning", 1.0 if monotone else 0.0,
               1.0, 0.0, "derived", "ge",
               detail="knob-ground deviation grows as Delta_c shrinks "
                      f"{detuning_sweep} -> {[round(d, 4) for d in devs]}")

    if out_dir is not None:
        os.makedirs(out_dir, exist_ok=True)
        path = os.path.join(out_dir, "dispersive_validation.csv")
        with open(path, "w", encoding="utf-8") as fh:
            fh.write("delta_c,max_dev_knob_g,max_dev_knob_e\n")
            for row in rows:
                fh.write(",".join(format_float(x) for x in row) + "\n")
        report.csv_paths.append(path)
        report.write(out_dir)
    return report
