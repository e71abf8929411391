import numpy as np
import pytest

from jchdimer import SystemParams, build_basis
from jchdimer.experiments import (DRIVE_DEFAULTS, SPECTRUM_DEFAULTS,
                                  SWITCHING_DEFAULTS, run_dispersive_validation,
                                  run_iswap_gate, run_knob_switch,
                                  run_phase_rabi, run_spectrum)


@pytest.fixture(scope="session")
def switching_params():
    return SystemParams(**SWITCHING_DEFAULTS)


@pytest.fixture(scope="session")
def spectrum_params():
    return SystemParams(**SPECTRUM_DEFAULTS)


@pytest.fixture(scope="session")
def drive_params():
    return SystemParams(**SPECTRUM_DEFAULTS, **DRIVE_DEFAULTS)


@pytest.fixture(scope="session")
def full_basis():
    return build_basis(4)


# scenario runs are shared between the module tests and the acceptance suite
@pytest.fixture(scope="session")
def spectrum_run(tmp_path_factory):
    out = tmp_path_factory.mktemp("spectrum")
    return run_spectrum(out_dir=str(out)), out


@pytest.fixture(scope="session")
def knob_switch_run(tmp_path_factory):
    out = tmp_path_factory.mktemp("knob_switch")
    return run_knob_switch(out_dir=str(out)), out


@pytest.fixture(scope="session")
def phase_rabi_run(tmp_path_factory):
    out = tmp_path_factory.mktemp("phase_rabi")
    return run_phase_rabi(out_dir=str(out)), out


@pytest.fixture(scope="session")
def iswap_run(tmp_path_factory):
    out = tmp_path_factory.mktemp("iswap")
    return run_iswap_gate(out_dir=str(out)), out


@pytest.fixture(scope="session")
def dispersive_run(tmp_path_factory):
    out = tmp_path_factory.mktemp("dispersive")
    return run_dispersive_validation(out_dir=str(out)), out


def acceptance_line(cid: str, ok: bool, text: str):
    print(f"\nACCEPTANCE {cid}: {'PASS' if ok else 'FAIL'} — {text}")


@pytest.fixture()
def rng():
    return np.random.default_rng(20260808)
