"""Command-line front end: resolve configuration, dispatch scenario runners,
write CSV outputs and summaries.

No physics lives here. Configuration is flat ``key = value`` text (comments
with ``#``); command-line ``--set key=value`` flags override file values,
which override the scenario defaults. Exit status is 0 iff every
reference-tagged target of the executed scenarios passed.
"""

from __future__ import annotations

import argparse
import math
import os
import sys
from dataclasses import dataclass, field

from .experiments import (DRIVE_DEFAULTS, SPECTRUM_DEFAULTS, SWITCHING_DEFAULTS,
                          ScenarioReport, run_dispersive_validation,
                          run_iswap_gate, run_knob_switch, run_phase_rabi,
                          run_spectrum)
from .hamiltonian import SystemParams

PARAM_KEYS = ("epsilon", "epsilon_c", "w", "g", "g_c", "kappa0", "omega", "w_d", "n_max")
RUN_KEYS = ("t_end", "samples", "sample_step")
SCENARIOS = ("knob-switch", "spectrum", "phase-rabi", "iswap-gate", "validate-dispersive")

_SCENARIO_DEFAULTS = {
    "knob-switch": SWITCHING_DEFAULTS,
    "validate-dispersive": SWITCHING_DEFAULTS,
    "spectrum": SPECTRUM_DEFAULTS,
    "iswap-gate": SPECTRUM_DEFAULTS,
    "phase-rabi": {**SPECTRUM_DEFAULTS, **DRIVE_DEFAULTS},
}

_RUN_DEFAULTS = {"t_end": 100.0, "samples": 2001, "sample_step": 0.02}


class ConfigError(ValueError):
    pass


@dataclass
class RunConfig:
    """Fully resolved settings for one scenario run."""

    scenario: str
    out_dir: str
    params: SystemParams
    t_end: float = 100.0
    samples: int = 2001
    sample_step: float = 0.02
    sources: dict[str, str] = field(default_factory=dict)


def _parse_value(key: str, raw: str) -> float | int:
    try:
        value = float(raw)
    except ValueError:
        raise ConfigError(f"value for {key!r} is not numeric: {raw!r}") from None
    if not math.isfinite(value):
        raise ConfigError(f"value for {key!r} must be finite, got {raw!r}")
    if key in ("n_max", "samples"):
        if value != int(value):
            raise ConfigError(f"{key!r} must be an integer, got {raw!r}")
        return int(value)
    return value


def read_config_file(path: str) -> dict[str, str]:
    """Flat ``key = value`` lines; '#' starts a comment; blank lines ignored."""
    if not os.path.exists(path):
        raise ConfigError(f"config file not found: {path}")
    raw: dict[str, str] = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            text = line.split("#", 1)[0].strip()
            if not text:
                continue
            if "=" not in text:
                raise ConfigError(f"{path}:{lineno}: expected 'key = value', got {text!r}")
            key, value = (part.strip() for part in text.split("=", 1))
            raw[key] = value
    return raw


def parse_config(scenario: str, out_dir: str | None = None,
                 config_path: str | None = None,
                 set_flags: list[str] | None = None) -> RunConfig:
    """Merge scenario defaults, config file and --set flags (highest wins)."""
    if scenario not in SCENARIOS:
        raise ConfigError(f"unknown scenario {scenario!r}; choose from {SCENARIOS}")
    merged: dict[str, float | int] = dict(_SCENARIO_DEFAULTS[scenario])
    run_values: dict[str, float | int] = dict(_RUN_DEFAULTS)
    sources = {k: "default" for k in list(merged) + list(run_values)}

    def apply(key: str, raw: str, source: str):
        if key not in PARAM_KEYS and key not in RUN_KEYS:
            raise ConfigError(
                f"unknown key {key!r} (allowed: {', '.join(PARAM_KEYS + RUN_KEYS)})")
        value = _parse_value(key, raw)
        if key in RUN_KEYS:
            run_values[key] = value
        else:
            merged[key] = value
        sources[key] = source

    if config_path is not None:
        for key, raw in read_config_file(config_path).items():
            apply(key, raw, f"file:{config_path}")
    for flag in set_flags or []:
        if "=" not in flag:
            raise ConfigError(f"--set expects key=value, got {flag!r}")
        key, raw = (part.strip() for part in flag.split("=", 1))
        apply(key, raw, "flag")

    try:
        params = SystemParams(**merged)
    except (TypeError, ValueError) as exc:
        raise ConfigError(f"invalid parameters: {exc}") from exc
    return RunConfig(
        scenario=scenario,
        out_dir=out_dir or os.path.join("out", scenario),
        params=params,
        t_end=float(run_values["t_end"]),
        samples=int(run_values["samples"]),
        sample_step=float(run_values["sample_step"]),
        sources=sources,
    )


def run_scenario(config: RunConfig) -> ScenarioReport:
    if config.scenario == "knob-switch":
        report, _ = run_knob_switch(config.params, config.out_dir,
                                    t_end=config.t_end, samples=config.samples)
    elif config.scenario == "spectrum":
        report, _ = run_spectrum(config.params, config.out_dir)
    elif config.scenario == "phase-rabi":
        report, _ = run_phase_rabi(config.params, config.out_dir,
                                   sample_step=config.sample_step)
    elif config.scenario == "iswap-gate":
        report, _ = run_iswap_gate(config.params, config.out_dir)
    elif config.scenario == "validate-dispersive":
        report = run_dispersive_validation(config.params, config.out_dir,
                                           t_end=config.t_end, samples=config.samples)
    else:
        raise ConfigError(f"unknown scenario {config.scenario!r}")
    _append_run_settings(config)
    return report


def _append_run_settings(config: RunConfig) -> None:
    path = os.path.join(config.out_dir, "resolved_params.txt")
    with open(path, "a", encoding="utf-8") as fh:
        fh.write(f"t_end = {config.t_end}\n")
        fh.write(f"samples = {config.samples}\n")
        fh.write(f"sample_step = {config.sample_step}\n")


def _print_report(report: ScenarioReport) -> None:
    print(f"[{report.scenario}]")
    for t in report.targets:
        status = "pass" if t.passed else "FAIL"
        print(f"  {status:4s}  {t.name} = {t.value:.6g} "
              f"(target {t.comparison} {t.target:.6g}"
              f"{f' +/- {t.tolerance:g}' if t.comparison == 'abs' else ''}, {t.kind})")
    for note in report.notes:
        print(f"  note: {note}")


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(
        prog="jchdimer",
        description="Two-site Jaynes-Cummings-Hubbard simulator with a "
                    "knob-qubit-controlled photon hopping rate.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in SCENARIOS + ("all",):
        p = sub.add_parser(name, help=f"run the {name} scenario"
                           if name != "all" else "run every scenario")
        p.add_argument("--config", help="flat key = value config file")
        p.add_argument("--out", help="output directory")
        p.add_argument("--set", action="append", default=[], metavar="KEY=VALUE",
                       help="override a parameter (repeatable)")

    args = parser.parse_args(argv)
    scenarios = list(SCENARIOS) if args.command == "all" else [args.command]
    all_reference_pass = True
    try:
        for scenario in scenarios:
            out_dir = args.out
            if args.command == "all":
                out_dir = os.path.join(args.out or "out", scenario)
            config = parse_config(scenario, out_dir, args.config, args.set)
            report = run_scenario(config)
            _print_report(report)
            all_reference_pass &= report.reference_targets_pass
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, RuntimeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0 if all_reference_pass else 1


if __name__ == "__main__":
    sys.exit(main())
