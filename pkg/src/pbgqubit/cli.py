"""Command-line harness: parameter sweeps, oracle cross-checks, CSV export.

Five run modes, all writing plot-ready CSV (UTF-8, header row, 12
significant digits, LF endings, byte-identical across runs):

* ``single``      population and entropy trace of one qubit
* ``two``         concurrence trace of one initial state
* ``sweep-alpha`` concurrence traces across a grid of weights alpha^2
* ``sweep-delta`` concurrence traces (or steady values) across detunings
* ``oracle-check`` max deviation of the closed form from each numerical oracle

Settings resolve in order: built-in defaults, then ``--preset``, then
``--config`` file (flat ``key=value`` lines, ``#`` comments), then explicit
flags.  ``--dump-config`` prints the fully resolved settings in the same
``key=value`` form, so its output is itself a valid config file.

Exit status: 0 on success, 2 for configuration problems, 3 when a numeric
operation fails (the message names the operation).
"""

from __future__ import annotations

import argparse
import math
import sys
from dataclasses import dataclass

import numpy as np

from .fractional import ReservoirParams, amplitude_U, steady_probability
from .oracles import GridSpec, invert_laplace, solve_fractional_kinetic
from .single_qubit import BlochInit, entropy_trace
from .two_qubit import (
    TwoQubitInit,
    concurrence_phi,
    concurrence_psi,
    steady_concurrence,
)

__all__ = ["PRESETS", "RunConfig", "entry", "figure_manifest", "main"]

_MODES = ("single", "two", "sweep-alpha", "sweep-delta", "oracle-check")
_ORACLES = ("kinetic", "laplace", "both")
_SWEEP_DELTAS = (-10.0, -5.0, -2.0, -1.0, -0.5, 0.0, 1.0, 2.0)
_ORACLE_DELTAS = (-5.0, -1.0, 0.0, 1.0, 2.0)
_CERT_BAND_START = 0.1  # oracles are certified for beta*t >= 0.1

PRESETS = {
    "fig2a": {"mode": "single", "delta_over_beta": -5.0, "theta0": 0.0, "phi0": 0.0},
    "fig2b": {"mode": "single", "delta_over_beta": 2.0, "theta0": 0.0, "phi0": 0.0},
    "fig3a": {"mode": "sweep-alpha", "family": "phi", "delta_over_beta": -5.0},
    "fig3b": {"mode": "sweep-alpha", "family": "phi", "delta_over_beta": 2.0},
    "fig3c": {"mode": "sweep-alpha", "family": "psi", "delta_over_beta": -5.0},
    "fig3d": {"mode": "sweep-alpha", "family": "psi", "delta_over_beta": 2.0},
    "fig4a": {"mode": "sweep-delta", "family": "phi", "alpha2": 0.5},
    "fig4b": {"mode": "sweep-delta", "family": "psi", "alpha2": 0.5},
    "fig4c": {"mode": "sweep-delta", "steady": True, "alpha2": 0.5},
}


@dataclass(frozen=True)
class RunConfig:
    """Fully resolved run settings (seedless, deterministic)."""

    mode: str
    params: ReservoirParams
    grid: GridSpec
    bloch: BlochInit
    family: str
    alpha2: float
    alpha2_step: float
    deltas: tuple
    oracle: str
    steady: bool
    out: str | None


def _fmt(value: float) -> str:
    return f"{value:.12g}"


def _serialize(key: str, value) -> str:
    if key == "steady":
        return "true" if value else "false"
    if key == "deltas":
        return ",".join(f"{d:g}" for d in value)
    if key == "steps":
        return str(value)
    if isinstance(value, float):
        return f"{value:g}"
    return str(value)


_KEY_PARSERS = {
    "mode": str,
    "delta_over_beta": float,
    "f": float,
    "theta0": float,
    "phi0": float,
    "family": str,
    "alpha2": float,
    "tmax": float,
    "steps": int,
    "oracle": str,
    "steady": lambda s: {"true": True, "false": False}[s.lower()],
    "deltas": lambda s: tuple(float(p) for p in s.split(",") if p.strip()),
    "alpha2_step": float,
    "out": str,
}

_DUMP_ORDER = (
    "mode",
    "delta_over_beta",
    "f",
    "theta0",
    "phi0",
    "family",
    "alpha2",
    "alpha2_step",
    "deltas",
    "tmax",
    "steps",
    "oracle",
    "steady",
)


def _parse_config_file(path: str) -> dict:
    settings = {}
    try:
        with open(path, "r", encoding="utf-8") as fh:
            lines = fh.readlines()
    except OSError as exc:
        raise ValueError(f"config file: {exc}")
    for lineno, raw in enumerate(lines, start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ValueError(f"config file line {lineno}: expected key=value")
        key, _, value = line.partition("=")
        key, value = key.strip(), value.strip()
        if key not in _KEY_PARSERS:
            raise ValueError(f"config file line {lineno}: unknown key {key!r}")
        try:
            settings[key] = _KEY_PARSERS[key](value)
        except (ValueError, KeyError):
            raise ValueError(f"config file line {lineno}: bad value for {key!r}")
    return settings


def figure_manifest() -> str:
    """The figure presets, printed in config-file form, one block per id."""
    blocks = []
    for fig_id in sorted(PRESETS):
        settings = _resolve_settings(PRESETS[fig_id])
        lines = [f"# {fig_id}"]
        lines += [f"{k}={_serialize(k, settings[k])}" for k in _DUMP_ORDER]
        blocks.append("\n".join(lines))
    return "\n\n".join(blocks) + "\n"


def _resolve_settings(overrides: dict) -> dict:
    """Defaults plus overrides, with mode-dependent grid defaults filled in."""
    settings = {
        "mode": "single",
        "delta_over_beta": -5.0,
        "f": 1.0,
        "theta0": 0.0,
        "phi0": 0.0,
        "family": "phi",
        "alpha2": 0.5,
        "alpha2_step": 0.05,
        "oracle": "both",
        "steady": False,
        "out": None,
        "tmax": None,
        "steps": None,
        "deltas": None,
    }
    settings.update(overrides)
    mode = settings["mode"]
    if mode not in _MODES:
        raise ValueError(f"config: mode must be one of {_MODES}")
    if settings["tmax"] is None:
        settings["tmax"] = 10.0 if mode == "oracle-check" else 30.0
    if settings["steps"] is None:
        settings["steps"] = 4000 if mode == "oracle-check" else 600
    if settings["deltas"] is None:
        settings["deltas"] = (
            _ORACLE_DELTAS if mode == "oracle-check" else _SWEEP_DELTAS
        )
    return settings


def _build_config(settings: dict) -> RunConfig:
    if settings["family"] not in ("phi", "psi"):
        raise ValueError("config: family must be phi or psi")
    if settings["oracle"] not in _ORACLES:
        raise ValueError(f"config: oracle must be one of {_ORACLES}")
    if not 0.0 <= settings["alpha2"] <= 1.0:
        raise ValueError("config: alpha2 must lie in [0, 1]")
    if not 0.0 < settings["alpha2_step"] <= 1.0:
        raise ValueError("config: alpha2_step must lie in (0, 1]")
    if settings["tmax"] > 100.0:
        raise ValueError("config: tmax beyond the validated horizon 100")
    if not settings["deltas"]:
        raise ValueError("config: deltas must be a nonempty list")
    params = ReservoirParams(settings["delta_over_beta"], settings["f"])
    grid = GridSpec(settings["tmax"], settings["steps"])
    bloch = BlochInit(settings["theta0"], settings["phi0"])
    return RunConfig(
        mode=settings["mode"],
        params=params,
        grid=grid,
        bloch=bloch,
        family=settings["family"],
        alpha2=settings["alpha2"],
        alpha2_step=settings["alpha2_step"],
        deltas=tuple(settings["deltas"]),
        oracle=settings["oracle"],
        steady=bool(settings["steady"]),
        out=settings["out"],
    )


def _alpha2_grid(step: float):
    count = int(round(1.0 / step))
    return [round(i * step, 10) for i in range(count + 1)]


def _pair_init(family: str, alpha2: float) -> TwoQubitInit:
    return TwoQubitInit(family, math.sqrt(alpha2))


def _pair_concurrence(init: TwoQubitInit, m):
    if init.family == "phi":
        return concurrence_phi(init, m)
    return concurrence_psi(init, m)


def _render_single(cfg: RunConfig) -> str:
    times, pop, ent = entropy_trace(cfg.params, cfg.bloch, cfg.grid)
    lines = ["beta_t,P,S"]
    for t, p, s in zip(times, pop, ent):
        lines.append(f"{_fmt(t)},{_fmt(p)},{_fmt(s)}")
    return "\n".join(lines) + "\n"


def _render_two(cfg: RunConfig) -> str:
    init = _pair_init(cfg.family, cfg.alpha2)
    m = np.abs(amplitude_U(cfg.params, cfg.grid.times)) ** 2
    values = _pair_concurrence(init, m)
    lines = ["beta_t,concurrence"]
    for t, c in zip(cfg.grid.times, values):
        lines.append(f"{_fmt(t)},{_fmt(c)}")
    return "\n".join(lines) + "\n"


def _render_sweep_alpha(cfg: RunConfig) -> str:
    grid_a2 = _alpha2_grid(cfg.alpha2_step)
    m = np.abs(amplitude_U(cfg.params, cfg.grid.times)) ** 2
    columns = [
        _pair_concurrence(_pair_init(cfg.family, a2), m) for a2 in grid_a2
    ]
    lines = ["beta_t," + ",".join(f"C_{a2:g}" for a2 in grid_a2)]
    for i, t in enumerate(cfg.grid.times):
        cells = ",".join(_fmt(col[i]) for col in columns)
        lines.append(f"{_fmt(t)},{cells}")
    return "\n".join(lines) + "\n"


def _render_sweep_delta(cfg: RunConfig) -> str:
    if cfg.steady:
        phi_init = _pair_init("phi", cfg.alpha2)
        psi_init = _pair_init("psi", cfg.alpha2)
        lines = [
            "delta_over_beta,steady_probability,"
            "steady_concurrence_phi,steady_concurrence_psi"
        ]
        for delta in cfg.deltas:
            params = ReservoirParams(delta, cfg.params.f)
            p_inf = steady_probability(params)
            c_phi = steady_concurrence(params, phi_init)
            c_psi = steady_concurrence(params, psi_init)
            lines.append(
                f"{_fmt(delta)},{_fmt(p_inf)},{_fmt(c_phi)},{_fmt(c_psi)}"
            )
        return "\n".join(lines) + "\n"

    init = _pair_init(cfg.family, cfg.alpha2)
    columns = []
    for delta in cfg.deltas:
        params = ReservoirParams(delta, cfg.params.f)
        m = np.abs(amplitude_U(params, cfg.grid.times)) ** 2
        columns.append(_pair_concurrence(init, m))
    lines = ["beta_t," + ",".join(f"C_{d:g}" for d in cfg.deltas)]
    for i, t in enumerate(cfg.grid.times):
        cells = ",".join(_fmt(col[i]) for col in columns)
        lines.append(f"{_fmt(t)},{cells}")
    return "\n".join(lines) + "\n"


def _render_oracle_check(cfg: RunConfig) -> str:
    times = cfg.grid.times
    band = times >= _CERT_BAND_START
    stride = max(1, cfg.grid.n_steps // 100)
    sparse = [i for i in range(0, times.size, stride) if band[i]]
    header = ["delta_over_beta"]
    if cfg.oracle in ("kinetic", "both"):
        header.append("max_dev_kinetic")
    if cfg.oracle in ("laplace", "both"):
        header.append("max_dev_laplace")
    lines = [",".join(header)]
    for delta in cfg.deltas:
        params = ReservoirParams(delta, cfg.params.f)
        exact = amplitude_U(params, times)
        cells = [_fmt(delta)]
        if cfg.oracle in ("kinetic", "both"):
            marched = solve_fractional_kinetic(params, cfg.grid)
            cells.append(_fmt(float(np.max(np.abs(marched[band] - exact[band])))))
        if cfg.oracle in ("laplace", "both"):
            dev = max(
                abs(invert_laplace(params, float(times[i])) - exact[i])
                for i in sparse
            )
            cells.append(_fmt(float(dev)))
        lines.append(",".join(cells))
    return "\n".join(lines) + "\n"


_RENDERERS = {
    "single": _render_single,
    "two": _render_two,
    "sweep-alpha": _render_sweep_alpha,
    "sweep-delta": _render_sweep_delta,
    "oracle-check": _render_oracle_check,
}


def run(cfg: RunConfig) -> int:
    """Execute a resolved configuration and write its CSV."""
    text = _RENDERERS[cfg.mode](cfg)
    if cfg.out is None:
        sys.stdout.write(text)
    else:
        with open(cfg.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pbgqubit",
        description="Band-edge qubit dynamics: traces, sweeps and oracle checks.",
    )
    parser.add_argument("--mode", choices=_MODES, help="what to compute")
    parser.add_argument(
        "--delta-over-beta", type=float, help="detuning from the band edge, in units of beta"
    )
    parser.add_argument("--f", type=float, help="anisotropy factor of the band curvature")
    parser.add_argument("--theta0", type=float, help="initial Bloch polar angle, radians")
    parser.add_argument("--phi0", type=float, help="initial Bloch azimuth, radians")
    parser.add_argument("--family", choices=("phi", "psi"), help="two-qubit state family")
    parser.add_argument("--alpha2", type=float, help="weight alpha^2 of the first branch")
    parser.add_argument("--tmax", type=float, help="trace horizon in beta*t")
    parser.add_argument("--steps", type=int, help="number of grid intervals")
    parser.add_argument("--preset", choices=sorted(PRESETS), help="figure preset id")
    parser.add_argument("--oracle", choices=_ORACLES, help="which oracle(s) to check against")
    parser.add_argument("--out", help="output CSV path (default: stdout)")
    parser.add_argument("--config", help="flat key=value config file")
    parser.add_argument(
        "--dump-config",
        action="store_true",
        help="print the resolved settings as a config file and exit",
    )
    parser.add_argument(
        "--list-presets",
        action="store_true",
        help="print every figure preset in config-file form and exit",
    )
    return parser


_FLAG_KEYS = (
    ("delta_over_beta", "delta_over_beta"),
    ("f", "f"),
    ("theta0", "theta0"),
    ("phi0", "phi0"),
    ("family", "family"),
    ("alpha2", "alpha2"),
    ("tmax", "tmax"),
    ("steps", "steps"),
    ("oracle", "oracle"),
    ("out", "out"),
)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.list_presets:
            sys.stdout.write(figure_manifest())
            return 0
        overrides = {}
        if args.preset:
            overrides.update(PRESETS[args.preset])
        if args.config:
            overrides.update(_parse_config_file(args.config))
        if args.mode is not None:
            overrides["mode"] = args.mode
        for attr, key in _FLAG_KEYS:
            value = getattr(args, attr)
            if value is not None:
                overrides[key] = value
        settings = _resolve_settings(overrides)
        cfg = _build_config(settings)
        if args.dump_config:
            lines = [f"{k}={_serialize(k, settings[k])}" for k in _DUMP_ORDER]
            if settings["out"] is not None:
                lines.append(f"out={settings['out']}")
            sys.stdout.write("\n".join(lines) + "\n")
            return 0
        return run(cfg)
    except ValueError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2
    except (RuntimeError, OverflowError) as exc:
        print(f"numeric failure: {exc}", file=sys.stderr)
        return 3


def entry():
    sys.exit(main())


if __name__ == "__main__":
    entry()
