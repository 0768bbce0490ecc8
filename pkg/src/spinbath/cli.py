"""Command-line front end: named scan presets to CSV, single-shot factor
and quantum-correlation series, heuristic-vs-exact comparison, and the
brute-force oracle verification run.

Parameter precedence (lowest to highest): built-in defaults, ``--config``
file (plain ``key = value`` lines, ``#`` comments), ``--preset``, explicit
flags.  CSV output uses 17 significant digits, ``.`` decimal separator and
LF newlines so identical inputs produce byte-identical files.

Exit codes: 0 success; 1 oracle verification failure; 2 usage or flag-value
error; 3 numeric error (error class name on stderr); 4 regime mismatch.

Environment: ``SPINBATH_KERNEL=numpy`` forces the pure-NumPy kernels;
``SPINBATH_THREADS=n`` sets the compiled-kernel thread count.  Neither
changes any reported value beyond 1e-12.
"""

from __future__ import annotations

import argparse
import math
import os
import sys
from pathlib import Path

import numpy as np

from . import _kernels
from .chain_spectrum import ChainParams, alpha_of_bitstring
from .decoherence import EnvPreparation, FactorRequest, decoherence_factor
from .errors import SpinbathError, WrongRegime
from .heuristics import HeuristicRegime, heuristic_series
from .oracle import mode_factor_bruteforce
from .qcorr import gtqd_closed_form, negativity_closed_form

__all__ = ["main", "PRESETS"]

ORACLE_TOL = 1e-10

_SQRT_HALF = 1.0 / math.sqrt(2.0)

# Canonical parameter names, their types, and per-subcommand defaults.
_PARAM_TYPES = {
    "N": int,
    "gamma": float,
    "lam": float,
    "D": float,
    "g": float,
    "prep": str,
    "k": int,
    "kprime": int,
    "R": int,
    "alpha_k": float,
    "alpha_kprime": float,
    "t_max": float,
    "t_steps": int,
    "D_min": float,
    "D_max": float,
    "D_steps": int,
    "a": float,
    "J": float,
    "Delta": float,
    "M": float,
    "B": float,
    "regime": str,
    "Kc": int,
    "draws": int,
    "seed": int,
    "perturb": float,
}

_DEFAULTS = {
    "factor": {
        "N": 400, "gamma": 0.5, "lam": 1.0, "D": 0.0, "g": 0.05,
        "prep": "ground", "k": 0, "kprime": 7, "R": 3,
        "alpha_k": None, "alpha_kprime": None,
        "t_max": 20.0, "t_steps": 201,
        "D_min": None, "D_max": None, "D_steps": None,
    },
    "qcorr": {
        "a": _SQRT_HALF, "N": 400, "gamma": 0.4, "lam": 1.0, "D": 0.5,
        "g": 0.05, "prep": "ground",
        "J": 1.0, "Delta": 0.5, "M": 0.5, "B": None,
        "t_max": 20.0, "t_steps": 201,
    },
    "heuristic-compare": {
        "regime": None, "N": 400, "gamma": 0.5, "lam": 1.05, "D": 0.0,
        "g": 0.05, "k": 0, "kprime": 7, "R": 3,
        "alpha_k": None, "alpha_kprime": None, "Kc": None,
        "t_max": 20.0, "t_steps": 201,
    },
    "oracle-verify": {"draws": 200, "seed": 42, "perturb": 0.0},
}

# Named parameter bundles for the standard scans.  Time axes and the
# central-system values (J=1, Delta=0.5, M=0.5, B=lam, a=1/sqrt(2)) are
# package conventions; any of them can be overridden by explicit flags.
# "multi" presets expand to one CSV per listed value (requires --out).
PRESETS: dict[str, dict] = {
    "fig1a": {"cmd": "factor", "params": {
        "N": 400, "g": 0.05, "gamma": 0.5, "lam": 1.0, "prep": "ground",
        "k": 0, "kprime": 7, "D_min": 0.0, "D_max": 2.0, "D_steps": 41,
        "t_max": 20.0, "t_steps": 201}},
    "fig1b": {"cmd": "factor", "params": {
        "N": 400, "g": 0.05, "gamma": 0.5, "lam": 1.0, "prep": "vacuum",
        "k": 0, "kprime": 7, "D_min": 0.0, "D_max": 2.0, "D_steps": 41,
        "t_max": 20.0, "t_steps": 201}},
    "fig2a": {"cmd": "factor", "params": {
        "D": 0.0, "g": 0.05, "gamma": 0.5, "lam": 1.0, "prep": "ground",
        "k": 0, "kprime": 7, "t_max": 20.0, "t_steps": 201},
        "multi": ("N", [100, 200, 400])},
    "fig2b": {"cmd": "factor", "params": {
        "D": 0.0, "g": 0.05, "gamma": 0.5, "lam": 1.0, "prep": "vacuum",
        "k": 0, "kprime": 7, "t_max": 20.0, "t_steps": 201},
        "multi": ("N", [100, 200, 400])},
    "fig3a": {"cmd": "factor", "params": {
        "D": 1.0, "N": 400, "g": 0.05, "gamma": 0.1, "prep": "ground",
        "k": 0, "kprime": 7, "t_max": 20.0, "t_steps": 201},
        "multi": ("lam", [1.0, 2.0, 6.0])},
    "fig3b": {"cmd": "factor", "params": {
        "D": 1.0, "N": 400, "g": 0.05, "gamma": 0.1, "prep": "vacuum",
        "k": 0, "kprime": 7, "t_max": 20.0, "t_steps": 201},
        "multi": ("lam", [1.0, 2.0, 6.0])},
    "fig4a": {"cmd": "factor", "params": {
        "N": 400, "g": 500.0, "gamma": 0.5, "lam": 1.1, "prep": "ground",
        "k": 0, "kprime": 7, "D_min": 0.0, "D_max": 2.0, "D_steps": 41,
        "t_max": 0.005, "t_steps": 501}},
    "fig4b": {"cmd": "factor", "params": {
        "N": 400, "g": 500.0, "gamma": 0.5, "lam": 1.1, "prep": "ground",
        "k": 0, "kprime": 1, "D_min": 0.0, "D_max": 2.0, "D_steps": 41,
        "t_max": 0.01, "t_steps": 1001}},
    "fig5": {"cmd": "factor", "params": {
        "D": 0.5, "N": 400, "lam": 1.0, "gamma": 0.5, "g": 500.0,
        "prep": "ground", "k": 0, "kprime": 1,
        "t_max": 0.01, "t_steps": 1001}},
    "fig6": {"cmd": "factor", "params": {
        "N": 400, "g": 500.0, "gamma": 0.5, "lam": 1.0, "prep": "vacuum",
        "k": 0, "kprime": 7, "D_min": 0.0, "D_max": 2.0, "D_steps": 41,
        "t_max": 5.0, "t_steps": 201}},
    "fig7a": {"cmd": "qcorr", "params": {
        "D": 0.5, "N": 400, "g": 0.05, "gamma": 0.4, "lam": 1.0,
        "prep": "ground", "t_max": 20.0, "t_steps": 201}},
    "fig7b": {"cmd": "qcorr", "params": {
        "D": 0.5, "N": 400, "g": 0.05, "gamma": 0.4, "lam": 1.0,
        "prep": "vacuum", "t_max": 20.0, "t_steps": 201}},
    "fig7c": {"cmd": "qcorr", "params": {
        "D": 0.5, "N": 400, "g": 0.05, "gamma": 0.4, "lam": 6.0,
        "prep": "ground", "t_max": 20.0, "t_steps": 201}},
    "fig7d": {"cmd": "qcorr", "params": {
        "D": 0.5, "N": 400, "g": 0.05, "gamma": 0.4, "lam": 6.0,
        "prep": "vacuum", "t_max": 20.0, "t_steps": 201}},
    "fig8a": {"cmd": "qcorr", "params": {
        "D": 0.5, "N": 400, "g": 0.05, "gamma": 0.4, "lam": 2.0,
        "prep": "ground", "t_max": 20.0, "t_steps": 201}},
    "fig8b": {"cmd": "qcorr", "params": {
        "D": 0.5, "N": 400, "g": 0.05, "gamma": 0.4, "lam": 2.0,
        "prep": "vacuum", "t_max": 20.0, "t_steps": 201}},
    "fig8c": {"cmd": "qcorr", "params": {
        "D": 0.5, "N": 400, "g": 0.05, "gamma": 0.4, "lam": 100.0,
        "prep": "ground", "t_max": 5.0, "t_steps": 201}},
    "fig8d": {"cmd": "qcorr", "params": {
        "D": 0.5, "N": 400, "g": 500.0, "gamma": 0.4, "lam": 1.0,
        "prep": "vacuum", "t_max": 5.0, "t_steps": 201}},
}


class _Usage(Exception):
    """Flag/value problem detected after argparse; mapped to exit code 2."""


def _fmt(x: float) -> str:
    return f"{x:.17g}"


def _parse_config(path: str) -> dict:
    """Read ``key = value`` lines; keys use flag spelling (- or _)."""
    values: dict = {}
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise _Usage(f"cannot read config file {path}: {exc}") from exc
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise _Usage(f"{path}:{lineno}: expected 'key = value', got {raw!r}")
        key, _, value = line.partition("=")
        key = key.strip().replace("-", "_")
        if key == "lambda":
            key = "lam"
        if key not in _PARAM_TYPES:
            raise _Usage(f"{path}:{lineno}: unknown key {key!r}")
        caster = _PARAM_TYPES[key]
        try:
            values[key] = caster(value.strip())
        except ValueError as exc:
            raise _Usage(f"{path}:{lineno}: bad value for {key}: {exc}") from exc
    return values


def _effective_params(args: argparse.Namespace, command: str) -> dict:
    """Merge defaults < config < preset < explicit flags; return the bundle
    plus the preset's multi-value expansion (or None)."""
    params = dict(_DEFAULTS[command])
    if getattr(args, "config", None):
        for key, value in _parse_config(args.config).items():
            if key not in params:
                raise _Usage(f"config key {key!r} not valid for '{command}'")
            params[key] = value
    multi = None
    if getattr(args, "preset", None):
        preset = PRESETS.get(args.preset)
        if preset is None:
            raise _Usage(f"unknown preset {args.preset!r}")
        if preset["cmd"] != command:
            raise _Usage(
                f"preset {args.preset!r} belongs to subcommand '{preset['cmd']}'")
        params.update(preset["params"])
        multi = preset.get("multi")
    for key in params:
        value = getattr(args, key, None)
        if value is not None:
            params[key] = value
            if multi is not None and key == multi[0]:
                multi = None  # explicit flag overrides the sweep
    params["_multi"] = multi
    return params


def _time_grid(params: dict) -> np.ndarray:
    t_max, t_steps = float(params["t_max"]), int(params["t_steps"])
    if t_steps < 1:
        raise _Usage("t-steps must be >= 1")
    if t_max < 0:
        raise _Usage("t-max must be >= 0")
    if t_max == 0 and t_steps != 1:
        raise _Usage("t-max 0 requires t-steps 1")
    return np.linspace(0.0, t_max, t_steps)


def _level_fields(params: dict) -> tuple[float, float]:
    """The two effective fields lambda_k, lambda_k' from the level
    bitstrings (uniform coupling g) or the explicit alpha overrides."""
    lam, g, R = float(params["lam"]), float(params["g"]), int(params["R"])
    couplings = [g] * R
    alpha_k = params.get("alpha_k")
    alpha_kp = params.get("alpha_kprime")
    try:
        a_k = float(alpha_k) if alpha_k is not None else alpha_of_bitstring(
            int(params["k"]), couplings)
        a_kp = float(alpha_kp) if alpha_kp is not None else alpha_of_bitstring(
            int(params["kprime"]), couplings)
    except IndexError as exc:
        raise _Usage(str(exc)) from exc
    return lam + a_k, lam + a_kp


def _factor_series(params: dict, D: float) -> np.ndarray:
    chain = ChainParams(N=int(params["N"]), gamma=float(params["gamma"]),
                        lam=float(params["lam"]), D=D)
    lam_k, lam_kp = _level_fields(params)
    req = FactorRequest(chain=chain, lambda_k=lam_k, lambda_kp=lam_kp,
                        prep=EnvPreparation.from_string(params["prep"]),
                        times=_time_grid(params))
    return decoherence_factor(req).magnitudes


def factor_rows(params: dict) -> tuple[str, list[str]]:
    """Header and CSV rows for one factor run (time series or t-D sweep)."""
    times = _time_grid(params)
    sweep = [params.get("D_min"), params.get("D_max"), params.get("D_steps")]
    if any(v is not None for v in sweep):
        if any(v is None for v in sweep):
            raise _Usage("--D-min/--D-max/--D-steps must be given together")
        d_min, d_max, d_steps = float(sweep[0]), float(sweep[1]), int(sweep[2])
        if d_steps < 1 or d_max < d_min:
            raise _Usage("bad D sweep bounds")
        rows = []
        for D in np.linspace(d_min, d_max, d_steps):
            mags = _factor_series(params, float(D))
            rows.extend(f"{_fmt(t)},{_fmt(D)},{_fmt(m)}"
                        for t, m in zip(times, mags))
        return "t,D,F", rows
    mags = _factor_series(params, float(params["D"]))
    return "t,F", [f"{_fmt(t)},{_fmt(m)}" for t, m in zip(times, mags)]


def qcorr_rows(params: dict) -> tuple[str, list[str]]:
    """Header and rows `t,F07,negativity,gtqd` for the GHZ/W mixture."""
    a = float(params["a"])
    if not 0.0 <= a <= 1.0:
        raise _Usage(f"a must lie in [0, 1], got {a}")
    times = _time_grid(params)
    chain = ChainParams(N=int(params["N"]), gamma=float(params["gamma"]),
                        lam=float(params["lam"]), D=float(params["D"]))
    lam, g = float(params["lam"]), float(params["g"])
    # Coherence between the all-up and all-down levels: field shifts +-3g.
    req = FactorRequest(chain=chain, lambda_k=lam + 3.0 * g,
                        lambda_kp=lam - 3.0 * g,
                        prep=EnvPreparation.from_string(params["prep"]),
                        times=times)
    f07 = decoherence_factor(req).magnitudes
    rows = []
    for t, f in zip(times, f07):
        f = min(float(f), 1.0)
        rows.append(",".join((_fmt(t), _fmt(f),
                              _fmt(negativity_closed_form(a, f)),
                              _fmt(gtqd_closed_form(a, f)))))
    return "t,F07,negativity,gtqd", rows


def heuristic_rows(params: dict) -> tuple[str, list[str]]:
    """Header and rows `t,F_exact,F_heuristic` for one regime."""
    if not params.get("regime"):
        raise _Usage("--regime is required")
    regime = HeuristicRegime.from_string(str(params["regime"]))
    times = _time_grid(params)
    chain = ChainParams(N=int(params["N"]), gamma=float(params["gamma"]),
                        lam=float(params["lam"]), D=float(params["D"]))
    lam_k, lam_kp = _level_fields(params)
    alpha_k, alpha_kp = lam_k - chain.lam, lam_kp - chain.lam
    Kc = params.get("Kc")
    Kc = chain.n_pair_modes if Kc is None else int(Kc)
    prep = (EnvPreparation.GROUND if regime.value.startswith("ground")
            else EnvPreparation.VACUUM)
    approx = heuristic_series(regime, alpha_k, alpha_kp, chain, Kc, times)
    req = FactorRequest(chain=chain, lambda_k=lam_k, lambda_kp=lam_kp,
                        prep=prep, times=times)
    exact = decoherence_factor(req).magnitudes
    rows = [f"{_fmt(t)},{_fmt(e)},{_fmt(h)}"
            for t, e, h in zip(times, exact, approx)]
    return "t,F_exact,F_heuristic", rows


def _write_csv(out: str | None, header: str, rows: list[str]) -> None:
    text = header + "\n" + "\n".join(rows) + "\n"
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", newline="\n") as fh:
            fh.write(text)


_PLOT_TEMPLATE = '''#!/usr/bin/env python3
"""Plot the CSV data emitted next to this script."""
import numpy as np
import matplotlib.pyplot as plt

FILES = {files!r}

fig, ax = plt.subplots()
for path in FILES:
    data = np.genfromtxt(path, delimiter=",", names=True)
    names = data.dtype.names
    if names == ("t", "D", "F"):
        t, d, f = data["t"], data["D"], data["F"]
        nt = len(np.unique(t))
        grid = f.reshape(-1, nt)
        pc = ax.pcolormesh(np.unique(t), np.unique(d), grid, shading="auto")
        fig.colorbar(pc, ax=ax, label="F")
        ax.set_ylabel("D")
    else:
        for col in names[1:]:
            ax.plot(data["t"], data[col], label=f"{{path}}: {{col}}")
        ax.legend(fontsize="small")
ax.set_xlabel("t")
fig.savefig({png!r}, dpi=150)
print("wrote", {png!r})
'''


def _emit_plot_script(out: str, csv_paths: list[str]) -> None:
    stem = Path(out).with_suffix("")
    script = Path(f"{stem}_plot.py")
    script.write_text(_PLOT_TEMPLATE.format(
        files=[str(p) for p in csv_paths], png=f"{stem}.png"))


def _run_csv_command(args: argparse.Namespace, command: str, builder) -> int:
    params = _effective_params(args, command)
    multi = params.pop("_multi")
    emit_plot = bool(getattr(args, "emit_plot_script", False))
    if emit_plot and not args.out:
        raise _Usage("--emit-plot-script requires --out")
    if multi is None:
        header, rows = builder(params)
        _write_csv(args.out, header, rows)
        written = [args.out] if args.out else []
    else:
        if not args.out:
            raise _Usage(
                f"preset {args.preset!r} writes several files; --out is required")
        key, values = multi
        base = Path(args.out)
        written = []
        for value in values:
            sub = dict(params)
            sub[key] = value
            header, rows = builder(sub)
            tag = f"{value:g}" if isinstance(value, float) else str(value)
            path = base.with_name(f"{base.stem}_{key}{tag}{base.suffix or '.csv'}")
            _write_csv(str(path), header, rows)
            written.append(str(path))
    if emit_plot:
        _emit_plot_script(args.out, written)
    return 0


def _oracle_deviation(rng: np.random.Generator, prep: EnvPreparation,
                      perturb: float) -> tuple[float, tuple]:
    """One random draw: |oracle modulus - product-formula modulus|."""
    from .decoherence import ground_mode_amplitude, vacuum_mode_magnitude

    N = int(rng.choice([8, 12, 16]))
    j = int(rng.integers(1, N // 2))
    chain = ChainParams(N=N, gamma=float(rng.uniform(0.0, 1.0)),
                        lam=float(rng.uniform(0.5, 2.0)),
                        D=float(rng.uniform(0.0, 1.0)))
    lam_k = float(rng.uniform(-2.0, 4.0))
    lam_kp = float(rng.uniform(-2.0, 4.0))
    t = float(rng.uniform(0.0, 5.0))
    brute = abs(mode_factor_bruteforce(j, lam_k, lam_kp, t, chain, prep,
                                       pairing_shift=perturb))
    if prep is EnvPreparation.GROUND:
        closed = abs(ground_mode_amplitude(j, lam_k, lam_kp, t, chain))
    else:
        closed = vacuum_mode_magnitude(j, lam_k, lam_kp, t, chain)
    tup = (N, j, chain.gamma, chain.lam, chain.D, lam_k, lam_kp, t)
    return abs(brute - closed), tup


def _run_oracle_verify(args: argparse.Namespace) -> int:
    params = _effective_params(args, "oracle-verify")
    params.pop("_multi")
    draws, seed = int(params["draws"]), int(params["seed"])
    perturb = float(params["perturb"])
    if draws < 0:
        raise _Usage("--draws must be >= 0")
    print(f"oracle-verify: draws={draws} seed={seed} perturb={_fmt(perturb)}")
    if draws == 0:
        print("0 draws requested; nothing to compare")
        print("PASS")
        return 0
    failed = False
    for prep in (EnvPreparation.GROUND, EnvPreparation.VACUUM):
        rng = np.random.default_rng(seed)
        worst, worst_tup = -1.0, None
        for _ in range(draws):
            dev, tup = _oracle_deviation(rng, prep, perturb)
            if dev > worst:
                worst, worst_tup = dev, tup
        name = prep.value
        print(f"  {name}: max |deviation| = {worst:.3e} (tolerance {ORACLE_TOL:g})")
        if worst > ORACLE_TOL:
            failed = True
            labels = ("N", "j", "gamma", "lambda", "D", "lambda_k",
                      "lambda_kprime", "t")
            detail = ", ".join(f"{k}={_fmt(v) if isinstance(v, float) else v}"
                               for k, v in zip(labels, worst_tup))
            print(f"  worst {name} draw: {detail}", file=sys.stderr)
    print("FAIL" if failed else "PASS")
    return 1 if failed else 0


def _add_common_output_flags(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--out", help="output CSV path (default: stdout)")
    sub.add_argument("--config", help="key = value parameter file")
    sub.add_argument("--preset", help="scan preset id (fig1a..fig8d)")
    sub.add_argument("--emit-plot-script", action="store_true",
                     help="write a matplotlib script next to --out")


def _add_chain_flags(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--N", type=int, help="chain length (even, >= 4)")
    sub.add_argument("--gamma", type=float, help="chain anisotropy")
    sub.add_argument("--lambda", dest="lam", type=float, help="transverse field")
    sub.add_argument("--D", type=float, help="DM interaction strength")
    sub.add_argument("--g", type=float, help="uniform system-chain coupling")


def _add_time_flags(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--t-max", type=float, help="last time sample")
    sub.add_argument("--t-steps", type=int, help="number of time samples")


def _add_level_flags(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--k", type=int, help="first central level bitstring")
    sub.add_argument("--kprime", type=int, help="second central level bitstring")
    sub.add_argument("--R", type=int, help="number of central spins (default 3)")
    sub.add_argument("--alpha-k", type=float, help="override the k field shift")
    sub.add_argument("--alpha-kprime", type=float,
                     help="override the k' field shift")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spinbath",
        description=__doc__,
        formatter_class=argparse.RawDescriptionHelpFormatter)
    subs = parser.add_subparsers(dest="command", required=True)

    factor = subs.add_parser(
        "factor", help="decoherence-factor time series (CSV t,F or t,D,F)")
    _add_chain_flags(factor)
    _add_level_flags(factor)
    factor.add_argument("--prep", choices=["ground", "vacuum"],
                        help="chain preparation")
    _add_time_flags(factor)
    factor.add_argument("--D-min", type=float, help="DM sweep start")
    factor.add_argument("--D-max", type=float, help="DM sweep end")
    factor.add_argument("--D-steps", type=int, help="DM sweep sample count")
    _add_common_output_flags(factor)

    qcorr = subs.add_parser(
        "qcorr", help="quantum-correlation series (CSV t,F07,negativity,gtqd)")
    qcorr.add_argument("--a", type=float, help="GHZ weight sqrt (a in [0,1])")
    _add_chain_flags(qcorr)
    qcorr.add_argument("--prep", choices=["ground", "vacuum"])
    qcorr.add_argument("--J", type=float, help="central exchange coupling")
    qcorr.add_argument("--Delta", type=float, help="central z-anisotropy")
    qcorr.add_argument("--M", type=float, help="central DM z-component")
    qcorr.add_argument("--B", type=float,
                       help="central field (default: the chain field)")
    _add_time_flags(qcorr)
    _add_common_output_flags(qcorr)

    heur = subs.add_parser(
        "heuristic-compare",
        help="exact vs closed-form approximation (CSV t,F_exact,F_heuristic)")
    heur.add_argument("--regime",
                      choices=[r.value for r in HeuristicRegime],
                      help="approximation regime")
    _add_chain_flags(heur)
    _add_level_flags(heur)
    heur.add_argument("--Kc", type=int, help="mode-sum cutoff (default N/2-1)")
    _add_time_flags(heur)
    _add_common_output_flags(heur)

    oracle = subs.add_parser(
        "oracle-verify", help="brute-force per-mode agreement run")
    oracle.add_argument("--draws", type=int, help="random draws per preparation")
    oracle.add_argument("--seed", type=int, help="RNG seed")
    oracle.add_argument("--perturb", type=float,
                        help="pairing-amplitude shift (negative-control hook)")
    oracle.add_argument("--config", help="key = value parameter file")
    return parser


def _apply_thread_env() -> None:
    value = os.environ.get("SPINBATH_THREADS")
    if not value or not _kernels.HAVE_NUMBA:
        return
    try:
        count = int(value)
    except ValueError:
        print(f"ignoring malformed SPINBATH_THREADS={value!r}", file=sys.stderr)
        return
    import numba

    try:
        numba.set_num_threads(count)
    except ValueError as exc:
        print(f"ignoring SPINBATH_THREADS={value!r}: {exc}", file=sys.stderr)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse handles --help (0) and usage (2)
        return int(exc.code) if exc.code is not None else 0
    _apply_thread_env()
    try:
        if args.command == "factor":
            return _run_csv_command(args, "factor", factor_rows)
        if args.command == "qcorr":
            return _run_csv_command(args, "qcorr", qcorr_rows)
        if args.command == "heuristic-compare":
            return _run_csv_command(args, "heuristic-compare", heuristic_rows)
        if args.command == "oracle-verify":
            return _run_oracle_verify(args)
        raise _Usage(f"unknown command {args.command!r}")
    except _Usage as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except WrongRegime as exc:
        print(f"WrongRegime: {exc}", file=sys.stderr)
        return 4
    except SpinbathError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 3
    except (ValueError, IndexError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
