"""Batch experiment runner.

Subcommands: simulate, conserve, semiclassical, estimates, counterexample.
Each reads a flat key=value config (INI sections, no nesting), validates it
fully before any output is allocated, and writes CSV files into --out.
Identical config and seed produce byte-identical outputs. Exit codes:
0 ok, 1 runtime failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import configparser
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

import numpy as np

from . import diagnostics, estimates, fields, tables
from .bourgain import TorusGrid
from .errors import BlowUpDetected, ContractionFailure, HypothesisViolation
from .propagators import PropagatorParams
from .solver import SolverConfig, discontinuity_demo, semiclassical_experiment, solve

__all__ = ["main"]


class UsageError(Exception):
    pass


def _parallel_map(fn, items, threads):
    if threads <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, items))


def _load_section(path, name):
    parser = configparser.ConfigParser()
    read = parser.read(path)
    if not read:
        raise UsageError(f"config file not found: {path}")
    if name not in parser:
        raise UsageError(f"config is missing the [{name}] section")
    return parser[name]


def _get(section, key, cast, default=None, required=False):
    if key not in section:
        if required:
            raise UsageError(f"missing config key '{key}'")
        return default
    raw = section[key]
    try:
        if cast is bool:
            return raw.strip().lower() in ("1", "true", "yes", "on")
        return cast(raw)
    except ValueError as exc:
        raise UsageError(f"bad value for '{key}': {raw!r}") from exc


def _float_list(raw):
    return [float(tok) for tok in raw.replace(";", ",").split(",") if tok.strip()]


def _int_list(raw):
    return [int(tok) for tok in raw.replace(";", ",").split(",") if tok.strip()]


def _resolve_threads(args):
    env = os.environ.get("QZS_LAB_THREADS")
    if env is not None:
        try:
            return max(1, int(env))
        except ValueError as exc:
            raise UsageError(f"bad QZS_LAB_THREADS value {env!r}") from exc
    return max(1, args.threads)


def _params_from(section, default_eps=0.0):
    return PropagatorParams(
        alpha=_get(section, "alpha", float, 1.0),
        beta=_get(section, "beta", float, 1.0),
        eps=_get(section, "eps", float, default_eps),
    )


def _build_data(section, grid, seed):
    kind = _get(section, "data", str, "plane_wave")
    if kind == "plane_wave":
        n_mode = _get(section, "N", int, required=True)
        amp = _get(section, "amplitude", float, 1.0)
        return (
            fields.plane_wave(grid, n_mode, amp),
            fields.zero_field(grid),
            fields.zero_field(grid),
        )
    if kind == "random":
        rng = np.random.default_rng(seed)
        kmax = _get(section, "kmax", int, 3)
        amp = _get(section, "amplitude", float, 1.0)
        data = fields.random_data(grid, rng, kmax=kmax)
        return fields.normalize_data(data, 2.0, 1.0, target=amp)
    raise UsageError(f"unknown data kind {kind!r}")


# ---------------------------------------------------------------------------


def run_simulate(args, write_conserved_only=False):
    section = _load_section(args.config, "conserve" if write_conserved_only else "simulate")
    grid_size = _get(section, "grid", int, required=True)
    if grid_size is None or grid_size < 8 or grid_size % 2:
        raise UsageError("grid must be an even integer >= 8")
    dt = _get(section, "dt", float, 1e-3)
    t_final = _get(section, "T", float, 1.0)
    s_exp = _get(section, "s", float, 2.0)
    l_exp = _get(section, "l", float, 1.0)
    seed = args.seed if args.seed is not None else _get(section, "seed", int, 0)
    params = _params_from(section, default_eps=0.5)
    config = SolverConfig(
        dt=dt,
        scheme=_get(section, "scheme", str, "strang"),
        dealias=_get(section, "dealias", bool, True),
    )
    grid = TorusGrid(grid_size)
    data = _build_data(section, grid, seed)

    in_l, in_g = estimates.region_membership(s_exp, l_exp)
    if not in_l:
        print(f"warning: (s,l)=({s_exp:g},{l_exp:g}) outside Omega_L", file=sys.stderr)

    trajectory = solve(data, params, t_final, config)
    times, quantities = diagnostics.conserved_series(
        [st for st in trajectory], params
    )
    mass0 = quantities[0].mass
    energy0 = quantities[0].energy
    mass_drift = max(abs(q.mass - mass0) for q in quantities) / max(abs(mass0), 1e-300)
    energy_drift = max(abs(q.energy - energy0) for q in quantities) / max(abs(energy0), 1e-300)

    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    if not write_conserved_only:
        tables.write_trajectory_csv(out / "trajectory.csv", trajectory)
    tables.write_conserved_csv(out / "conserved.csv", times, quantities)
    print(
        f"simulate: T={trajectory[-1].time:g} mass_drift={mass_drift:.3e} "
        f"energy_drift={energy_drift:.3e} omega_L={in_l} omega_G={in_g}"
    )
    return 0


def run_semiclassical(args):
    section = _load_section(args.config, "semiclassical")
    if _get(section, "discontinuity", bool, False):
        n_mode = _get(section, "disc_N", int, 8)
        eps = _get(section, "disc_eps", float, 0.1)
        eps0 = _get(section, "disc_eps0", float, 0.0)
        s_exp = _get(section, "s", float, 4.0)
        gap = abs(eps**2 - eps0**2) * n_mode**4
        if gap == 0:
            raise UsageError("discontinuity mode needs eps != eps0")
        period = 2.0 * np.pi / gap
        t_grid = np.linspace(0.0, period, 4001)
        result = discontinuity_demo(n_mode, eps, eps0, s_exp, t_grid)
        print(f"discontinuity sup = {result.value:.6f} (period {result.period:.6g})")
        return 0

    grid_size = _get(section, "grid", int, required=True)
    eps_raw = _get(section, "eps_list", str, required=True)
    eps_list = _float_list(eps_raw)
    if len([e for e in eps_list if e > 0]) < 3:
        raise UsageError("eps_list needs at least 3 positive entries")
    if sorted(eps_list, reverse=True) != eps_list:
        raise UsageError("eps_list must be sorted decreasing")
    s_exp = _get(section, "s", float, 4.0)
    if s_exp < 4:
        raise UsageError("semiclassical experiment needs s >= 4")
    t_final = _get(section, "T", float, 1.0)
    dt = _get(section, "dt", float, 1e-3)
    kmax = _get(section, "kmax", int, 2)
    amp = _get(section, "amplitude", float, 0.5)
    seed = args.seed if args.seed is not None else _get(section, "seed", int, 0)
    params = _params_from(section)
    grid = TorusGrid(grid_size)

    rng = np.random.default_rng(seed)
    base = fields.normalize_data(
        fields.random_data(grid, rng, kmax=kmax), s_exp, s_exp - 1.0, target=amp
    )

    table = semiclassical_experiment(
        lambda eps: base, eps_list, params, t_final, s_exp, SolverConfig(dt=dt)
    )

    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    rows = [
        [eps, err, bound]
        for eps, err, bound in zip(table.eps_values, table.errors, table.h10_bounds)
    ]
    rows.append(["fitted_rate", table.fitted_rate, ""])
    tables.write_rows(out / "semiclassical.csv", ["eps", "sup_error", "h10_bound"], rows)
    print(
        "semiclassical: errors "
        + " ".join(f"{e:.3e}" for e in table.errors)
        + f" fitted_rate={table.fitted_rate:.3f}"
    )
    return 0


def run_estimates(args):
    section = _load_section(args.config, "estimates")
    e1 = _get(section, "e1", float, 0.3)
    e2 = _get(section, "e2", float, 0.4)
    if e1 <= 0.25:
        raise UsageError("e1 must exceed 1/4")
    if e2 <= 1.0 / 3.0:
        raise UsageError("e2 must exceed 1/3")
    point = estimates.ExponentPoint(
        s=_get(section, "s", float, 0.0),
        l=_get(section, "l", float, 0.0),
        b=_get(section, "b", float, 0.49),
        rho=_get(section, "rho", float, 0.5),
    )
    params = _params_from(section, default_eps=1.0)
    if params.eps <= 0:
        raise UsageError("estimates need eps > 0")
    k_max = _get(section, "K_max", int, 2048)
    if k_max < 1024:
        raise UsageError("K_max must be at least 1024")
    k_scan = _get(section, "K_scan", int, 48)
    n_samples = _get(section, "sample_points", int, 200)
    n_draws = _get(section, "draws", int, 200)
    grid_size = _get(section, "grid", int, 32)
    tau_max = _get(section, "tau_max", float, 48.0)
    tau_count = _get(section, "tau_count", int, 129)
    if tau_count % 2 == 0:
        raise UsageError("tau_count must be odd")
    n_list = _int_list(_get(section, "N_list", str, "8,16,32,64,128"))
    if len(n_list) < 4:
        raise UsageError("N_list needs at least 4 entries")
    pair_raw = _get(section, "pairs", str, "1,3")
    pairs = _int_list(pair_raw)
    seed = args.seed if args.seed is not None else _get(section, "seed", int, 0)
    threads = _resolve_threads(args)

    rng = np.random.default_rng(seed)

    # sigma sample: deterministic given the seed
    sample_k = rng.integers(-24, 25, size=n_samples)
    sample_tau = rng.uniform(-4000.0, 4000.0, size=n_samples)
    sigma_rows = []

    def sigma_row(i):
        k = int(sample_k[i])
        tau = float(sample_tau[i])
        s1 = estimates.sigma1(k, tau, e1, k_max, params)
        s2 = estimates.sigma2(k if k != 0 else 1, tau, e2, k_max, params)
        return [k, tau, s1, s2]

    sigma_rows = _parallel_map(sigma_row, list(range(n_samples)), threads)
    sup1 = max(r[2] for r in sigma_rows)
    sup2 = max(r[3] for r in sigma_rows)

    lemma = estimates.h_lower_bound_scan(params, k_scan)

    grid = TorusGrid(grid_size)
    taus = np.linspace(-tau_max, tau_max, tau_count)
    draw_rows = []
    for i in range(n_draws):
        adversarial = i % 25 == 24
        u, n = estimates.draw_corpus_pair(rng, grid, taus, params, adversarial=adversarial)
        rs = estimates.bilinear_ratio_schrodinger(u, n, point, params)
        rw = estimates.bilinear_ratio_wave(u, n, point, params)
        draw_rows.append([i, int(adversarial), rs.ratio, rw.ratio])
    max_s = max(r[2] for r in draw_rows)
    max_w = max(r[3] for r in draw_rows)

    reports = [
        estimates.necessity_scan(p, point, point.rho, params, n_list) for p in pairs
    ]

    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    tables.write_rows(
        out / "sigma_bounds.csv",
        ["k", "tau", "sigma1", "sigma2"],
        sigma_rows + [["sup", "", sup1, sup2]],
    )
    tables.write_rows(
        out / "lemma_infima.csv",
        ["C_threshold", "C1", "c_measured", "c4_measured", "c4_min_k"],
        [[lemma.C_threshold, lemma.C1, lemma.c_measured, lemma.c4_measured, lemma.c4_min_k]],
    )
    tables.write_rows(
        out / "bilinear.csv",
        ["draw", "adversarial", "ratio_schrodinger", "ratio_wave"],
        draw_rows + [["max", "", max_s, max_w]],
    )
    necessity_rows = []
    for p, rep in zip(pairs, reports):
        for n_val, ratio in zip(rep.N_values, rep.ratios):
            necessity_rows.append([p, n_val, ratio, rep.fitted_exponent])
    tables.write_rows(
        out / "necessity.csv", ["pair", "N", "ratio", "fitted_exponent"], necessity_rows
    )
    print(
        f"estimates: sigma1_sup={sup1:.6g} sigma2_sup={sup2:.6g} "
        f"c={lemma.c_measured:.6g} c4={lemma.c4_measured:.6g} "
        f"bilinear_max=({max_s:.6g},{max_w:.6g}) "
        f"exponents={[round(r.fitted_exponent, 4) for r in reports]}"
    )
    return 0


def run_counterexample(args):
    section = _load_section(args.config, "counterexample")
    index = _get(section, "index", int, required=True)
    which = _get(section, "which", str, required=True)
    n_mode = _get(section, "N", int, required=True)
    params = _params_from(section, default_eps=0.5)
    try:
        field = estimates.counterexample_family(index, which, n_mode, params)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc

    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    rows = []
    support = [i for i in range(field.grid.size) if np.any(field.coeffs[i] != 0)]
    for i in support:
        k = int(field.grid.freqs[i])
        for j, tau in enumerate(field.taus):
            c = field.coeffs[i, j]
            if c != 0:
                rows.append([k, tau, c.real, c.imag])
    tables.write_rows(out / "counterexample.csv", ["k", "tau", "re", "im"], rows)
    print(f"counterexample: member ({index},{which}) N={n_mode}, {len(rows)} nodes")
    return 0


# ---------------------------------------------------------------------------


def build_parser():
    parser = argparse.ArgumentParser(
        prog="qzlab",
        description="Spectral experiments for the periodic quantum Zakharov system",
    )
    parser.add_argument("--config", required=True, help="path to the INI config")
    parser.add_argument("--out", default="out", help="output directory (default: out)")
    parser.add_argument("--seed", type=int, default=None, help="64-bit RNG seed override")
    parser.add_argument("--threads", type=int, default=1,
                        help="worker threads for internal sweeps (QZS_LAB_THREADS overrides)")
    parser.add_argument(
        "command",
        choices=["simulate", "conserve", "semiclassical", "estimates", "counterexample"],
    )
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        if args.command == "simulate":
            return run_simulate(args)
        if args.command == "conserve":
            return run_simulate(args, write_conserved_only=True)
        if args.command == "semiclassical":
            return run_semiclassical(args)
        if args.command == "estimates":
            return run_estimates(args)
        return run_counterexample(args)
    except (UsageError, HypothesisViolation) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (BlowUpDetected, ContractionFailure, ValueError) as exc:
        print(f"runtime failure: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
