"""Command-line front end: optimize, sweep, simulate, plan.

Global flags come before the subcommand:

    uavcell --config params.json [--out DIR] [--seed N] <command> [options]

Reports are key=value lines on stdout; tabular outputs are CSV files under
--out. Exit codes: 0 success, 2 configuration/usage error, 3 simulation gap
above tolerance.
"""
from __future__ import annotations

import argparse
import csv
import math
import sys
from pathlib import Path

from .config import Config, ConfigError, load_config
from .geometry import SQRT3, coverage_radius
from .mission import assemble_plan
from .montecarlo import SimSpec, simulate_rate
from .optimize import optimize, search_1d  # noqa: F401  (search_1d re-exported for scripts)
from .params import DeploymentVars
from .rates import MC, MODES, rate_value

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_GAP = 3

# plan refuses to tile the area into more cells than this; tours over tens of
# thousands of 2-opt points take minutes for no planning insight
MAX_PLAN_CELLS = 4096


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="uavcell",
        description="Altitude/beamwidth tradeoff tools for a UAV-mounted aerial cell")
    parser.add_argument("--config", required=True, help="path to the JSON config")
    parser.add_argument("--out", default=".", help="directory for CSV outputs")
    parser.add_argument("--seed", type=int, default=None,
                        help="override the config seed")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("optimize", help="closed-rule altitude + beamwidth search")
    p.add_argument("--mode", required=True, choices=MODES)
    p.add_argument("--tol", type=float, default=1e-4,
                   help="beamwidth search tolerance, radians")
    p.add_argument("--csv", action="store_true", help="also write the search trace CSV")

    p = sub.add_parser("sweep", help="tabulate the rate along one variable")
    p.add_argument("--mode", required=True, choices=MODES)
    p.add_argument("--var", required=True, choices=("h", "theta"))
    p.add_argument("--range", required=True, metavar="LO:HI:N", dest="sweep_range")
    p.add_argument("--fixed-h", type=float, default=None,
                   help="altitude when sweeping theta (default: box midpoint)")
    p.add_argument("--fixed-theta", type=float, default=None,
                   help="beamwidth when sweeping h (default: box midpoint)")
    p.add_argument("--with-sim", action="store_true",
                   help="add an empirical Monte Carlo column")
    p.add_argument("--realizations", type=int, default=100)
    p.add_argument("--count-model", choices=("poisson", "fixed"), default="poisson")

    p = sub.add_parser("simulate", help="Monte Carlo check of one operating point")
    p.add_argument("--mode", required=True, choices=MODES)
    p.add_argument("--altitude", type=float, default=None,
                   help="operating altitude (default: box midpoint)")
    p.add_argument("--theta", type=float, default=None,
                   help="operating half-beamwidth (default: box midpoint)")
    p.add_argument("--realizations", type=int, default=100)
    p.add_argument("--count-model", choices=("poisson", "fixed"), default="poisson")
    p.add_argument("--gap-tol", type=float, default=0.05,
                   help="exit 3 when |empirical-analytic|/analytic exceeds this")
    p.add_argument("--csv", action="store_true", help="write per-realization CSV")

    p = sub.add_parser("plan", help="hex layout + visiting tour + hover schedule")
    p.add_argument("--mode", required=True, choices=MODES)
    return parser


def _fmt(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        # numpy scalars pass the isinstance check but repr as np.float64(...)
        return repr(float(value))
    return str(value)


def _report(pairs):
    for key, value in pairs:
        print(f"{key}={_fmt(value)}")


def _write_csv(path: Path, header, rows, seed=None):
    with open(path, "w", newline="") as fh:
        if seed is not None:
            fh.write(f"# seed={seed}\n")
        writer = csv.writer(fh)
        writer.writerow(header)
        for row in rows:
            writer.writerow([_fmt(cell) for cell in row])


def _parse_range(text: str):
    parts = text.split(":")
    if len(parts) != 3:
        raise ConfigError(f"range: expected LO:HI:N, got {text!r}")
    try:
        lo, hi = float(parts[0]), float(parts[1])
        n = int(parts[2])
    except ValueError as exc:
        raise ConfigError(f"range: expected LO:HI:N with numeric fields, got {text!r}") from exc
    if n < 2:
        raise ConfigError(f"range: need at least 2 points, got {n}")
    if not lo < hi:
        raise ConfigError(f"range: need LO < HI, got {text!r}")
    return lo, hi, n


def _grid(lo: float, hi: float, n: int):
    step = (hi - lo) / (n - 1)
    return [lo + i * step for i in range(n)]


def cmd_optimize(cfg: Config, args, out_dir: Path) -> int:
    params = cfg.system_params()
    box = cfg.deployment_box()
    result = optimize(args.mode, params, box, tol=args.tol)
    _report([
        ("mode", result.mode),
        ("h_star_m", result.h_star_m),
        ("theta_star_rad", result.theta_star_rad),
        ("theta_star_deg", math.degrees(result.theta_star_rad)),
        ("objective_bps_hz", result.objective_bps_hz),
        ("method", result.method),
        ("h_indifferent", result.h_indifferent),
    ])
    if args.csv:
        path = out_dir / f"optimize_{result.mode}_trace.csv"
        _write_csv(path, ("h_m", "theta_rad", "value_bps_hz"), result.trace)
        print(f"trace_csv={path}")
    return EXIT_OK


def cmd_sweep(cfg: Config, args, out_dir: Path, seed: int) -> int:
    params = cfg.system_params()
    lo, hi, n = _parse_range(args.sweep_range)
    if args.var == "theta":
        if not (lo > 0.0 and hi < math.pi / 2):
            raise ConfigError(f"range: theta sweep must lie inside (0, pi/2), got {lo}:{hi}")
        fixed = args.fixed_h if args.fixed_h is not None else (cfg.h_min_m + cfg.h_max_m) / 2
        if fixed <= 0.0:
            raise ConfigError(f"fixed-h: must be > 0, got {fixed}")
        point = lambda v: (fixed, v)
    else:
        if lo <= 0.0:
            raise ConfigError(f"range: altitude sweep must be positive, got {lo}:{hi}")
        fixed = (args.fixed_theta if args.fixed_theta is not None
                 else (cfg.theta_min_rad + cfg.theta_max_rad) / 2)
        if not 0.0 < fixed < math.pi / 2:
            raise ConfigError(f"fixed-theta: must lie inside (0, pi/2), got {fixed}")
        point = lambda v: (v, fixed)

    rows = []
    for value in _grid(lo, hi, n):
        h, theta = point(value)
        analytic = rate_value(args.mode, params, h, theta)
        if args.with_sim:
            spec = SimSpec(mode=args.mode, realizations=args.realizations,
                           seed=seed, count_model=args.count_model)
            sim = simulate_rate(params, DeploymentVars.point(h, theta), spec)
            rows.append((value, analytic, sim.empirical_mean_bps_hz))
        else:
            rows.append((value, analytic))

    path = out_dir / f"sweep_{args.mode}_{args.var}.csv"
    if args.with_sim:
        header = ("sweep_value", "analytic_bps_per_hz", "empirical_bps_per_hz")
        _write_csv(path, header, rows, seed=seed)
    else:
        _write_csv(path, ("sweep_value", "rate_bps_per_hz"), rows)
    _report([
        ("mode", args.mode),
        ("var", args.var),
        ("fixed_" + ("h_m" if args.var == "theta" else "theta_rad"), fixed),
        ("rows", n),
        ("sweep_csv", path),
    ])
    return EXIT_OK


def cmd_simulate(cfg: Config, args, out_dir: Path, seed: int) -> int:
    params = cfg.system_params()
    altitude = args.altitude if args.altitude is not None else (cfg.h_min_m + cfg.h_max_m) / 2
    theta = args.theta if args.theta is not None else (cfg.theta_min_rad + cfg.theta_max_rad) / 2
    vars = cfg.deployment_box().at(altitude_m=altitude, half_beamwidth_rad=theta)
    spec = SimSpec(mode=args.mode, realizations=args.realizations,
                   seed=seed, count_model=args.count_model)
    result = simulate_rate(params, vars, spec)
    stderr = result.empirical_stderr_bps_hz
    _report([
        ("mode", result.mode),
        ("altitude_m", altitude),
        ("half_beamwidth_rad", theta),
        ("realizations", args.realizations),
        ("count_model", args.count_model),
        ("seed", seed),
        ("analytic_bps_hz", result.analytic_bps_hz),
        ("empirical_mean_bps_hz", result.empirical_mean_bps_hz),
        ("empirical_stderr_bps_hz", "n/a" if math.isnan(stderr) else stderr),
        ("relative_gap", result.relative_gap),
        ("gap_tol", args.gap_tol),
    ])
    if args.csv:
        path = out_dir / f"simulate_{result.mode}.csv"
        rows = zip(range(args.realizations), result.gt_counts, result.per_realization)
        _write_csv(path, ("realization_index", "gt_count", "value_bps_per_hz"),
                   ((i, int(c), v) for i, c, v in rows), seed=seed)
        print(f"realizations_csv={path}")
    if result.relative_gap > args.gap_tol:
        print(f"validation gap {result.relative_gap:.3g} exceeds tolerance "
              f"{args.gap_tol}", file=sys.stderr)
        return EXIT_GAP
    return EXIT_OK


def cmd_plan(cfg: Config, args, out_dir: Path) -> int:
    if cfg.area_width_m is None or cfg.area_height_m is None:
        raise ConfigError("area_width_m: plan needs rectangle dims "
                          "(area_width_m and area_height_m)")
    if cfg.uav_speed_mps is None:
        raise ConfigError("uav_speed_mps: required for plan")
    if args.mode == MC:
        if cfg.file_size_bits is None:
            raise ConfigError("file_size_bits: required for plan --mode mc")
        payload = cfg.file_size_bits
    else:
        if cfg.period_s is None:
            raise ConfigError(f"period_s: required for plan --mode {args.mode}")
        payload = cfg.period_s

    params = cfg.system_params()
    box = cfg.deployment_box()
    opt = optimize(args.mode, params, box)
    vars = box.at(altitude_m=opt.h_star_m, half_beamwidth_rad=opt.theta_star_rad)
    rbar = coverage_radius(vars.altitude_m, vars.half_beamwidth_rad)
    n_cells_low = cfg.area_width_m * cfg.area_height_m / (1.5 * SQRT3 * rbar**2)
    if n_cells_low > MAX_PLAN_CELLS:
        raise ConfigError(
            f"area_width_m/area_height_m: plan would need about "
            f"{int(n_cells_low)} cells of radius {rbar:.3g} m at the "
            f"{args.mode} optimum (limit {MAX_PLAN_CELLS}); shrink the area "
            "or widen the deployment box toward larger cells")
    plan = assemble_plan(params, vars, args.mode, payload, cfg.uav_speed_mps,
                         (cfg.area_width_m, cfg.area_height_m))

    hover_total = float(plan.hover_times_s.sum())
    rows = []
    cumulative = 0.0
    previous = None
    speed = cfg.uav_speed_mps
    for index, (center, hover) in enumerate(zip(plan.centers, plan.hover_times_s)):
        if previous is not None:
            cumulative += math.hypot(center[0] - previous[0],
                                     center[1] - previous[1]) / speed
        cumulative += float(hover)
        rows.append((index, float(center[0]), float(center[1]), float(hover), cumulative))
        previous = center
    path = out_dir / f"plan_{args.mode}.csv"
    _write_csv(path, ("cell_index", "x_m", "y_m", "hover_s", "cumulative_s"), rows)

    _report([
        ("mode", args.mode),
        ("h_m", opt.h_star_m),
        ("theta_rad", opt.theta_star_rad),
        ("n_cells", len(plan.centers)),
        ("tour_length_m", plan.tour_length_m),
        ("hover_total_s", hover_total),
        ("fly_time_s", plan.fly_time_s),
        ("completion_time_s", plan.completion_time_s),
        ("hover_dominance", plan.hover_dominance),
        ("plan_csv", path),
    ])
    if plan.hover_dominance < 10.0:
        print("warning: hovering does not dominate flying time "
              f"(ratio {plan.hover_dominance:.2f} < 10)", file=sys.stderr)
    return EXIT_OK


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = load_config(args.config)
        out_dir = Path(args.out)
        out_dir.mkdir(parents=True, exist_ok=True)
        seed = args.seed if args.seed is not None else cfg.seed
        if args.command == "optimize":
            return cmd_optimize(cfg, args, out_dir)
        if args.command == "sweep":
            return cmd_sweep(cfg, args, out_dir, seed)
        if args.command == "simulate":
            return cmd_simulate(cfg, args, out_dir, seed)
        if args.command == "plan":
            return cmd_plan(cfg, args, out_dir)
        raise ConfigError(f"unknown command {args.command!r}")
    except (ConfigError, ValueError) as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
