"""Monte Carlo validation of the closed-form cell rates.

Each realization draws terminal positions (and optionally a Poisson count)
in one cell and evaluates the realized sum rate; the empirical mean over
realizations is compared against the analytic expression. Realization i uses
its own rng seeded by (base_seed, i), so results do not depend on execution
order and are bit-reproducible for a fixed seed.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .geometry import DISK, HEXAGON, SQRT3, coverage_radius, make_layout, sample_gts
from .params import DeploymentVars, SystemParams, derived_constants
from .rates import (BC, MAC, MC, MODES, LN2, McMission, cell_edge_rate_mc,
                    mission_time_mc, rate_value)

_REGION_FOR_MODE = {MC: HEXAGON, BC: DISK, MAC: DISK}


@dataclass(frozen=True)
class SimSpec:
    """What to simulate: mode, realization count, seeding, and cell shape."""

    mode: str
    realizations: int = 100
    seed: int = 0
    region: str | None = None  # defaults to the mode's natural region
    count_model: str = "poisson"

    def __post_init__(self):
        if self.mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}, got {self.mode!r}")
        if self.realizations < 1:
            raise ValueError(f"need at least 1 realization, got {self.realizations}")
        if self.count_model not in ("poisson", "fixed"):
            raise ValueError(f"count_model must be 'poisson' or 'fixed', got {self.count_model!r}")
        required = _REGION_FOR_MODE[self.mode]
        if self.region is None:
            object.__setattr__(self, "region", required)
        elif self.region != required:
            raise ValueError(
                f"mode {self.mode!r} is defined on the {required}, got region {self.region!r}")


@dataclass(frozen=True)
class SimResult:
    mode: str
    analytic_bps_hz: float
    empirical_mean_bps_hz: float
    empirical_stderr_bps_hz: float
    relative_gap: float
    per_realization: np.ndarray
    gt_counts: np.ndarray
    seed: int


def _realized_sum_rate(mode: str, positions: np.ndarray, params: SystemParams,
                       vars: DeploymentVars) -> float:
    """Sum rate of one realization, with the expected count K_s' replaced by
    the realized count where the formulas use it."""
    n = len(positions)
    h = vars.altitude_m
    theta = vars.half_beamwidth_rad
    consts = derived_constants(params)
    if mode == MC:
        # one common stream at the analytic cell-edge rate, n receivers
        return n * cell_edge_rate_mc(params, vars)
    if n == 0:
        return 0.0
    d2 = h**2 + positions[:, 0]**2 + positions[:, 1]**2
    if mode == BC:
        snr = consts.alpha / (theta**2 * d2)
    else:  # MAC: each of the n terminals gets a 1/n bandwidth share
        snr = n * consts.eta / (params.density_per_m2 * math.pi * theta**2 * d2)
    return float(np.mean(np.log1p(snr))) / LN2


def simulate_rate(params: SystemParams, vars: DeploymentVars,
                  spec: SimSpec) -> SimResult:
    rbar = coverage_radius(vars.altitude_m, vars.half_beamwidth_rad)
    layout = make_layout(params, vars, total_area_m2=1.5 * SQRT3 * rbar**2)
    values = np.empty(spec.realizations)
    counts = np.empty(spec.realizations, dtype=int)
    for i in range(spec.realizations):
        real = sample_gts(layout, spec.region, (spec.seed, i),
                          params.density_per_m2, count_model=spec.count_model)
        counts[i] = len(real.positions)
        values[i] = _realized_sum_rate(spec.mode, real.positions, params, vars)
    analytic = rate_value(spec.mode, params, vars.altitude_m, vars.half_beamwidth_rad)
    mean = float(np.mean(values))
    stderr = (float(np.std(values, ddof=1) / math.sqrt(spec.realizations))
              if spec.realizations > 1 else float("nan"))
    return SimResult(
        mode=spec.mode,
        analytic_bps_hz=analytic,
        empirical_mean_bps_hz=mean,
        empirical_stderr_bps_hz=stderr,
        relative_gap=abs(mean - analytic) / analytic,
        per_realization=values,
        gt_counts=counts,
        seed=spec.seed,
    )


@dataclass(frozen=True)
class MissionSimResult:
    total_time_s: float
    per_cell_time_s: float
    n_cells: float
    edge_rate_bps_hz: float
    worst_gt_rate_bps_hz: float
    seed: int


def simulate_mc_mission(params: SystemParams, vars: DeploymentVars,
                        mission: McMission, area_m2: float,
                        spec: SimSpec) -> MissionSimResult:
    """Fly-hover-multicast mission over area_m2, one hexagonal cell at a time.

    The per-cell hover time is keyed on the analytic cell-edge rate (every
    terminal in the cell decodes at least that fast), so the total is
    deterministic and equals mission_time_mc. Sampled realizations feed the
    worst-terminal diagnostic only.
    """
    if spec.mode != MC:
        raise ValueError(f"mission simulation is a multicast operation, got mode {spec.mode!r}")
    layout = make_layout(params, vars, total_area_m2=area_m2)
    total = mission_time_mc(params, vars,
                            McMission(mission.file_size_bits, total_gts=None), area_m2)
    consts = derived_constants(params)
    h, theta = vars.altitude_m, vars.half_beamwidth_rad
    edge_rate = cell_edge_rate_mc(params, vars)
    worst = math.inf
    for i in range(spec.realizations):
        real = sample_gts(layout, spec.region, (spec.seed, i),
                          params.density_per_m2, count_model=spec.count_model)
        if len(real.positions):
            d2 = h**2 + real.positions[:, 0]**2 + real.positions[:, 1]**2
            rates = np.log1p(consts.alpha / (theta**2 * d2)) / LN2
            worst = min(worst, float(np.min(rates)))
    return MissionSimResult(
        total_time_s=total,
        per_cell_time_s=total / layout.n_cells,
        n_cells=layout.n_cells,
        edge_rate_bps_hz=edge_rate,
        worst_gt_rate_bps_hz=worst,
        seed=spec.seed,
    )
