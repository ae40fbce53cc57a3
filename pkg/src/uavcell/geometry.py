"""Cell geometry: coverage radius, hexagon/disk cells, and terminal sampling.

The covered ground region at altitude H with half-beamwidth theta is a disk
of radius rbar = H*tan(theta). For tessellation the serviced cell is the
regular hexagon inscribed in that disk, with one vertex on the positive
x axis relative to the cell center.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .params import DeploymentVars, SystemParams

SQRT3 = math.sqrt(3.0)

HEXAGON = "hexagon"
DISK = "disk"
REGIONS = (HEXAGON, DISK)


def coverage_radius(altitude_m: float, half_beamwidth_rad: float) -> float:
    """Radius rbar = H*tan(theta) of the ground disk seen by the main lobe."""
    if altitude_m <= 0.0:
        raise ValueError(f"altitude must be > 0, got {altitude_m}")
    if not 0.0 < half_beamwidth_rad < math.pi / 2:
        raise ValueError(f"half-beamwidth must lie in (0, pi/2), got {half_beamwidth_rad}")
    return altitude_m * math.tan(half_beamwidth_rad)


@dataclass(frozen=True)
class CellLayout:
    """Derived geometry of one cell and its place in a larger service area.

    mean_gts_hex / mean_gts_disk are the expected terminal counts K_s and K_s'
    in the hexagonal cell and the full coverage disk; n_cells is the
    (real-valued) number of hexagonal cells tiling the total area.
    """

    circumradius_m: float
    hex_area_m2: float
    disk_area_m2: float
    mean_gts_hex: float
    mean_gts_disk: float
    n_cells: float


def make_layout(params: SystemParams, vars: DeploymentVars,
                total_area_m2: float) -> CellLayout:
    rbar = coverage_radius(vars.altitude_m, vars.half_beamwidth_rad)
    hex_area = 1.5 * SQRT3 * rbar**2
    disk_area = math.pi * rbar**2
    if total_area_m2 < hex_area:
        raise ValueError(
            f"total area {total_area_m2} m^2 is smaller than one cell ({hex_area} m^2)")
    rho = params.density_per_m2
    return CellLayout(
        circumradius_m=rbar,
        hex_area_m2=hex_area,
        disk_area_m2=disk_area,
        mean_gts_hex=rho * hex_area,
        mean_gts_disk=rho * disk_area,
        n_cells=total_area_m2 / hex_area,
    )


def hex_contains(xy, circumradius: float):
    """True for points inside the regular hexagon (vertex on +x axis), boundary inclusive."""
    if circumradius <= 0.0:
        raise ValueError(f"circumradius must be > 0, got {circumradius}")
    xy = np.asarray(xy, dtype=float)
    x = np.abs(xy[..., 0])
    y = np.abs(xy[..., 1])
    inside = (y <= SQRT3 / 2 * circumradius) & (SQRT3 * x + y <= SQRT3 * circumradius)
    return inside if inside.ndim else bool(inside)


def disk_contains(xy, radius: float):
    if radius <= 0.0:
        raise ValueError(f"radius must be > 0, got {radius}")
    xy = np.asarray(xy, dtype=float)
    inside = xy[..., 0]**2 + xy[..., 1]**2 <= radius**2
    return inside if inside.ndim else bool(inside)


@dataclass(frozen=True)
class GtRealization:
    """One random draw of terminal positions, relative to the cell center."""

    positions: np.ndarray  # shape (n, 2), meters
    region: str
    seed: object


def sample_gts(layout: CellLayout, region: str, seed, density: float,
               count_model: str = "poisson") -> GtRealization:
    """Sample one realization of terminal positions in a cell.

    The count is Poisson with mean density*area by default, or the rounded
    mean with count_model="fixed". Positions are i.i.d. uniform: direct
    inverse-CDF sampling on the disk, rejection from the bounding box on the
    hexagon. Deterministic for a given seed.
    """
    if region not in REGIONS:
        raise ValueError(f"region must be one of {REGIONS}, got {region!r}")
    if count_model not in ("poisson", "fixed"):
        raise ValueError(f"count_model must be 'poisson' or 'fixed', got {count_model!r}")
    if density <= 0.0:
        raise ValueError(f"density must be > 0, got {density}")
    rng = np.random.default_rng(seed)
    area = layout.hex_area_m2 if region == HEXAGON else layout.disk_area_m2
    mean = density * area
    count = int(rng.poisson(mean)) if count_model == "poisson" else int(round(mean))
    rbar = layout.circumradius_m
    if region == DISK:
        radii = rbar * np.sqrt(rng.uniform(size=count))
        angles = rng.uniform(0.0, 2.0 * math.pi, size=count)
        positions = np.column_stack([radii * np.cos(angles), radii * np.sin(angles)])
    else:
        # acceptance ratio from the 2rbar x sqrt(3)rbar box is 3/4
        chunks = []
        needed = count
        while needed > 0:
            n_prop = max(16, int(needed / 0.7) + 8)
            props = np.column_stack([
                rng.uniform(-rbar, rbar, size=n_prop),
                rng.uniform(-SQRT3 / 2 * rbar, SQRT3 / 2 * rbar, size=n_prop),
            ])
            accepted = props[hex_contains(props, rbar)]
            chunks.append(accepted[:needed])
            needed -= len(accepted[:needed])
        positions = (np.concatenate(chunks) if chunks
                     else np.empty((0, 2), dtype=float))
    return GtRealization(positions=positions, region=region, seed=seed)
