"""Closed-form per-cell spectral efficiency for the three service modes.

All three expressions are the exact radial integrals of the per-terminal
Shannon rates over one cell, normalized by bandwidth (bps/Hz):

  mc  (multicast)   R = K_s * log2(1 + snr at the cell edge), hexagonal cell
  bc  (broadcast)   R = integral of per-terminal FDMA rates over the disk
  mac (uplink)      like bc for simultaneous uplink; independent of altitude
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .channel import snr_bc, snr_mac, snr_mc
from .geometry import SQRT3, coverage_radius
from .params import DeploymentVars, SystemParams, derived_constants

LN2 = math.log(2.0)

MC = "mc"
BC = "bc"
MAC = "mac"
MODES = (MC, BC, MAC)


def _log2_1p(x):
    return np.log1p(x) / LN2


def _log2_1p_f(x: float) -> float:
    return math.log1p(x) / LN2


@dataclass(frozen=True)
class RateResult:
    value_bps_hz: float
    mode: str
    altitude_m: float
    half_beamwidth_rad: float


def _check_point(altitude_m: float, half_beamwidth_rad: float):
    if altitude_m <= 0.0:
        raise ValueError(f"altitude must be > 0, got {altitude_m}")
    if not 0.0 < half_beamwidth_rad < math.pi / 2:
        raise ValueError(f"half-beamwidth must lie in (0, pi/2), got {half_beamwidth_rad}")


def _mc_value(params: SystemParams, h: float, theta: float) -> float:
    alpha = derived_constants(params).alpha
    rho = params.density_per_m2
    edge_snr = alpha * math.cos(theta)**2 / (theta**2 * h**2)
    return 1.5 * SQRT3 * rho * h**2 * math.tan(theta)**2 * _log2_1p_f(edge_snr)


def _bc_value(params: SystemParams, h: float, theta: float) -> float:
    alpha = derived_constants(params).alpha
    t2 = math.tan(theta)**2
    th2 = theta**2
    c2 = math.cos(theta)**2
    s2 = math.sin(theta)**2
    term1 = _log2_1p_f(alpha * c2 / (th2 * h**2)) / s2
    term2 = _log2_1p_f(alpha / (th2 * h**2)) / t2
    term3 = (alpha / (th2 * h**2 * t2)) * math.log2(
        (th2 * h**2 + alpha * c2) / (th2 * h**2 * c2 + alpha * c2))
    return term1 - term2 + term3


def _mac_value(params: SystemParams, h: float, theta: float) -> float:
    # h is accepted for interface symmetry; the integral does not depend on it
    eta = derived_constants(params).eta
    t2 = math.tan(theta)**2
    th2 = theta**2
    c2 = math.cos(theta)**2
    term1 = _log2_1p_f(eta * math.sin(theta)**2 / th2) / c2
    term2 = _log2_1p_f(eta * t2 / th2)
    term3 = (eta * t2 / th2) * _log2_1p_f(th2 * t2 / (th2 + eta * t2))
    return (term1 - term2 + term3) / t2


_VALUE_FNS = {MC: _mc_value, BC: _bc_value, MAC: _mac_value}


def rate_value(mode: str, params: SystemParams,
               altitude_m: float, half_beamwidth_rad: float) -> float:
    """Per-cell spectral efficiency in bps/Hz at an arbitrary operating point."""
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}, got {mode!r}")
    _check_point(altitude_m, half_beamwidth_rad)
    return _VALUE_FNS[mode](params, altitude_m, half_beamwidth_rad)


def rate_mc(params: SystemParams, vars: DeploymentVars) -> RateResult:
    """Multicast sum rate: every terminal decodes the common stream, so the
    cell runs at the edge terminal's rate times the expected count K_s."""
    value = _mc_value(params, vars.altitude_m, vars.half_beamwidth_rad)
    return RateResult(value, MC, vars.altitude_m, vars.half_beamwidth_rad)


def rate_bc(params: SystemParams, vars: DeploymentVars) -> RateResult:
    """Broadcast sum rate over the coverage disk under equal FDMA splits."""
    value = _bc_value(params, vars.altitude_m, vars.half_beamwidth_rad)
    return RateResult(value, BC, vars.altitude_m, vars.half_beamwidth_rad)


def rate_mac(params: SystemParams, vars: DeploymentVars) -> RateResult:
    """Uplink sum rate over the coverage disk; altitude cancels exactly."""
    value = _mac_value(params, vars.altitude_m, vars.half_beamwidth_rad)
    return RateResult(value, MAC, vars.altitude_m, vars.half_beamwidth_rad)


def cell_edge_rate_mc(params: SystemParams, vars: DeploymentVars) -> float:
    """Link spectral efficiency of the farthest covered terminal (bps/Hz).

    This rate dimensions multicast delivery: every terminal in the cell
    decodes at least this fast.
    """
    h, theta = vars.altitude_m, vars.half_beamwidth_rad
    alpha = derived_constants(params).alpha
    return math.log1p(alpha * math.cos(theta)**2 / (theta**2 * h**2)) / LN2


def per_gt_rate(mode: str, r, params: SystemParams, vars: DeploymentVars):
    """Spectral efficiency of a single terminal at horizontal distance r.

    mc uses the full bandwidth; bc/mac terminals hold a 1/K_s' share of it.
    """
    if mode == MC:
        return _log2_1p(snr_mc(r, params, vars))
    rbar = coverage_radius(vars.altitude_m, vars.half_beamwidth_rad)
    ks_disk = params.density_per_m2 * math.pi * rbar**2
    if mode == BC:
        return _log2_1p(snr_bc(r, params, vars)) / ks_disk
    if mode == MAC:
        return _log2_1p(snr_mac(r, params, vars)) / ks_disk
    raise ValueError(f"mode must be one of {MODES}, got {mode!r}")


@dataclass(frozen=True)
class McMission:
    """A common file of file_size_bits to deliver to total_gts terminals.

    total_gts may be omitted, in which case it is derived as density*area
    when the mission time is evaluated.
    """

    file_size_bits: float
    total_gts: float | None = None

    def __post_init__(self):
        if self.file_size_bits <= 0.0:
            raise ValueError(f"file size must be > 0 bits, got {self.file_size_bits}")
        if self.total_gts is not None and self.total_gts <= 0.0:
            raise ValueError(f"terminal count must be > 0, got {self.total_gts}")


def mission_time_mc(params: SystemParams, vars: DeploymentVars,
                    mission: McMission, area_m2: float) -> float:
    """Total hover time to multicast the file to every terminal in the area.

    time = (K * file_bits / W) / rate_mc, with K terminals spread over
    n_cells = area/hex_area cells; equivalently n_cells * file_bits divided
    by the cell-edge link rate.
    """
    if area_m2 <= 0.0:
        raise ValueError(f"area must be > 0, got {area_m2}")
    total = (mission.total_gts if mission.total_gts is not None
             else params.density_per_m2 * area_m2)
    value = _mc_value(params, vars.altitude_m, vars.half_beamwidth_rad)
    return total * mission.file_size_bits / (params.bandwidth_hz * value)
