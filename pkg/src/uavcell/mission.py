"""Fly-hover-and-communicate planning.

The service area (an axis-aligned rectangle with one corner at the origin)
is tiled by hexagonal cells of circumradius rbar; the UAV visits the cell
centers along a short closed tour, hovering over each center long enough to
serve the cell, then flying to the next. The model assumes hovering time
dominates flying time; the planner reports the actual ratio and warns when
it drops below 10.
"""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field

import numpy as np

from .geometry import SQRT3, coverage_radius
from .params import DeploymentVars, SystemParams
from .rates import BC, MAC, MC, MODES, cell_edge_rate_mc

log = logging.getLogger(__name__)

HOVER_DOMINANCE_MIN = 10.0

# hexagon orientation: one vertex on the +x axis (matches geometry.hex_contains).
# Cell pitch: columns every 1.5*R in x, rows every sqrt(3)*R in y, odd columns
# shifted half a row. Projection half-extents of the hexagon on the separating
# axes (1,0), (0,1), (sqrt3/2, 1/2), (sqrt3/2, -1/2):
_AXES = ((1.0, 0.0), (0.0, 1.0),
         (SQRT3 / 2, 0.5), (SQRT3 / 2, -0.5))
_HEX_EXTENT_FACTORS = (1.0, SQRT3 / 2, SQRT3 / 2, SQRT3 / 2)


@dataclass(frozen=True)
class MissionPlan:
    """A visiting order over cell centers plus the hover/fly time budget."""

    centers: np.ndarray  # shape (n, 2), visit order
    tour_length_m: float
    hover_times_s: np.ndarray = field(repr=False)
    fly_time_s: float
    completion_time_s: float
    hover_dominance: float


def _hex_overlaps_rect(cx: float, cy: float, circumradius: float,
                       width: float, height: float) -> bool:
    """Positive-area overlap between the hexagon at (cx, cy) and
    [0, width] x [0, height], by separating-axis projections."""
    eps = 1e-9 * circumradius
    for (ax, ay), factor in zip(_AXES, _HEX_EXTENT_FACTORS):
        center_proj = cx * ax + cy * ay
        extent = factor * circumradius
        corner_projs = (0.0, width * ax, height * ay, width * ax + height * ay)
        lo = min(corner_projs)
        hi = max(corner_projs)
        if min(hi, center_proj + extent) - max(lo, center_proj - extent) <= eps:
            return False
    return True


def layout_centers(width_m: float, height_m: float, circumradius_m: float) -> np.ndarray:
    """Cell centers of the hexagonal tessellation serving the rectangle.

    Keeps every lattice cell whose hexagon overlaps the rectangle, so each
    area point lies in some kept cell and therefore within circumradius of
    its center. Edge cells overhang the boundary; that is intended.
    """
    if width_m <= 0.0 or height_m <= 0.0:
        raise ValueError(f"rectangle dims must be > 0, got {width_m} x {height_m}")
    rbar = circumradius_m
    if rbar <= 0.0:
        raise ValueError(f"circumradius must be > 0, got {rbar}")
    centers = []
    j_hi = math.floor((width_m + rbar) / (1.5 * rbar)) + 1
    k_hi = math.floor((height_m + SQRT3 * rbar) / (SQRT3 * rbar)) + 1
    for j in range(-1, j_hi + 1):
        cx = 1.5 * rbar * j
        y_off = SQRT3 / 2 * rbar if j % 2 else 0.0
        for k in range(-1, k_hi + 1):
            cy = SQRT3 * rbar * k + y_off
            if _hex_overlaps_rect(cx, cy, rbar, width_m, height_m):
                centers.append((cx, cy))
    return np.array(centers, dtype=float)


def _cycle_length(points: np.ndarray, order: list) -> float:
    total = 0.0
    n = len(order)
    for i in range(n):
        a = points[order[i]]
        b = points[order[(i + 1) % n]]
        total += math.hypot(b[0] - a[0], b[1] - a[1])
    return total


def _two_opt(points: np.ndarray, order: list) -> list:
    """Reverse tour segments while any swap shortens the cycle.

    For each cut position i the deltas of all candidate second cuts j are
    evaluated in one vectorized pass; the best one is applied if it helps.
    Segment lengths are cached and patched after each reversal (interior
    segments keep their lengths in reverse order, only the two cut edges
    change).
    """
    order = np.asarray(order, dtype=int)
    pts = points[order]
    n = len(pts)
    seg = np.hypot(*(np.roll(pts, -1, axis=0) - pts).T)  # seg[i] = |p_i p_{i+1}|
    improved = True
    while improved:
        improved = False
        for i in range(n - 1):
            a = pts[i - 1]  # wraps to pts[n-1] when i == 0
            b = pts[i]
            j_hi = n - 1 if i > 0 else n - 2  # whole-cycle reversal changes nothing
            if j_hi < i + 1:
                continue
            js = np.arange(i + 1, j_hi + 1)
            c = pts[js]
            d = pts[(js + 1) % n]
            delta = (np.hypot(c[:, 0] - a[0], c[:, 1] - a[1])
                     + np.hypot(d[:, 0] - b[0], d[:, 1] - b[1])
                     - seg[i - 1] - seg[js])
            k = int(np.argmin(delta))
            if delta[k] < -1e-9:
                j = int(js[k])
                pts[i:j + 1] = pts[i:j + 1][::-1]
                order[i:j + 1] = order[i:j + 1][::-1]
                seg[i:j] = seg[i:j][::-1]
                seg[i - 1] = math.hypot(pts[i, 0] - a[0], pts[i, 1] - a[1])
                jn = (j + 1) % n
                seg[j] = math.hypot(pts[jn, 0] - pts[j, 0], pts[jn, 1] - pts[j, 1])
                improved = True
    return [int(v) for v in order]


def plan_tour(centers: np.ndarray, start, v_max: float) -> MissionPlan:
    """Geometry part of the plan: visit order and flying time, no hover yet.

    Nearest-neighbor construction from the point nearest `start`, improved by
    2-opt until no move helps. tour_length_m is the closed cycle over the
    centers; the depot leg is excluded (a single center gives length 0).
    """
    centers = np.asarray(centers, dtype=float)
    if centers.ndim != 2 or centers.shape[1] != 2 or len(centers) == 0:
        raise ValueError("centers must be a non-empty (n, 2) array")
    if v_max <= 0.0:
        raise ValueError(f"v_max must be > 0, got {v_max}")
    start = np.asarray(start, dtype=float)
    n = len(centers)
    cur = int(np.argmin(np.hypot(*(centers - start).T)))
    order = [cur]
    remaining = np.ones(n, dtype=bool)
    remaining[cur] = False
    for _ in range(n - 1):
        dists = np.hypot(*(centers - centers[cur]).T)
        dists[~remaining] = np.inf
        cur = int(np.argmin(dists))
        order.append(cur)
        remaining[cur] = False
    first = order[0]
    if n > 2:
        order = _two_opt(centers, order)
        pos = order.index(first)  # 2-opt may rotate; restart the cycle at the
        order = order[pos:] + order[:pos]  # center nearest `start`
    length = _cycle_length(centers, order)
    fly = length / v_max
    return MissionPlan(centers=centers[order], tour_length_m=length,
                       hover_times_s=np.zeros(n), fly_time_s=fly,
                       completion_time_s=fly, hover_dominance=0.0)


def assemble_plan(params: SystemParams, vars: DeploymentVars, mode: str,
                  per_cell_payload: float, v_max: float, area) -> MissionPlan:
    """Full mission plan over a (width_m, height_m) service rectangle.

    per_cell_payload is the multicast file size in bits for mc, or the
    per-cell service period in seconds for bc/mac.
    """
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}, got {mode!r}")
    if per_cell_payload <= 0.0:
        raise ValueError(f"per-cell payload must be > 0, got {per_cell_payload}")
    width_m, height_m = area
    rbar = coverage_radius(vars.altitude_m, vars.half_beamwidth_rad)
    centers = layout_centers(width_m, height_m, rbar)
    depot = (0.0, 0.0)  # rectangle corner nearest the origin
    base = plan_tour(centers, depot, v_max)
    if mode == MC:
        hover_each = per_cell_payload / (params.bandwidth_hz * cell_edge_rate_mc(params, vars))
    else:  # bc/mac serve each cell for the configured period
        hover_each = per_cell_payload
    hover = np.full(len(base.centers), hover_each)
    hover_total = float(np.sum(hover))
    fly = base.fly_time_s
    dominance = (math.inf if base.tour_length_m == 0.0
                 else hover_total * v_max / base.tour_length_m)
    if dominance < HOVER_DOMINANCE_MIN:
        log.warning("hover time only %.2fx flying time; the hover-dominance "
                    "assumption (>= %.0fx) does not hold", dominance, HOVER_DOMINANCE_MIN)
    return MissionPlan(centers=base.centers, tour_length_m=base.tour_length_m,
                       hover_times_s=hover, fly_time_s=fly,
                       completion_time_s=hover_total + fly,
                       hover_dominance=dominance)
