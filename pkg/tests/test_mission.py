"""Hexagonal tiling of a service rectangle and the hover-and-fly tour."""
import itertools
import math

import numpy as np
import pytest

from uavcell import (DeploymentVars, assemble_plan, cell_edge_rate_mc,
                     layout_centers, plan_tour)

SQRT3 = math.sqrt(3.0)


def brute_force_cycle(points):
    """Exact shortest closed tour by permutation search (first point fixed)."""
    n = len(points)
    idx = range(1, n)
    best = math.inf
    for perm in itertools.permutations(idx):
        order = (0,) + perm
        length = sum(
            math.dist(points[order[i]], points[order[(i + 1) % n]])
            for i in range(n))
        best = min(best, length)
    return best


def test_layout_counts_bounded():
    w, h, R = 1000.0, 800.0, 100.0
    centers = layout_centers(w, h, R)
    cell_area = 1.5 * SQRT3 * R**2
    assert len(centers) >= w * h / cell_area  # tiling cannot undershoot
    assert len(centers) <= (w + 4 * R) * (h + 4 * R) / cell_area


def test_layout_covers_rectangle():
    w, h, R = 1000.0, 800.0, 100.0
    centers = layout_centers(w, h, R)
    rng = np.random.default_rng(0)
    pts = rng.uniform((0.0, 0.0), (w, h), size=(10000, 2))
    d = np.min(np.hypot(pts[:, None, 0] - centers[None, :, 0],
                        pts[:, None, 1] - centers[None, :, 1]), axis=1)
    assert d.max() <= R * (1 + 1e-9)


def test_layout_minimal_rectangle():
    # a rectangle matching one hexagon's bounding box still straddles the
    # two neighbouring columns, so three cells are needed
    R = 10.0
    centers = layout_centers(2 * R, SQRT3 * R, R)
    assert len(centers) == 3


def test_layout_rejects_empty_rect():
    with pytest.raises(ValueError):
        layout_centers(0.0, 100.0, 10.0)
    with pytest.raises(ValueError):
        layout_centers(100.0, 100.0, -1.0)


def test_single_center_tour():
    plan = plan_tour(np.array([[5.0, 5.0]]), (0.0, 0.0), 10.0)
    assert plan.tour_length_m == 0.0
    assert plan.fly_time_s == 0.0
    assert len(plan.centers) == 1


def test_two_center_tour():
    plan = plan_tour(np.array([[0.0, 0.0], [30.0, 40.0]]), (0.0, 0.0), 10.0)
    assert plan.tour_length_m == pytest.approx(100.0, rel=1e-12)  # out and back
    assert plan.fly_time_s == pytest.approx(10.0, rel=1e-12)


def test_tour_visits_every_center_once():
    rng = np.random.default_rng(8)
    centers = rng.uniform(0.0, 500.0, size=(40, 2))
    plan = plan_tour(centers, (0.0, 0.0), 10.0)
    got = sorted(map(tuple, plan.centers))
    want = sorted(map(tuple, centers))
    assert got == want


def test_tour_starts_nearest_depot():
    centers = np.array([[100.0, 100.0], [5.0, 5.0], [200.0, 30.0], [90.0, 180.0]])
    plan = plan_tour(centers, (0.0, 0.0), 10.0)
    assert plan.centers[0].tolist() == [5.0, 5.0]


def test_two_opt_uncrosses():
    # two parallel rows; nearest neighbor zig-zags, the optimal loop does not
    pts = np.array([[0.0, 0.0], [2.0, 0.0], [4.0, 0.0],
                    [0.0, 1.0], [2.0, 1.0], [4.0, 1.0]])
    plan = plan_tour(pts, (0.0, 0.0), 1.0)
    assert plan.tour_length_m == pytest.approx(10.0, rel=1e-12)


def test_small_tours_near_optimal():
    rng = np.random.default_rng(21)
    for _ in range(5):
        n = int(rng.integers(3, 9))
        pts = rng.uniform(0.0, 1000.0, size=(n, 2))
        plan = plan_tour(pts, (0.0, 0.0), 10.0)
        assert plan.tour_length_m <= 1.05 * brute_force_cycle(pts) + 1e-9


def test_assemble_plan_mc(params):
    vars = DeploymentVars.point(100.0, math.pi / 4)  # rbar = 100 m cells
    plan = assemble_plan(params, vars, "mc", 1.0e8, 20.0, (1000.0, 800.0))
    hover_each = 1.0e8 / (params.bandwidth_hz * cell_edge_rate_mc(params, vars))
    np.testing.assert_allclose(plan.hover_times_s, hover_each, rtol=1e-12)
    assert plan.completion_time_s == pytest.approx(
        plan.fly_time_s + plan.hover_times_s.sum(), rel=1e-12)
    assert plan.fly_time_s == pytest.approx(plan.tour_length_m / 20.0, rel=1e-12)


def test_assemble_plan_period_modes(params):
    vars = DeploymentVars.point(100.0, math.pi / 4)
    plan = assemble_plan(params, vars, "mac", 60.0, 20.0, (500.0, 400.0))
    assert set(plan.hover_times_s.tolist()) == {60.0}


def test_hover_dominance_warning(params, caplog):
    vars = DeploymentVars.point(100.0, math.pi / 4)
    # one second of hover per cell cannot dominate kilometers of flying
    with caplog.at_level("WARNING", logger="uavcell.mission"):
        plan = assemble_plan(params, vars, "bc", 1.0, 20.0, (1000.0, 800.0))
    assert plan.hover_dominance < 10.0
    assert any("hover" in rec.message for rec in caplog.records)


def test_single_cell_plan_dominance_is_infinite(params):
    vars = DeploymentVars.point(500.0, 1.2)  # one giant cell
    plan = assemble_plan(params, vars, "mac", 60.0, 20.0, (100.0, 100.0))
    assert len(plan.centers) == 1
    assert plan.tour_length_m == 0.0
    assert math.isinf(plan.hover_dominance)


def test_assemble_plan_validation(params):
    vars = DeploymentVars.point(100.0, math.pi / 4)
    with pytest.raises(ValueError):
        assemble_plan(params, vars, "tdma", 60.0, 20.0, (500.0, 400.0))
    with pytest.raises(ValueError):
        assemble_plan(params, vars, "mac", -1.0, 20.0, (500.0, 400.0))
