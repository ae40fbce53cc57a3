"""Command line front end: reports, CSV artifacts, exit codes."""
import json
import math

import pytest

from uavcell import cli

BASE = {
    "beta0": 1.42e-4,
    "bandwidth_hz": 1.0e7,
    "p_downlink_dbm": 10.0,
    "p_uplink_dbm": -10.0,
    "noise_psd_dbm_hz": -169.0,
    "density_per_m2": 0.005,
    "h_min_m": 50.0,
    "h_max_m": 500.0,
    "theta_min_rad": 0.05,
    "theta_max_rad": 1.5,
    "area_width_m": 1000.0,
    "area_height_m": 800.0,
    "file_size_bits": 1.0e8,
    "period_s": 60.0,
    "uav_speed_mps": 20.0,
    "seed": 7,
}


@pytest.fixture
def cfg_path(tmp_path):
    path = tmp_path / "cfg.json"
    path.write_text(json.dumps(BASE))
    return path


def run(cfg_path, out_dir, *argv):
    return cli.main(["--config", str(cfg_path), "--out", str(out_dir), *argv])


def parse_report(captured):
    pairs = {}
    for line in captured.splitlines():
        if "=" in line:
            key, _, value = line.partition("=")
            pairs[key] = value
    return pairs


def test_optimize_mac_report(cfg_path, tmp_path, capsys):
    assert run(cfg_path, tmp_path, "optimize", "--mode", "mac") == 0
    report = parse_report(capsys.readouterr().out)
    assert report["mode"] == "mac"
    assert report["h_indifferent"] == "true"
    theta = float(report["theta_star_rad"])
    assert abs(theta - 1.3195) <= 0.005
    assert float(report["theta_star_deg"]) == pytest.approx(math.degrees(theta))


def test_optimize_trace_csv(cfg_path, tmp_path, capsys):
    assert run(cfg_path, tmp_path, "optimize", "--mode", "bc", "--csv") == 0
    lines = (tmp_path / "optimize_bc_trace.csv").read_text().splitlines()
    assert lines[0] == "h_m,theta_rad,value_bps_hz"
    assert len(lines) > 100  # coarse scan plus refinement
    # no numpy scalar reprs may leak into artifacts
    assert "np.float64" not in "".join(lines)


def test_sweep_rows_and_header(cfg_path, tmp_path, capsys):
    assert run(cfg_path, tmp_path, "sweep", "--mode", "mc", "--var", "h",
               "--range", "100:500:5") == 0
    lines = (tmp_path / "sweep_mc_h.csv").read_text().splitlines()
    assert lines[0] == "sweep_value,rate_bps_per_hz"
    assert len(lines) == 6
    assert [float(l.split(",")[0]) for l in lines[1:]] == [100.0, 200.0, 300.0,
                                                           400.0, 500.0]


def test_sweep_minimal_grid(cfg_path, tmp_path, capsys):
    assert run(cfg_path, tmp_path, "sweep", "--mode", "bc", "--var", "theta",
               "--range", "0.1:1.0:2") == 0
    lines = (tmp_path / "sweep_bc_theta.csv").read_text().splitlines()
    assert len(lines) == 3  # header + both endpoints


def test_sweep_with_sim_reproducible(cfg_path, tmp_path, capsys):
    args = ("sweep", "--mode", "mac", "--var", "theta", "--range", "0.4:1.2:3",
            "--with-sim", "--realizations", "20")
    assert run(cfg_path, tmp_path, *args) == 0
    first = (tmp_path / "sweep_mac_theta.csv").read_bytes()
    assert run(cfg_path, tmp_path, *args) == 0
    assert (tmp_path / "sweep_mac_theta.csv").read_bytes() == first
    assert first.startswith(b"# seed=7\n")
    header = first.splitlines()[1].decode()
    assert header == "sweep_value,analytic_bps_per_hz,empirical_bps_per_hz"


def test_seed_flag_overrides_config(cfg_path, tmp_path, capsys):
    args = ("sweep", "--mode", "mac", "--var", "theta", "--range", "0.4:1.2:2",
            "--with-sim", "--realizations", "10")
    assert run(cfg_path, tmp_path, *args) == 0
    base = (tmp_path / "sweep_mac_theta.csv").read_bytes()
    assert cli.main(["--config", str(cfg_path), "--out", str(tmp_path),
                     "--seed", "99", *args]) == 0
    reseeded = (tmp_path / "sweep_mac_theta.csv").read_bytes()
    assert reseeded != base
    assert reseeded.startswith(b"# seed=99\n")


def test_sweep_range_validation(cfg_path, tmp_path, capsys):
    assert run(cfg_path, tmp_path, "sweep", "--mode", "mc", "--var", "h",
               "--range", "500:100:5") == 2
    assert run(cfg_path, tmp_path, "sweep", "--mode", "mc", "--var", "h",
               "--range", "100:500:1") == 2
    assert run(cfg_path, tmp_path, "sweep", "--mode", "mc", "--var", "theta",
               "--range", "0.5:2.0:4") == 2  # beyond pi/2
    err = capsys.readouterr().err
    assert "config error" in err


def test_simulate_report_and_csv(cfg_path, tmp_path, capsys):
    assert run(cfg_path, tmp_path, "simulate", "--mode", "bc",
               "--altitude", "500", "--theta", str(math.pi / 10), "--csv") == 0
    report = parse_report(capsys.readouterr().out)
    assert float(report["relative_gap"]) <= 0.03
    lines = (tmp_path / "simulate_bc.csv").read_text().splitlines()
    assert lines[0] == "# seed=7"
    assert lines[1] == "realization_index,gt_count,value_bps_per_hz"
    assert len(lines) == 102


def test_simulate_single_realization_stderr_marker(cfg_path, tmp_path, capsys):
    assert run(cfg_path, tmp_path, "simulate", "--mode", "mc",
               "--realizations", "1") == 0
    report = parse_report(capsys.readouterr().out)
    assert report["empirical_stderr_bps_hz"] == "n/a"


def test_simulate_gap_exit(cfg_path, tmp_path, capsys):
    code = run(cfg_path, tmp_path, "simulate", "--mode", "bc",
               "--gap-tol", "1e-12")
    assert code == 3
    assert "exceeds tolerance" in capsys.readouterr().err


def test_plan_mc_summary_and_csv(cfg_path, tmp_path, capsys):
    assert run(cfg_path, tmp_path, "plan", "--mode", "mc") == 0
    report = parse_report(capsys.readouterr().out)
    assert float(report["completion_time_s"]) == pytest.approx(
        float(report["hover_total_s"]) + float(report["fly_time_s"]), rel=1e-12)
    lines = (tmp_path / "plan_mc.csv").read_text().splitlines()
    assert lines[0] == "cell_index,x_m,y_m,hover_s,cumulative_s"
    assert len(lines) == int(report["n_cells"]) + 1
    cumulative = [float(l.split(",")[-1]) for l in lines[1:]]
    assert cumulative == sorted(cumulative)
    assert cumulative[-1] <= float(report["completion_time_s"]) + 1e-9


def test_plan_speed_scales_fly_time(cfg_path, tmp_path, capsys):
    cfg = dict(BASE, theta_max_rad=0.9)  # keep several cells in the plan
    slow_p = tmp_path / "slow.json"
    slow_p.write_text(json.dumps(cfg))
    fast_p = tmp_path / "fast.json"
    fast_p.write_text(json.dumps(dict(cfg, uav_speed_mps=cfg["uav_speed_mps"] * 10)))
    assert run(slow_p, tmp_path, "plan", "--mode", "mc") == 0
    slow = parse_report(capsys.readouterr().out)
    assert run(fast_p, tmp_path, "plan", "--mode", "mc") == 0
    fast = parse_report(capsys.readouterr().out)
    assert float(fast["fly_time_s"]) == pytest.approx(
        float(slow["fly_time_s"]) / 10.0, rel=1e-12)
    assert fast["tour_length_m"] == slow["tour_length_m"]


def test_plan_refuses_absurd_cell_count(cfg_path, tmp_path, capsys):
    # the bc optimum shrinks cells to a few meters; planning 10^5 of them
    # is a config problem, not a tour to grind through
    assert run(cfg_path, tmp_path, "plan", "--mode", "bc") == 2
    err = capsys.readouterr().err
    assert "cells" in err and "config error" in err


def test_plan_requires_mission_keys(tmp_path, capsys):
    trimmed = {k: v for k, v in BASE.items() if k != "uav_speed_mps"}
    path = tmp_path / "trim.json"
    path.write_text(json.dumps(trimmed))
    assert run(path, tmp_path, "plan", "--mode", "mc") == 2
    assert "uav_speed_mps" in capsys.readouterr().err


def test_bad_config_field_named(tmp_path, capsys):
    path = tmp_path / "wide.json"
    path.write_text(json.dumps(dict(BASE, theta_max_rad=math.pi / 2)))
    assert run(path, tmp_path, "optimize", "--mode", "mc") == 2
    assert "theta_max_rad" in capsys.readouterr().err
