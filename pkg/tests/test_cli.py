import json
import math

import pytest

from nonscatter.cli import main, parse_scenario, serialize_scenario
from nonscatter.errors import ConfigError

ELLIPSE = {"builtin": "ellipse", "params": [2, 1]}
PLANE0 = {"kind": "plane", "alpha": 0.0}


def run(tmp_path, command, cfg, out="out", extra=()):
    cfg_path = tmp_path / "cfg.json"
    cfg_path.write_text(json.dumps(cfg))
    argv = [command, "--config", str(cfg_path)]
    if out is not None:
        argv += ["--out", str(tmp_path / out)]
    argv += list(extra)
    rc = main(argv)
    return rc, (tmp_path / out if out is not None else None)


def read_json(d, name):
    return json.loads((d / name).read_text())


def test_scenario_round_trip():
    cfg = {
        "version": 1,
        "k": 1.5,
        "q": 3.0,
        "domain": {"a1": [0.0, 1.0, 0.25], "b1": [0.0, 0.1], "a2": [], "b2": [0.0, 0.9]},
        "wave": {"kind": "herglotz", "psi": {"-2": [0.1, 0.0], "0": [1.0, -0.5]}},
        "lambda_grid": [1.0, 2.0, 4.0],
        "p": 2.5,
        "g0": [0.25, -1.0],
        "quad": {"mode": "panel_gauss", "nodes": 48, "tol": 1e-9},
        "contour": True,
        "levelset": {"rect": [[-3.0, 3.0], [0.0, 1.0]], "nr": 101, "ns": 81},
        "disk": {"mode": "compare", "n": 2},
        "out": "artifacts",
    }
    s = parse_scenario(cfg)
    again = parse_scenario(serialize_scenario(s))
    assert again == s
    assert s.g0 == complex(0.25, -1.0)
    assert s.wave == ("herglotz", ((-2, 0.1, 0.0), (0, 1.0, -0.5)))

    minimal = parse_scenario({"version": 1, "k": 1.0, "q": 2.0})
    assert parse_scenario(serialize_scenario(minimal)) == minimal


def test_scenario_validation_errors():
    base = {"version": 1, "k": 1.0, "q": 2.0}
    bad = [
        {"version": 2, "k": 1.0, "q": 2.0},
        {"version": 1, "q": 2.0},
        {"version": 1, "k": -1.0, "q": 2.0},
        {"version": 1, "k": 1.0, "q": 1.0},
        dict(base, wave={"kind": "spiral"}),
        dict(base, wave={"kind": "herglotz", "psi": {}}),
        dict(base, domain={"corner": {"theta": 0.5}}),
        dict(base, disk={"n": 0}),
        dict(base, g0="elsewhere"),
        dict(base, lambda_grid=["x"]),
        dict(base, quad={"tol": 1e-20}),
        dict(base, levelset={"rect": [1, 2]}),
    ]
    for cfg in bad:
        with pytest.raises(ConfigError):
            parse_scenario(cfg)


def test_analyze_ellipse(tmp_path):
    rc, out = run(tmp_path, "analyze", {"version": 1, "k": 1.0, "q": 2.0, "domain": ELLIPSE, "wave": PLANE0})
    assert rc == 0
    rep = read_json(out, "report.json")
    assert rep["verdict"] == "ScattersByC1"
    assert rep["order"] == 1.5
    c1 = complex(*rep["C1"])
    assert abs(c1 - (-1.480675214330743 + 1.6261608820443285j)) < 1e-10


def test_analyze_cardioid(tmp_path):
    rc, out = run(tmp_path, "analyze", {"version": 1, "k": 1.0, "q": 2.0, "domain": {"builtin": "cardioid"}, "wave": PLANE0})
    assert rc == 0
    rep = read_json(out, "report.json")
    assert rep["verdict"] == "ScattersByC2"
    c2 = complex(*rep["C2"])
    assert abs(c2 - 3j * math.sqrt(math.pi / 2)) < 1e-10


def test_analyze_inconclusive_exit_code(tmp_path):
    cfg = {
        "version": 1,
        "k": 5.541265601296353,
        "q": 2.0,
        "domain": {"builtin": "ellipse", "params": [1.4883717401985064, 1.0]},
        "wave": {"kind": "harmonic", "n": 6},
    }
    rc, out = run(tmp_path, "analyze", cfg)
    assert rc == 3
    assert read_json(out, "report.json")["verdict"] == "Inconclusive"


def test_analyze_circle_has_no_saddle(tmp_path):
    cfg = {"version": 1, "k": 1.0, "q": 2.0, "domain": {"builtin": "circle", "params": [1.0]}, "wave": PLANE0}
    rc, out = run(tmp_path, "analyze", cfg)
    assert rc == 4
    assert not (out / "report.json").exists()
    rc2, _ = run(tmp_path, "levelset", cfg, out="out2")
    assert rc2 == 4


def test_levelset_artifacts(tmp_path):
    cfg = {"version": 1, "k": 1.0, "q": 2.0, "contour": True, "domain": ELLIPSE}
    rc, out = run(tmp_path, "levelset", cfg)
    assert rc == 0
    grid = (out / "grid.csv").read_text()
    lines = grid.strip().split("\n")
    assert lines[0] == "r,s,value"
    r, s, v = lines[1].split(",")
    float(r), float(s), float(v)
    assert "np.float64" not in grid
    svg = (out / "level.svg").read_text()
    assert svg.startswith("<svg") and "polyline" in svg and 'stroke="blue"' in svg


def test_sweep_artifacts(tmp_path):
    cfg = {
        "version": 1,
        "k": 1.0,
        "q": 2.0,
        "domain": ELLIPSE,
        "wave": PLANE0,
        "lambda_grid": [4, 8, 12, 16, 20],
        "p": 1.5,
        "g0": "saddle",
        "contour": True,
    }
    rc, out = run(tmp_path, "sweep", cfg)
    assert rc == 0
    csv = (out / "sweep.csv").read_text().strip().split("\n")
    assert csv[0] == "lambda,re_I,im_I,re_resid,im_resid,nodes_used"
    assert len(csv) == 6
    fit = read_json(out, "sweep_fit.json")
    assert fit["n_records"] == 5 and fit["p"] == 1.5
    assert set(fit["fit"]) == {"limit", "order"}


def test_disk_roots_and_wronskian(tmp_path):
    rc, out = run(tmp_path, "disk", {"version": 1, "k": 1.0, "q": 4.0, "disk": {"mode": "roots", "n": 0, "k_max": 20}})
    assert rc == 0
    rows = (out / "disk.csv").read_text().strip().split("\n")
    assert rows[0] == "k,abs_C"
    assert len(rows) == 7
    k1, a1 = rows[1].split(",")
    assert abs(float(k1) - 3.384194839559467) < 1e-9
    assert float(a1) <= 1e-9

    rc2, out2 = run(
        tmp_path,
        "disk",
        {"version": 1, "k": 3.384194839559467, "q": 4.0, "disk": {"mode": "wronskian", "n": 0}},
        out="out2",
    )
    assert rc2 == 0
    n, k, re, im = (out2 / "disk.csv").read_text().strip().split("\n")[1].split(",")
    assert int(n) == 0 and abs(float(re)) < 1e-9 and float(im) == 0.0


def test_disk_compare_modes(tmp_path):
    rc, out = run(
        tmp_path,
        "disk",
        {"version": 1, "k": 1.0, "q": 4.0, "wave": {"kind": "plane", "alpha": 0.3},
         "lambda_grid": [0, 1, 2, 5], "disk": {"mode": "compare", "alpha": 0.3}},
    )
    assert rc == 0
    for row in (out / "disk.csv").read_text().strip().split("\n")[1:]:
        assert float(row.split(",")[5]) < 1e-8

    rc2, out2 = run(
        tmp_path,
        "disk",
        {"version": 1, "k": 3.0, "q": 4.0, "wave": {"kind": "harmonic", "n": 2},
         "lambda_grid": [1, 3], "disk": {"mode": "compare", "n": 2}},
        out="out2",
    )
    assert rc2 == 0
    for row in (out2 / "disk.csv").read_text().strip().split("\n")[1:]:
        assert float(row.split(",")[5]) < 1e-8


def test_corner_command(tmp_path):
    cfg = {
        "version": 1,
        "k": 1.0,
        "q": 2.0,
        "domain": {"corner": {"theta": math.pi / 6, "a1": -0.7, "a2": -0.7}},
        "wave": PLANE0,
        "lambda_grid": [20, 40, 60],
    }
    rc, out = run(tmp_path, "corner", cfg)
    assert rc == 0
    rep = read_json(out, "corner.json")
    assert rep["verdict"] == "ScattersAtCorner"
    assert abs(complex(*rep["C"]) - math.sqrt(3) / 2) < 1e-12
    assert (out / "corner.csv").read_text().startswith("lambda,")


def test_oracle_command(tmp_path):
    cfg = {
        "version": 1,
        "k": 1.0,
        "q": 2.0,
        "domain": {"builtin": "cardioid"},
        "wave": {"kind": "harmonic", "n": 2},
        "lambda_grid": [1, 5],
    }
    rc, out = run(tmp_path, "oracle", cfg)
    assert rc == 0
    rows = (out / "oracle.csv").read_text().strip().split("\n")
    assert rows[0] == "lambda,re_I_scaled,im_I_scaled,re_area,im_area,rel_gap"
    for row in rows[1:]:
        assert float(row.split(",")[5]) < 1e-8


def test_bad_config_exit_codes(tmp_path):
    rc, _ = run(tmp_path, "analyze", {"version": 1, "k": -1.0, "q": 2.0})
    assert rc == 2
    # unreadable file
    assert main(["analyze", "--config", str(tmp_path / "missing.json")]) == 2
    broken = tmp_path / "broken.json"
    broken.write_text("{not json")
    assert main(["analyze", "--config", str(broken)]) == 2
    # wrong domain type for the command
    rc2, _ = run(tmp_path, "corner", {"version": 1, "k": 1.0, "q": 2.0, "domain": ELLIPSE, "wave": PLANE0}, out="o3")
    assert rc2 == 2


def test_numerical_failure_exit_code(tmp_path):
    cfg = {
        "version": 1,
        "k": 1.0,
        "q": 2.0,
        "domain": {"builtin": "cardioid"},
        "wave": PLANE0,
        "lambda_grid": [1000],
        "p": 2.5,
        "g0": "saddle",
        "contour": True,
        "quad": {"tol": 1e-13},
    }
    rc, _ = run(tmp_path, "sweep", cfg)
    assert rc == 5


def test_quad_overrides(tmp_path):
    cfg = {"version": 1, "k": 1.0, "q": 2.0, "domain": {"builtin": "cardioid"}, "wave": {"kind": "harmonic", "n": 2}, "lambda_grid": [1, 5]}
    rc, _ = run(tmp_path, "oracle", cfg, extra=["--nodes", "64", "--tol", "1e-9"])
    assert rc == 0
    rc2, _ = run(tmp_path, "oracle", cfg, out="o2", extra=["--tol", "1e-20"])
    assert rc2 == 2


def test_stdout_mode(tmp_path, capsys):
    cfg = {"version": 1, "k": 2.0, "q": 4.0, "disk": {"mode": "wronskian", "n": 1}}
    p = tmp_path / "c.json"
    p.write_text(json.dumps(cfg))
    assert main(["disk", "--config", str(p)]) == 0
    got = capsys.readouterr().out
    assert got.startswith("# disk.csv\n")
    assert got.splitlines()[1] == "n,k,re_C,im_C"


def test_artifacts_deterministic(tmp_path):
    jobs = [
        ("analyze", {"version": 1, "k": 1.0, "q": 2.0, "domain": ELLIPSE, "wave": PLANE0}, ["report.json"]),
        ("levelset", {"version": 1, "k": 1.0, "q": 2.0, "contour": True, "domain": ELLIPSE}, ["grid.csv", "level.svg"]),
        (
            "sweep",
            {"version": 1, "k": 1.0, "q": 2.0, "domain": ELLIPSE, "wave": PLANE0,
             "lambda_grid": [4, 8, 12, 16], "p": 1.5, "g0": "saddle", "contour": True},
            ["sweep.csv", "sweep_fit.json"],
        ),
        (
            "corner",
            {"version": 1, "k": 1.0, "q": 2.0, "domain": {"corner": {"theta": 0.5235987755982988, "a1": -0.7, "a2": -0.7}},
             "wave": PLANE0, "lambda_grid": [20, 40]},
            ["corner.csv", "corner.json"],
        ),
    ]
    for cmd, cfg, names in jobs:
        rc1, out1 = run(tmp_path, cmd, cfg, out=f"{cmd}_a")
        rc2, out2 = run(tmp_path, cmd, cfg, out=f"{cmd}_b")
        assert rc1 == rc2 == 0
        for name in names:
            assert (out1 / name).read_bytes() == (out2 / name).read_bytes(), (cmd, name)


def test_unknown_command_rejected():
    with pytest.raises(SystemExit):
        main(["transmogrify", "--config", "x.json"])
