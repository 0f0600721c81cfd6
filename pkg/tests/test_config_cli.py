import json

import numpy as np
import pytest

from mindoc import cli
from mindoc.config import load_config, parse_config
from mindoc.errors import ConfigError
from mindoc.io import PROFILE_COLUMNS, read_profile_csv


def preset_dict(name):
    from importlib import resources

    return json.loads(resources.files("mindoc.presets").joinpath(f"{name}.json").read_text())


def test_efanx_preset_values():
    c = load_config("efanx_intl")
    af = c.airframe()
    assert af.wing_area == 77.3 and af.c_d0 == 0.028 and af.c_d2 == 0.026
    assert c.powertrain().tsfc_mass == 2.55e-5 and c.powertrain().beta == 0.25
    assert c.boundary.rf_m == 450e3 and c.boundary.initial_charge_c == 1516000
    assert c.tsfc_mode == "mass" and c.mode == "cruise"


def test_e430_preset_values():
    c = load_config("e430_city")
    assert c.boundary.initial_charge_c == 360000
    assert c.airframe().c_d2 == 0.009
    assert c.params().powertrain.beta == 1.0
    assert c.mode == "plan"


def test_lift_to_drag_fallback():
    d = preset_dict("e430_city")
    del d["aircraft"]["c_d2"]
    c = parse_config(d)
    assert c.airframe().c_d2 == pytest.approx(0.00911, abs=1e-5)


def test_beta_bound_error():
    d = preset_dict("efanx_intl")
    d["aircraft"]["beta"] = 1.5
    with pytest.raises(ConfigError, match="aircraft.beta"):
        parse_config(d, "x.json")


def test_unknown_key_rejected():
    d = preset_dict("efanx_intl")
    d["aircraft"]["wingspan"] = 10
    with pytest.raises(ConfigError, match="wingspan"):
        parse_config(d)


def test_boundary_mode_exclusive():
    d = preset_dict("efanx_intl")
    d["boundary"]["start_m"] = [0, 0]
    with pytest.raises(ConfigError):
        parse_config(d)


def test_parse_error_has_line(tmp_path):
    f = tmp_path / "bad.json"
    f.write_text('{\n  "schema": 1,\n  "name": \n}\n')
    with pytest.raises(ConfigError, match=r"bad.json:4:"):
        load_config(f)


def test_missing_file():
    with pytest.raises(ConfigError, match="no such file or preset"):
        load_config("nowhere.json")


def test_overrides_revalidate():
    c = load_config("efanx_intl").with_overrides(**{"aircraft.beta": 0.5, "costs.time_cost_per_s": None})
    assert c.powertrain().beta == 0.5
    with pytest.raises(ConfigError):
        load_config("efanx_intl").with_overrides(**{"aircraft.beta": -0.1})


def test_airspeed_extremes_of_beta():
    c = load_config("efanx_intl")
    jet = cli.run_airspeed(c.with_overrides(**{"aircraft.beta": 0.0}))
    elec = cli.run_airspeed(c.with_overrides(**{"aircraft.beta": 1.0}))
    assert jet.coefficients.a5 == 0.0 and jet.coefficients.a1 == 0.0
    assert elec.coefficients.a4 == 0.0 and elec.coefficients.a0 == 0.0
    assert jet.residual < 1e-10 and elec.residual < 1e-10


def test_cli_airspeed(capsys):
    assert cli.main(["airspeed", "--config", "e430_city"]) == 0
    out = capsys.readouterr().out
    assert "130.11" in out and "km/h" in out


def test_cli_sweep_monotone(tmp_path):
    assert cli.main(["airspeed", "--config", "efanx_intl", "--sweep-weight", "260000:430000:12", "--out", str(tmp_path)]) == 0
    rows = [ln.split(",") for ln in (tmp_path / "sweep.csv").read_text().splitlines()[2:]]
    v = np.array([float(r[1]) for r in rows])
    assert np.all(np.diff(v) > 0)


def test_cli_cruise_outputs(tmp_path):
    assert cli.main(["cruise", "--config", "efanx_intl", "--out", str(tmp_path)]) == 0
    summary = json.loads((tmp_path / "summary.json").read_text())
    assert summary["schema"] == 1
    for key in ("duration_s", "fuel_kg", "charge_ah", "total_doc_usd", "hourly_doc_usd_per_h"):
        assert summary[key] > 0
    lines = (tmp_path / "profile.csv").read_text().splitlines()
    assert lines[0].split(",") == list(PROFILE_COLUMNS)
    assert lines[1].startswith("# s,m,m/s,N,C")
    header, rows = read_profile_csv(tmp_path / "profile.csv")
    t = np.array([r[0] for r in rows])
    rate = np.array([r[6] for r in rows])
    assert np.sum(0.5 * (rate[1:] + rate[:-1]) * np.diff(t)) == pytest.approx(summary["total_doc_usd"], rel=1e-6)


def test_cruise_zero_length():
    d = preset_dict("efanx_intl")
    d["boundary"]["rf_m"] = 0
    prof = cli.run_cruise(parse_config(d))
    assert prof.summary.total_doc == 0.0 and len(prof.samples) == 1


def test_doubled_time_cost_flies_faster():
    d = preset_dict("efanx_intl")
    d["boundary"]["rf_m"] = 100e3
    base = cli.run_cruise(parse_config(d))
    d["costs"]["time_cost_per_s"] *= 2
    fast = cli.run_cruise(parse_config(d))
    n = min(len(base.samples), len(fast.samples))
    assert np.all(fast.airspeed[:n] > base.airspeed[:n])
    assert fast.summary.duration < base.summary.duration


def test_cli_weight_mode_exhausts_charge(capsys):
    assert cli.main(["cruise", "--config", "efanx_intl", "--tsfc-mode", "weight"]) == 2
    assert "exhausted" in capsys.readouterr().err


def test_cli_config_error_exit(tmp_path, capsys):
    d = preset_dict("efanx_intl")
    d["aircraft"]["beta"] = 1.5
    f = tmp_path / "c.json"
    f.write_text(json.dumps(d))
    assert cli.main(["cruise", "--config", str(f)]) == 1
    assert "beta" in capsys.readouterr().err


def test_cli_plan_error_exit(capsys):
    assert cli.main(["plan", "--config", "efanx_intl"]) == 1


def test_cli_plan_outputs_reproducible(tmp_path):
    a, b = tmp_path / "a", tmp_path / "b"
    for out in (a, b):
        assert cli.main(["plan", "--config", "e430_city", "--out", str(out), "--recost-fuel", "--sfc", "1.1e-5"]) == 0
    for name in ("path.json", "world.json"):
        assert (a / name).read_bytes() == (b / name).read_bytes()
    doc = json.loads((a / "path.json").read_text())
    assert doc["recost_fuel"]["ratio_to_planned_doc"] > 6
    assert len(doc["edges"]) == len(doc["waypoints_m"]) - 1
    assert (a / "waypoints.csv").read_text().startswith("index,x,y,r,t,v,W,Q\n# -,m,m,m,s,m/s,N,C")


def test_cli_plan_failure_exit(tmp_path, capsys):
    d = preset_dict("e430_city")
    d["planner"]["n_samples"] = 1
    d["planner"]["steer_step_m"] = 10
    f = tmp_path / "c.json"
    f.write_text(json.dumps(d))
    assert cli.main(["plan", "--config", str(f)]) == 3
    assert "nodes" in capsys.readouterr().err


def test_cli_citygen(tmp_path):
    assert cli.main(["citygen", "--seed", "4", "--out", str(tmp_path / "a")]) == 0
    assert cli.main(["citygen", "--seed", "5", "--out", str(tmp_path / "b")]) == 0
    assert cli.main(["citygen", "--seed", "4", "--n-buildings", "0", "--out", str(tmp_path / "c")]) == 0
    a = json.loads((tmp_path / "a" / "world.json").read_text())
    b = json.loads((tmp_path / "b" / "world.json").read_text())
    c = json.loads((tmp_path / "c" / "world.json").read_text())
    assert a.keys() == b.keys() and a["obstacles"] != b["obstacles"]
    assert len(a["obstacles"]) == 500 and c["obstacles"] == []


def test_world_file_config(tmp_path):
    assert cli.main(["citygen", "--seed", "1", "--n-buildings", "100", "--out", str(tmp_path)]) == 0
    d = preset_dict("e430_city")
    del d["planner"]["city"]
    d["planner"]["world_file"] = "world.json"
    (tmp_path / "c.json").write_text(json.dumps(d))
    assert cli.main(["plan", "--config", str(tmp_path / "c.json"), "--samples", "120"]) == 0
