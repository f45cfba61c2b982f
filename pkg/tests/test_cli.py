import csv
import json

import pytest

from mixspec.cli import (
    EXIT_CONFIG,
    EXIT_FAIL,
    EXIT_INCONCLUSIVE,
    EXIT_PASS,
    atomic_write,
    main,
)
from mixspec.config import load_preset, parse_config
from mixspec.errors import ConfigError

MEASURE = {"plus": [{"s": 1.0, "w": 1.0}], "minus": [{"s": 0.0, "w": 1.0}], "s_bar": 0.5}


def write(tmp_path, obj, name="cfg.json"):
    p = tmp_path / name
    p.write_text(obj if isinstance(obj, str) else json.dumps(obj))
    return str(p)


def test_solve(tmp_path):
    cfg = write(tmp_path, {"domain": {"intervals": [[0, 1]], "n_per_unit": 512}, "measure": MEASURE, "k": 2})
    out = tmp_path / "out"
    assert main(["solve", "--config", cfg, "--out", str(out)]) == EXIT_PASS
    res = json.loads((out / "eigen_result.json").read_text())
    assert res["lambdas"][0] == pytest.approx(9.8696, abs=1e-3)
    rows = list(csv.reader((out / "eigenvectors.csv").open()))
    assert rows[0] == ["x", "component", "v1", "v2"]
    assert len(rows) == 512
    assert float(rows[1][2]) == float(repr(float(rows[1][2])))


def test_solve_preset(tmp_path, monkeypatch):
    out = tmp_path / "env_out"
    monkeypatch.setenv("MIXSPEC_OUT", str(out))
    from mixspec.config import preset_path

    assert main(["solve", "--config", str(preset_path("unit_interval")), "--out", "ignored"]) == EXIT_PASS
    assert (out / "eigen_result.json").exists()


def test_malformed_json(tmp_path, caplog):
    cfg = write(tmp_path, '{"domain": ')
    assert main(["solve", "--config", cfg]) == EXIT_CONFIG
    assert "line 1" in caplog.text


def test_k_exceeds_nodes(tmp_path, caplog):
    cfg = write(tmp_path, {"domain": {"intervals": [[0, 1]], "h": 0.125}, "measure": MEASURE, "k": 50})
    assert main(["solve", "--config", cfg, "--out", str(tmp_path)]) == EXIT_CONFIG
    assert "/k" in caplog.text


def test_structural_violation_located(tmp_path, caplog):
    bad = dict(MEASURE, minus=[{"s": 0.7, "w": 1.0}])
    cfg = write(tmp_path, {"domain": {"intervals": [[0, 1]], "h": 0.125}, "measure": bad})
    assert main(["solve", "--config", cfg, "--out", str(tmp_path)]) == EXIT_CONFIG
    assert "/measure" in caplog.text


def test_missing_config_flag():
    assert main(["solve"]) == EXIT_CONFIG
    assert main(["frobnicate"]) == EXIT_CONFIG


def test_verify_only_sign_change_connected(tmp_path):
    cfg = write(tmp_path, {"checks": [{"kind": "sign_change", "params": {"domain": [[0, 1]], "s_minus": 0.3, "h": 0.01}}]})
    assert main(["verify", "--config", cfg, "--only", "sign_change", "--out", str(tmp_path)]) == EXIT_CONFIG


def test_verify_tight_tolerance_fails(tmp_path):
    cfg = write(tmp_path, {"checks": [{"kind": "localization", "params": {
        "domain": [[0, 1]], "mu_plus": [[1, 1]], "eps_list": [0.2, 0.1, 0.05], "h": 0.0625, "tol_conv": 1e-9}}]})
    out = tmp_path / "o"
    assert main(["verify", "--config", cfg, "--out", str(out)]) == EXIT_FAIL
    summary = json.loads((out / "summary.json").read_text())
    assert summary["checks"] == [{"name": "localization", "verdict": "fail"}]


def test_verify_inconclusive_exit(tmp_path):
    cfg = write(tmp_path, {"checks": [{"kind": "simplicity_positivity", "params": {
        "domain": [[0, 1]], "s_minus": 0.4, "h": 0.0625, "gap_threshold": 1e9}}]})
    assert main(["verify", "--config", cfg, "--out", str(tmp_path)]) == EXIT_INCONCLUSIVE


def test_verify_bad_param_type(tmp_path, caplog):
    cfg = write(tmp_path, {"checks": [{"kind": "sign_change", "params": {"domain": [[-2, -1], [1, 2]], "s_minus": "x", "h": 0.1}}]})
    assert main(["verify", "--config", cfg, "--out", str(tmp_path)]) == EXIT_CONFIG
    assert "/checks/0/params" in caplog.text


def test_verify_threads_keep_order(tmp_path):
    checks = [{"name": f"sc{i}", "kind": "sign_change", "params": {"domain": [[-2, -1], [1, 2]], "s_minus": s, "h": 1 / 32}}
              for i, s in enumerate([0.5, 0.3, 0.1])]
    cfg = write(tmp_path, {"checks": checks})
    a, b = tmp_path / "a", tmp_path / "b"
    assert main(["verify", "--config", cfg, "--out", str(a)]) == EXIT_PASS
    assert main(["verify", "--config", cfg, "--out", str(b), "--threads", "3"]) == EXIT_PASS
    for name in ("summary.json", "sc0.json", "sc2.csv"):
        assert (a / name).read_bytes() == (b / name).read_bytes()


def test_sweep_symmetric_gap(tmp_path):
    from mixspec.config import preset_path

    out = tmp_path / "s"
    assert main(["sweep", "--config", str(preset_path("sweep_symmetric_gap")), "--out", str(out)]) == EXIT_PASS
    rows = list(csv.DictReader((out / "sweep.csv").open()))
    assert [float(r["parameter"]) for r in rows] == [0.5, 0.3, 0.2, 0.1, 0.05]
    assert all(float(r["gap"]) > 0 for r in rows)


def test_sweep_h_second_order(tmp_path):
    import math

    cfg = write(tmp_path, {"domain": {"intervals": [[0, 1]], "h": 0.1}, "measure": MEASURE, "k": 2,
                           "sweep": {"axis": "n_per_unit", "values": [64, 128, 256, 512, 1024]}})
    out = tmp_path / "s"
    assert main(["sweep", "--config", cfg, "--out", str(out)]) == EXIT_PASS
    lam = [float(r["lambda1"]) for r in csv.DictReader((out / "sweep.csv").open())]
    err = [abs(v - math.pi**2) for v in lam]
    assert all(math.log2(a / b) > 1.9 for a, b in zip(err, err[1:]))


def test_sweep_empty_axis(tmp_path):
    cfg = write(tmp_path, {"domain": {"intervals": [[0, 1]], "h": 0.125}, "measure": MEASURE,
                           "sweep": {"axis": "h", "values": []}})
    assert main(["sweep", "--config", cfg]) == EXIT_CONFIG


def test_sweep_requires_axis(tmp_path):
    cfg = write(tmp_path, {"domain": {"intervals": [[0, 1]], "h": 0.125}, "measure": MEASURE})
    assert main(["sweep", "--config", cfg]) == EXIT_CONFIG


@pytest.mark.parametrize("raw,pointer", [
    ([], "/"),
    ({"k": 0}, "/k"),
    ({"k": True}, "/k"),
    ({"domain": {"intervals": [[0, "a"]]}}, "/domain/intervals/0/1"),
    ({"sweep": {"axis": "temperature", "values": [1]}}, "/sweep/axis"),
    ({"checks": [{"kind": "nope"}]}, "/checks/0/kind"),
    ({"checks": [{"kind": "sign_change", "params": {"colour": 1}}]}, "/checks/0/params/colour"),
    ({"checks": [{"kind": "sign_change"}, {"kind": "sign_change"}]}, "/checks/1/name"),
])
def test_config_pointers(raw, pointer):
    with pytest.raises(ConfigError) as exc:
        parse_config(raw)
    assert exc.value.pointer == pointer


def test_preset_suite_declares_every_check():
    cfg = load_preset("verify_all")
    assert len(cfg.checks) >= 10
    assert {c.kind for c in cfg.checks} == {
        "localization", "simplicity_positivity", "sign_change", "union_inequality",
        "simplicity_scan", "classical_limit", "seminorm_lemmas", "boundary_growth",
    }


def test_atomic_write_leaves_no_temp(tmp_path):
    atomic_write(tmp_path / "sub" / "f.txt", "abc")
    assert (tmp_path / "sub" / "f.txt").read_text() == "abc"
    assert [p.name for p in (tmp_path / "sub").iterdir()] == ["f.txt"]


def test_verify_all_summary(verify_all):
    out = verify_all["out"]
    summary = json.loads((out / "summary.json").read_text())
    assert [c["name"] for c in summary["checks"]] == [c.name for c in load_preset("verify_all").checks]
    expected = EXIT_FAIL if any(c["verdict"] == "fail" for c in summary["checks"]) else EXIT_PASS
    assert verify_all["code"] == expected
