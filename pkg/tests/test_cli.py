import csv
import json

import pytest

from qudit_polar.cli import main


def run(tmp_path, *argv, sub="out"):
    out = tmp_path / sub
    code = main([*argv, "--out-dir", str(out)])
    return code, out


def test_group_audit_d2(tmp_path, capsys):
    code, out = run(tmp_path, "group-audit", "--d", "2")
    assert code == 0
    rep = json.loads((out / "group_audit.json").read_text())
    assert rep["clifford_1"] == 24 and rep["clifford_2"] == 11520 and rep["pass"]
    assert json.loads(capsys.readouterr().out)["status"] == "ok"
    man = json.loads((out / "manifest.json").read_text())
    assert man["artifacts"] == ["group_audit.json"]
    assert man["config"]["d"] == 2 and man["schema_version"] == 1


def test_coset_build_d3(tmp_path):
    code, out = run(tmp_path, "coset-build", "--d", "3")
    assert code == 0
    rep = json.loads((out / "cosets.json").read_text())
    assert rep["cosets"] == 90 and rep["reduced"] == 88
    with (out / "cosets.csv").open(newline="") as fh:
        rows = list(csv.DictReader(fh))
    assert len(rows) == 90


def test_polarize_is_byte_reproducible(tmp_path):
    argv = ["polarize", "--d", "3", "--n", "4", "--seed", "7", "--method", "mc", "--samples", "10000"]
    _, a = run(tmp_path, *argv, sub="a")
    _, b = run(tmp_path, *argv, sub="b")
    assert (a / "polarize.csv").read_bytes() == (b / "polarize.csv").read_bytes()
    assert (a / "manifest.json").read_bytes().replace(b"/a", b"/b") == (b / "manifest.json").read_bytes()
    with (a / "polarize.csv").open(newline="") as fh:
        rows = list(csv.DictReader(fh))
    assert list(rows[0]) == ["index", "bit-path", "I_quantum", "Z_estimate", "stderr", "method"]
    assert len(rows) == 16 and rows[5]["bit-path"] == "0101"


def test_polarize_exact_small(tmp_path):
    code, out = run(tmp_path, "polarize", "--d", "2", "--n", "2", "--channel", "dephasing", "--p", "0.2")
    assert code == 0
    rep = json.loads((out / "polarize.json").read_text())
    assert rep["method"] == "exact"
    assert rep["base_channel"] == {"family": "dephasing", "p": 0.2}


def test_config_file_and_flag_override(tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"d": 3, "n": 2, "seed": 4, "base_channel": {"family": "depolarizing", "p": 0.05}}))
    code, out = run(tmp_path, "polarize", "--config", str(cfg), "--seed", "5")
    assert code == 0
    man = json.loads((out / "manifest.json").read_text())
    assert man["config"]["d"] == 3 and man["config"]["seed"] == 5
    assert man["config"]["base_channel"]["p"] == 0.05


def test_unknown_config_key_rejected(tmp_path, capsys):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"d": 3, "nonsense": 1}))
    code, _ = run(tmp_path, "group-audit", "--config", str(cfg))
    assert code == 2
    err = json.loads(capsys.readouterr().err)
    assert err["status"] == "error" and "nonsense" in err["message"]


@pytest.mark.parametrize("argv", [
    ["group-audit", "--d", "4"],
    ["polarize", "--d", "2", "--n", "2", "--channel", "depolarizing", "--p", "1.5"],
    ["twirl-check", "--d", "5", "--set", "reduced"],
    ["group-audit", "--config", "/nonexistent/cfg.json"],
])
def test_errors_exit_2_with_report(tmp_path, capsys, argv):
    code, _ = run(tmp_path, *argv)
    assert code == 2
    err = json.loads(capsys.readouterr().err)
    assert err["status"] == "error" and err["command"] == argv[0]


def test_decode_sim(tmp_path):
    code, out = run(tmp_path, "decode-sim", "--d", "2", "--n", "3", "--p", "0.02", "--trials", "200",
                    "--rate", "0.5", "--method", "exact")
    assert code == 0
    rep = json.loads((out / "decode_sim.json").read_text())
    assert rep["rate"] == 0.5 and len(rep["frozen"]) == 4 and 0 <= rep["fer"] <= 1
    with (out / "decode_trials.csv").open(newline="") as fh:
        rows = list(csv.DictReader(fh))
    assert len(rows) == 200 and set(r["success"] for r in rows) <= {"0", "1"}


def test_twirl_and_bound_commands(tmp_path):
    code, out = run(tmp_path, "twirl-check", "--d", "2", "--set", "reduced", "--maps", "2", sub="t")
    assert code == 0
    rep = json.loads((out / "twirl_check.json").read_text())
    assert rep["set_size"] == 18 and not rep["pass"]
    code, out = run(tmp_path, "lemma-check", "--d", "2", "--channels", "5", sub="l")
    assert code == 0
    rep = json.loads((out / "lemma_check.json").read_text())
    assert rep["bound_violations"] == 0 and rep["bound_checks"] == 10
