"""Batch driver: exit codes, deterministic reports, object emission."""

import json
from fractions import Fraction

import pytest

from snbethe.cli import build_parser, config_from_args, main

F = Fraction


def run_main(capsys, argv):
    rc = main(argv)
    out = capsys.readouterr().out
    return rc, out


def test_run_all_smallest_scale(capsys):
    rc, out = run_main(capsys, ["run", "all", "--n", "2"])
    assert rc == 0
    assert "FAIL" not in out.replace("CONJECTURE-FAIL", "")
    assert "suite all" in out


def test_json_reports_byte_identical(capsys, tmp_path):
    argv = ["run", "identities-gaudin", "--n", "2", "--format", "json",
            "--seed", "7"]
    rc1, out1 = run_main(capsys, argv)
    rc2, out2 = run_main(capsys, argv)
    assert rc1 == rc2 == 0
    assert out1 == out2
    payload = json.loads(out1)
    assert payload["suite"] == "identities-gaudin"
    assert all(c["runtime_ms"] == 0 for c in payload["checks"])
    checks = [c["check"] for c in payload["checks"]]
    assert checks == sorted(checks)


def test_output_file_and_out_dir(capsys, tmp_path, monkeypatch):
    monkeypatch.setenv("SNBETHE_OUT_DIR", str(tmp_path))
    rc = main(["run", "identities-gaudin", "--n", "2", "--format", "json",
               "--out", "report.json"])
    assert rc == 0
    data = json.loads((tmp_path / "report.json").read_text())
    assert data["summary"]["fail"] == 0


def test_invalid_config_exit_codes(capsys):
    rc, _ = run_main(capsys, ["run", "all", "--n", "0"])
    assert rc == 2
    rc, _ = run_main(capsys, ["run", "all", "--n", "9"])
    assert rc == 2  # hard cap without the override flag
    rc, _ = run_main(capsys, ["run", "all", "--n", "3", "--z", "0,1"])
    assert rc == 2  # wrong parameter count
    rc, _ = run_main(capsys, ["run", "all", "--n", "3", "--lambda", "2,2"])
    assert rc == 2  # partition size mismatch


def test_config_file_mirrors_flags(capsys, tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"n": 2, "z": "0,1", "seed": 99}))
    rc, out = run_main(capsys, ["run", "identities-gaudin", "--config", str(cfg)])
    assert rc == 0


def test_emit_theta(capsys):
    rc, out = run_main(capsys, ["emit", "theta", "--k", "2"])
    assert rc == 0
    payload = json.loads(out)
    # (s23 s12 - s12 s23 - 1)/2 in one-line JSON form
    want = [
        {"perm": [1, 2, 3], "coeff": "-1/2"},
        {"perm": [2, 3, 1], "coeff": "-1/2"},
        {"perm": [3, 1, 2], "coeff": "1/2"},
    ]
    assert payload == want


def test_emit_kz(capsys):
    rc, out = run_main(capsys, ["emit", "kz", "--n", "2", "--z", "0,1"])
    assert rc == 0
    payload = json.loads(out)
    assert payload == [
        [{"perm": [2, 1], "coeff": "-1/1"}],
        [{"perm": [2, 1], "coeff": "1/1"}],
    ]


def test_emit_charges(capsys):
    rc, out = run_main(capsys, ["emit", "charges", "--n", "4"])
    assert rc == 0
    payload = json.loads(out)
    assert len(payload) == 2  # two charges at n = 4
    # the first charge is the cyclic window sum: the four "adjacent" swaps
    first = payload[0]
    assert len(first) == 4
    assert all(term["coeff"] == "1/1" for term in first)


def test_emit_phi_and_idempotents(capsys):
    rc, out = run_main(capsys, ["emit", "phi", "--n", "2", "--z", "0,1"])
    assert rc == 0
    payload = json.loads(out)
    assert payload["1,0"] == [{"perm": [1, 2], "coeff": "2/1"}]
    rc, out = run_main(capsys, ["emit", "idempotents", "--n", "2"])
    payload = json.loads(out)
    assert payload["2"] == [
        {"perm": [1, 2], "coeff": "1/2"},
        {"perm": [2, 1], "coeff": "1/2"},
    ]


def test_emit_rejects_bad_values(capsys):
    rc, _ = run_main(capsys, ["emit", "kz", "--n", "2", "--z", "1,1"])
    assert rc == 2


def test_parser_rejects_unknown_suite():
    with pytest.raises(SystemExit):
        build_parser().parse_args(["run", "nonsense"])


def test_strict_flag_plumbs_through():
    args = build_parser().parse_args(["run", "all", "--strict", "--slow"])
    cfg = config_from_args(args)
    assert cfg.strict and cfg.slow
    assert cfg.n == 3 and len(cfg.z) == 3
