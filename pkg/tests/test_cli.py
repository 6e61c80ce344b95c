import csv
import json

import pytest

from froblab.cli import CSV_COLUMNS, main


def run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_socle_growth_csv(tmp_path, capsys):
    path = tmp_path / "report.csv"
    code, out, _ = run(["socle-growth", "--p", "2", "--n-max", "3", "--out", str(path)], capsys)
    assert code == 0
    rows = list(csv.DictReader(path.open()))
    assert list(rows[0]) == CSV_COLUMNS
    dims = [r for r in rows if r["claim_id"] == "socle-dim"]
    assert [r["n"] for r in dims] == ["1", "2", "3"]
    assert all(r["pass"] == "true" for r in rows if r["assert"])
    assert "ratio=" in out


def test_thm32_prints_ratio_rows(capsys):
    code, out, _ = run(["thm32", "--p", "2", "--n-max", "2"], capsys)
    assert code == 0
    ratios = [r for r in csv.DictReader(out.splitlines()) if r["claim_id"] == "L-length"]
    assert [(r["ratio_num"], r["ratio_den"]) for r in ratios] == [("5", "2"), ("13", "4")]


def test_invalid_prime(capsys):
    code, _, err = run(["socle-growth", "--p", "4"], capsys)
    assert code == 2 and "usage" in err


@pytest.mark.parametrize("argv", [["nope"], ["socle-growth", "--bogus"], ["tor-growth", "--n-max", "-1"],
                                  ["chi-inf", "--format", "xml"], []])
def test_usage_errors(argv, capsys):
    assert run(argv, capsys)[0] == 2


def test_budget_exhaustion_exit(capsys, monkeypatch):
    monkeypatch.setenv("FROBLAB_BUDGET", "100")
    code, _, err = run(["socle-growth", "--p", "2"], capsys)
    assert code == 2 and "partial" in err
    code, _, _ = run(["socle-growth", "--p", "2", "--n-max", "2", "--budget", "1000"], capsys)
    assert code == 0


def test_failure_exit_code(capsys, monkeypatch):
    from froblab import experiments as ex
    orig = ex.socle

    def broken(A):
        d, b = orig(A)
        return 0, b
    monkeypatch.setattr(ex, "socle", broken)
    code, _, err = run(["socle-growth", "--p", "2", "--n-max", "1", "--no-verify"], capsys)
    assert code == 1 and "socle-bound" in err


def test_json_matches_csv(capsys):
    _, c, _ = run(["tor-growth", "--p", "3", "--n-max", "1"], capsys)
    _, j, _ = run(["tor-growth", "--p", "3", "--n-max", "1", "--format", "json"], capsys)
    data = json.loads(j)
    rows = list(csv.DictReader(c.splitlines()))
    assert len(rows) == len(data["rows"])
    for r, rec in zip(rows, data["rows"]):
        for k in CSV_COLUMNS:
            v = rec[k]
            want = "" if v is None else ("true" if v is True else "false" if v is False else str(v))
            assert r[k] == want
    assert data["summary"]["failed"] == 0 and data["summary"]["passed"] == data["summary"]["assertions"]


def test_config_file(tmp_path, capsys):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"p": 3, "n_max": 1, "format": "json"}))
    code, out, _ = run(["chi-inf", "--config", str(cfg)], capsys)
    assert code == 0 and json.loads(out)["rows"][0]["p"] == 3
    cfg.write_text(json.dumps({"colour": 1}))
    assert run(["chi-inf", "--config", str(cfg)], capsys)[0] == 2


@pytest.mark.parametrize("cmd", ["remark25", "codim-bounds", "regular-check", "chi-inf"])
def test_other_subcommands(cmd, capsys):
    argv = [cmd, "--p", "2", "--n-max", "1"] + (["--t", "2"] if cmd == "remark25" else [])
    assert run(argv, capsys)[0] == 0


def test_deterministic_output(capsys):
    a = run(["codim-bounds", "--p", "3", "--n-max", "1"], capsys)[1]
    b = run(["codim-bounds", "--p", "3", "--n-max", "1"], capsys)[1]
    assert a == b
