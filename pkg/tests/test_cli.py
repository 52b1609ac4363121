import io
import json

from weil2.cli import CSV_HEADER, main, run_verify


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_classify_json(capsys):
    code, out, _ = run_cli(capsys, "classify", "--q", "5", "--a", "8", "--b", "26", "--format", "json")
    assert code == 0
    rec = json.loads(out)
    assert rec["jacobian"] is False
    assert rec["order"] == 100 and rec["c"] == 4
    assert rec["s"] == -4 and rec["t"] == -4


def test_classify_table(capsys):
    code, out, _ = run_cli(capsys, "classify", "--q", "13", "--a", "9", "--b", "42")
    assert code == 0
    row = out.splitlines()[1].split()
    assert row[:3] == ["13", "9", "42"]
    assert "338" in row and "true" in row


def test_classify_invalid_q(capsys):
    code, _, err = run_cli(capsys, "classify", "--q", "12", "--a", "0", "--b", "0")
    assert code == 2
    assert "error" in err


def test_enumerate_csv(capsys):
    code, out, _ = run_cli(capsys, "enumerate", "--q", "2", "--format", "csv")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == CSV_HEADER
    assert len(lines) == 9
    assert lines[-1].startswith("2,3,6,")
    # csv roundtrips through its header
    keys = lines[0].split(",")
    rec = dict(zip(keys, lines[1].split(",")))
    assert rec["q"] == "2" and rec["a"] == "-2" and rec["jacobian"] == "false"


def test_enumerate_json_deterministic(capsys):
    code, out1, _ = run_cli(capsys, "enumerate", "--q", "9", "--format", "json")
    assert code == 0
    code, out2, _ = run_cli(capsys, "enumerate", "--q", "9", "--format", "json")
    assert out1 == out2
    recs = [json.loads(line) for line in out1.splitlines()]
    assert [(r["a"], r["b"]) for r in recs] == [(-2, 19), (-1, 9), (0, -1), (1, -11), (6, 20)]
    assert all(set(r) >= {"q", "a", "b", "admissible", "order", "c", "jacobian"} for r in recs)


def test_enumerate_k1(capsys):
    code, out, _ = run_cli(capsys, "enumerate", "--q", "3", "--k", "1", "--format", "csv")
    assert code == 0
    k1 = len(out.splitlines()) - 1
    code, out2, _ = run_cli(capsys, "enumerate", "--q", "3", "--format", "csv")
    assert k1 > len(out2.splitlines()) - 1
    code, _, _ = run_cli(capsys, "enumerate", "--q", "3", "--k", "0")
    assert code == 2


def test_census_cmd(capsys, tmp_path, monkeypatch):
    monkeypatch.delenv("WEIL_CACHE_DIR", raising=False)
    code, out, err = run_cli(capsys, "census", "--q", "2", "--cache", str(tmp_path))
    assert code == 0
    assert "768 models" in out and "20 distinct" in out
    assert "(1,0): realized" in out
    assert "(0,3): absent" in out
    assert "wall time" in err
    # identical stdout from the cached rerun
    code, out2, _ = run_cli(capsys, "census", "--q", "2", "--cache", str(tmp_path))
    assert out2.replace("[cache:", "[computed:") == out


def test_census_env_override(capsys, tmp_path, monkeypatch):
    monkeypatch.setenv("WEIL_CACHE_DIR", str(tmp_path / "envdir"))
    code, out, _ = run_cli(capsys, "census", "--q", "2", "--cache", str(tmp_path / "flagdir"))
    assert code == 0
    assert (tmp_path / "envdir" / "census-q2.jsonl").exists()
    assert not (tmp_path / "flagdir").exists()


def test_census_unsupported(capsys):
    code, _, err = run_cli(capsys, "census", "--q", "11")
    assert code == 2
    code, _, err = run_cli(capsys, "census", "--q", "13")
    assert code == 2 and "heavy" in err


def test_verify_shallow(capsys):
    code, out, _ = run_cli(capsys, "verify", "--qmax", "30")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 4
    assert all(": OK" in l or l.endswith("OK") for l in lines)
    assert "q<=30" in lines[0]


def test_run_verify_reports_first_failure(monkeypatch):
    import weil2.cli as cli

    monkeypatch.setattr(cli, "check_delta_spots", lambda: (False, "boom"))
    buf = io.StringIO()
    code = run_verify(10, False, None, 1, buf)
    assert code == 1
    lines = buf.getvalue().splitlines()
    assert lines[-1].endswith("FAIL: boom")
    assert len(lines) == 3  # two passing checks, then the failure stops the run
