import json
import subprocess
import sys

import pytest

from mehr.cli import run_cli


def fig8_csv(tmp_path):
    path = tmp_path / "fig8.csv"
    path.write_text("x,y\n3,4\n8,6\n1,9\n9,1\n0,0\n10,10\n")
    return path


def fig6_csv(tmp_path):
    path = tmp_path / "fig6.csv"
    path.write_text("v\n0\n0.25\n0.5\n0.75\n1\n")
    return path


def test_json_happy_path(tmp_path, capsys):
    assert run_cli(["--input", str(fig8_csv(tmp_path)), "--stop", "300"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["max"]["volume"] == 0.5
    assert doc["max"]["rule"] == "x in [3.0, 8.0]"
    assert doc["dataset"]["rows_used"] == 6
    assert doc["config"]["strategy"] == 3
    assert len(doc["bounding_frequencies"]) == 2


def test_json_round_trips(tmp_path, capsys):
    run_cli(["--input", str(fig8_csv(tmp_path)), "--stop", "50"])
    out = capsys.readouterr().out
    assert json.dumps(json.loads(out), indent=2) + "\n" == out


def test_rules_format(tmp_path, capsys):
    assert run_cli(["--input", str(fig6_csv(tmp_path)), "--format", "rules", "--top", "2", "--stop", "100"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines == ["1\tvolume=0.25\tv in [0.0, 0.25]", "2\tvolume=0.25\tv in [0.25, 0.5]"]


def test_csv_format(tmp_path, capsys):
    run_cli(["--input", str(fig6_csv(tmp_path)), "--format", "csv", "--stop", "100"])
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "rank,volume,v_low,v_high"
    assert lines[1] == "1,0.25,0.0,0.25"
    assert len(lines) == 5


def without_wall_time(text):
    doc = json.loads(text)
    doc["stats"].pop("wall_ms")
    return doc


def test_deterministic_output(tmp_path, capsys):
    args = ["--input", str(fig8_csv(tmp_path)), "--seed", "4", "--runs", "3"]
    run_cli(args)
    first = capsys.readouterr().out
    run_cli(args + ["--jobs", "3"])
    second = capsys.readouterr().out
    assert without_wall_time(first) == without_wall_time(second)


def test_runs_are_merged(tmp_path, capsys):
    run_cli(["--input", str(fig8_csv(tmp_path)), "--runs", "4", "--seed", "10", "--stop", "20"])
    doc = json.loads(capsys.readouterr().out)
    assert [r["seed"] for r in doc["runs"]] == [10, 11, 12, 13]
    assert doc["stats"]["generated"] == sum(r["generated"] for r in doc["runs"])


def test_oracle_mode(tmp_path, capsys):
    assert run_cli(["--input", str(fig8_csv(tmp_path)), "--oracle"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["oracle"]["count"] == 18
    assert doc["oracle"]["max_volume"] == 0.5


def test_bad_strategy_is_usage_error(tmp_path, capsys):
    with pytest.raises(SystemExit) as exc:
        run_cli(["--input", str(fig8_csv(tmp_path)), "--strategy", "4"])
    assert exc.value.code == 2
    assert "--strategy" in capsys.readouterr().err


def test_data_error_exit_code(tmp_path, capsys):
    path = tmp_path / "bad.csv"
    path.write_text("name\nx\n")
    assert run_cli(["--input", str(path)]) == 1
    assert "no usable numeric dimensions" in capsys.readouterr().err


def test_module_entry_point(tmp_path):
    proc = subprocess.run(
        [sys.executable, "-m", "mehr", "--input", str(fig6_csv(tmp_path)), "--format", "rules", "--top", "1"],
        capture_output=True, text=True, check=True,
    )
    assert proc.stdout == "1\tvolume=0.25\tv in [0.0, 0.25]\n"
