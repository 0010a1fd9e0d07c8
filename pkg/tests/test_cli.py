"""End-to-end CLI behavior through main(argv): outputs and exit codes."""

import json
import xml.etree.ElementTree as ET

import pytest

from troplines.cli import main

PENCIL_POINTS = '{"points": [[0, 0], [0, -2], [-2, 0], [2, 2]]}'


def _write(tmp_path, name, text):
    path = tmp_path / name
    path.write_text(text)
    return str(path)


def test_analyze_points_to_stdout(tmp_path, capsys):
    path = _write(tmp_path, "pencil.json", PENCIL_POINTS)
    assert main(["analyze", path]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["counts"]["b"] == 1
    assert report["near_pencil"] is True
    assert report["dbe"]["equality"] is True


def test_analyze_to_file(tmp_path, capsys):
    path = _write(tmp_path, "pencil.json", PENCIL_POINTS)
    out = tmp_path / "report.json"
    assert main(["analyze", path, "--out", str(out)]) == 0
    assert capsys.readouterr().out == ""
    report = json.loads(out.read_text())
    assert report["input"] == "points"
    assert report["counts"] == {
        "n": 4, "t": 4, "triangles": 3, "b": 1, "k": 0, "h": 1
    }


def test_analyze_lines_file(tmp_path, capsys):
    path = _write(tmp_path, "one.json", '{"lines": [{"vertex": [0, 0]}]}')
    assert main(["analyze", path]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["input"] == "lines"
    assert report["counts"] == {"n": 1, "t": 1, "triangles": 1, "b": 0, "k": 0, "h": 0}
    assert "dbe" not in report


def test_analyze_duplicate_point_is_a_usage_error(tmp_path, capsys):
    path = _write(tmp_path, "dup.json", '{"points": [[0, 0], [1, 1], [0, 0]]}')
    assert main(["analyze", path]) == 2
    assert "duplicate point at index 2" in capsys.readouterr().err


def test_analyze_missing_file(capsys):
    assert main(["analyze", "/nonexistent/input.json"]) == 2
    assert "error:" in capsys.readouterr().err


def test_analyze_malformed_json(tmp_path, capsys):
    path = _write(tmp_path, "bad.json", "{oops")
    assert main(["analyze", path]) == 2
    assert "invalid JSON" in capsys.readouterr().err


def test_render_writes_valid_svg(tmp_path):
    path = _write(tmp_path, "pencil.json", PENCIL_POINTS)
    out = tmp_path / "picture.svg"
    assert main(["render", path, "--svg", str(out)]) == 0
    root = ET.fromstring(out.read_text())
    assert root.tag.endswith("svg")


def test_render_unwritable_target(tmp_path, capsys):
    path = _write(tmp_path, "pencil.json", PENCIL_POINTS)
    target = tmp_path / "missing_dir" / "picture.svg"
    assert main(["render", path, "--svg", str(target)]) == 2
    assert "cannot write" in capsys.readouterr().err


def test_render_rejects_empty_input(tmp_path, capsys):
    path = _write(tmp_path, "empty.json", "")
    out = tmp_path / "x.svg"
    assert main(["render", path, "--svg", str(out)]) == 2
    assert "empty input file" in capsys.readouterr().err


def test_verify_flag_validation(capsys):
    assert main(["verify", "--n", "3", "--mode", "exhaustive"]) == 2
    assert "--grid" in capsys.readouterr().err
    assert main(["verify", "--n", "3", "--mode", "random", "--samples", "5"]) == 2
    assert "--range" in capsys.readouterr().err
    assert main(["verify", "--n", "3", "--mode", "exhaustive", "--grid", "1"]) == 2
    assert "grid_size" in capsys.readouterr().err


def test_verify_exhaustive_summary(capsys):
    assert main(["verify", "--n", "3", "--mode", "exhaustive", "--grid", "3"]) == 0
    summary = json.loads(capsys.readouterr().out)
    assert summary["configs_tested"] == 84
    assert summary["violations"] == 0
    assert summary["backend"] in ("pure", "compiled")
    assert set(summary["histogram"]) <= {"0", "1", "2", "3"}
    assert sum(summary["histogram"].values()) == 84


def test_verify_jsonl_stream_is_reproducible(tmp_path, capsys):
    args = ["verify", "--n", "3", "--mode", "random", "--samples", "50",
            "--range", "6", "--seed", "3"]
    first = tmp_path / "a.jsonl"
    second = tmp_path / "b.jsonl"
    assert main(args + ["--jsonl", str(first)]) == 0
    assert main(args + ["--jsonl", str(second)]) == 0
    capsys.readouterr()
    assert first.read_bytes() == second.read_bytes()
    rows = [json.loads(line) for line in first.read_text().splitlines()]
    assert len(rows) == 50
    assert [r["index"] for r in rows] == list(range(50))
    assert all(r["violations"] == [] for r in rows)


def test_stable_line_output(capsys):
    assert main(["stable-line", "--p1", "-3,2", "--p2", "-1,2"]) == 0
    out = capsys.readouterr().out.strip()
    assert out == "coefficients (2 : -1 : 1), vertex (-1, 2)"


def test_stable_line_accepts_fractions(capsys):
    assert main(["stable-line", "--p1", "1/2,0", "--p2", "3,4"]) == 0
    assert "vertex" in capsys.readouterr().out


def test_stable_line_rejects_equal_points(capsys):
    assert main(["stable-line", "--p1", "1,1", "--p2", "1,1"]) == 2
    assert "error:" in capsys.readouterr().err


def test_stable_line_rejects_malformed_point(capsys):
    assert main(["stable-line", "--p1", "3", "--p2", "1,2"]) == 2
    assert "expected x,y" in capsys.readouterr().err


def test_missing_subcommand_is_a_parser_error(capsys):
    with pytest.raises(SystemExit) as err:
        main([])
    assert err.value.code == 2
