from __future__ import annotations

import json

import pytest

from planarity_ht.cli import main
from planarity_ht.iofmt import graph_to_json
from tests.conftest import make_path


@pytest.fixture
def k22_file(tmp_path, k22):
    p = tmp_path / "k22.json"
    p.write_text(json.dumps(graph_to_json(k22)))
    return str(p)


@pytest.fixture
def path_file(tmp_path):
    p = tmp_path / "path.json"
    p.write_text(json.dumps(graph_to_json(make_path(3))))
    return str(p)


def test_check_k22_level_exit_1(k22_file, capsys):
    assert main(["check", "level", k22_file]) == 1
    assert "not planar" in capsys.readouterr().out


def test_check_k22_radial_exit_0(k22_file):
    assert main(["check", "radial", k22_file]) == 0


def test_check_path_both_modes_exit_0(path_file):
    assert main(["check", "level", path_file]) == 0
    assert main(["check", "radial", path_file]) == 0


def test_check_json_summary(k22_file, capsys):
    assert main(["--json", "check", "radial", k22_file]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["planar"] is True and payload["mode"] == "radial"


def test_check_witness_written_and_renderable(k22_file, tmp_path, capsys):
    out = tmp_path / "witness.json"
    assert main(["check", "radial", k22_file, "--witness", str(out)]) == 0
    assert out.exists()
    svg = tmp_path / "witness.svg"
    assert main(["render", str(out), k22_file, "--out", str(svg)]) == 0
    assert svg.read_text().startswith("<svg")


def test_check_invalid_file_exit_2(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"levels": 2, "vertices": [{"id": "a", "level": 1}], "edges": [["a", "a"]]}))
    assert main(["check", "level", str(bad)]) == 2


def test_emit_constraints_counts(tmp_path, capsys):
    doc = {"levels": 1, "vertices": [{"id": "a", "level": 1}, {"id": "b", "level": 1}], "edges": []}
    p = tmp_path / "two.json"
    p.write_text(json.dumps(doc))
    assert main(["emit-constraints", "level", str(p), "--full"]) == 0
    lines = [l for l in capsys.readouterr().out.splitlines() if l and not l.startswith("#")]
    assert len(lines) == 1

    doc["vertices"].append({"id": "c", "level": 1})
    p.write_text(json.dumps(doc))
    assert main(["emit-constraints", "level", str(p), "--full"]) == 0
    lines = [l for l in capsys.readouterr().out.splitlines() if l and not l.startswith("#")]
    assert len(lines) == 3 + 6
    assert main(["emit-constraints", "level", str(p), "--reduced"]) == 0
    lines = [l for l in capsys.readouterr().out.splitlines() if l and not l.startswith("#")]
    assert len(lines) == 3
    assert all("->" not in l for l in lines)


def test_emit_constraints_stages(k22_file, capsys):
    assert main(["emit-constraints", "radial", k22_file, "--stage", "G"]) == 0
    g_lines = capsys.readouterr().out
    assert main(["emit-constraints", "radial", k22_file, "--stage", "Gplus"]) == 0
    gplus_lines = capsys.readouterr().out
    assert g_lines != gplus_lines


def test_oracle_exit_codes(k22_file, path_file, capsys):
    assert main(["oracle", "level", k22_file]) == 1
    assert "4 states" in capsys.readouterr().out
    assert main(["oracle", "radial", k22_file]) == 0
    assert main(["oracle", "level", path_file]) == 0
    assert "1 states" in capsys.readouterr().out


def test_oracle_budget_exit_3(k22_file):
    assert main(["oracle", "level", k22_file, "--budget", "2"]) == 3


def test_oracle_budget_env_var(k22_file, monkeypatch):
    monkeypatch.setenv("PLANARITY_HT_BUDGET", "2")
    assert main(["oracle", "level", k22_file]) == 3
    monkeypatch.setenv("PLANARITY_HT_BUDGET", "1000")
    assert main(["oracle", "level", k22_file]) == 1


def test_check_radial_empty_level_exit_2(tmp_path):
    doc = {"levels": 2, "vertices": [{"id": "a", "level": 1}], "edges": []}
    p = tmp_path / "gap.json"
    p.write_text(json.dumps(doc))
    assert main(["check", "radial", str(p)]) == 2


def test_check_full_reports_transitivity(k22_file, capsys):
    assert main(["--json", "check", "level", k22_file, "--full"]) == 1
    payload = json.loads(capsys.readouterr().out)
    assert payload["system"] == "full"
    assert payload["transitivity_clauses"] > 0


def test_render_mismatch_exit_2(path_file, tmp_path, k22_file):
    drawing = tmp_path / "d.json"
    drawing.write_text(json.dumps({"kind": "level", "orders": {"1": ["nope"]}}))
    assert main(["render", str(drawing), path_file, "--out", str(tmp_path / "x.svg")]) == 2


def test_crosscheck_random_exit_0(capsys):
    assert main(["--json", "crosscheck", "--random", "6", "--seed", "3", "--max-size", "3,2"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["instances"] == 6
    assert payload["mismatches"] == []


def test_crosscheck_exhaustive_small(capsys):
    assert main(["crosscheck", "--max-size", "2,2", "--cap", "25"]) == 0
    out = capsys.readouterr().out
    assert "0 mismatches" in out


def test_crosscheck_corpus_dir(tmp_path, k22, capsys):
    d = tmp_path / "corpus"
    d.mkdir()
    (d / "k22.json").write_text(json.dumps(graph_to_json(k22)))
    (d / "path.json").write_text(json.dumps(graph_to_json(make_path(2))))
    assert main(["crosscheck", str(d)]) == 0
    assert "2 instances" in capsys.readouterr().out


def test_crosscheck_empty_dir_exit_2(tmp_path):
    d = tmp_path / "empty"
    d.mkdir()
    assert main(["crosscheck", str(d)]) == 2
