import json
import subprocess
import sys

import pytest

from graphdegen.cli import main
from graphdegen.covers import cover_from_lists
from graphdegen.graphs import complete_graph, cycle_graph

K4_TEXT = complete_graph(4).to_edge_list_text()


@pytest.fixture
def k4_file(tmp_path):
    p = tmp_path / "k4.edges"
    p.write_text(K4_TEXT)
    return str(p)


def run_cli(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_degeneracy_command(k4_file, capsys):
    code, out, _ = run_cli(["degeneracy", k4_file], capsys)
    assert code == 0 and "degeneracy: 3" in out


def test_json_report_round_trips(k4_file, capsys):
    code, out, _ = run_cli(["--json", "weak-degeneracy", k4_file], capsys)
    assert code == 0
    doc = json.loads(out)
    assert json.dumps(doc, indent=1, sort_keys=True) + "\n" == out
    assert doc["results"]["weak_degeneracy"] == 3


def test_strict_check_negative_exit(k4_file, capsys):
    code, out, _ = run_cli(["strict-check", k4_file, "--budget", "3"], capsys)
    assert code == 1
    code, out, _ = run_cli(["strict-check", k4_file, "--budget", "4"], capsys)
    assert code == 0


def test_input_error_exit(tmp_path, capsys):
    p = tmp_path / "bad.edges"
    p.write_text("2 1\nnope nope\n")
    code, out, err = run_cli(["degeneracy", str(p)], capsys)
    assert code == 2
    assert "line 2" in err


def test_missing_file_exit(capsys):
    code, _, _ = run_cli(["degeneracy", "/nonexistent/path.edges"], capsys)
    assert code == 2


def test_budget_exceeded_exit(tmp_path, capsys):
    p = tmp_path / "k6.edges"
    p.write_text(complete_graph(6).to_edge_list_text())
    code, _, err = run_cli(
        ["dp-chromatic", str(p), "--max-covers", "2"], capsys)
    assert code == 3


def test_sfdt_command(tmp_path, capsys):
    cover, f = cover_from_lists(cycle_graph(4), {v: {1, 2} for v in range(4)})
    p = tmp_path / "cover.json"
    p.write_text(cover.to_json(f))
    code, out, _ = run_cli(["sfdt", str(p)], capsys)
    assert code == 0
    cover, f = cover_from_lists(complete_graph(2), {0: {1}, 1: {1}})
    p.write_text(cover.to_json(f))
    code, out, _ = run_cli(["sfdt", str(p)], capsys)
    assert code == 1


def test_detect_command(k4_file, capsys):
    code, out, _ = run_cli(["detect", k4_file, "--config", "kite"], capsys)
    assert code == 1  # K4 carries no kite
    code, _, err = run_cli(["detect", k4_file, "--config", "mystery"], capsys)
    assert code == 2 and "unknown configuration" in err


def test_certify_command(capsys):
    code, out, _ = run_cli(
        ["--json", "certify", "--config", "rc-3b", "--side", "both",
         "--mode", "game"], capsys)
    assert code == 0
    doc = json.loads(out)
    assert doc["results"]["weak"]["game_search"] == "confirmed"
    assert doc["results"]["sfdt"]["mode"] == "sfdt-game"


def test_certify_workers(capsys):
    code, out, _ = run_cli(
        ["--json", "certify", "--config", "kite", "--side", "sfdt",
         "--mode", "product", "--workers", "2"], capsys)
    assert code == 0
    doc = json.loads(out)
    assert doc["results"]["sfdt"]["cases"] == 14745600


def test_audit_command(tmp_path, capsys):
    from importlib import resources
    files = resources.files("graphdegen.data.plane")
    gp = tmp_path / "g.edges"
    rp = tmp_path / "g.rot"
    gp.write_text(files.joinpath("k4.edges").read_text())
    rp.write_text(files.joinpath("k4.rot").read_text())
    idx = json.loads(files.joinpath("_index.json").read_text())
    face = [r for r in idx if r["name"] == "k4"][0]["outer_face"]
    code, out, _ = run_cli(
        ["audit", str(gp), "--theorem", "intersecting-5",
         "--rotation", str(rp), "--outer-face", str(face)], capsys)
    assert code == 0 and "internal-3minus-vertex" in out


def test_chain_command(capsys):
    code, out, _ = run_cli(["--json", "chain", "--max-n", "4"], capsys)
    assert code == 0
    doc = json.loads(out)
    assert doc["results"]["chain_holds"] is True
    assert doc["results"]["graphs"] == 10


def test_console_script_installed():
    proc = subprocess.run([sys.executable, "-m", "graphdegen.cli", "--help"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert "weak-degeneracy" in proc.stdout
