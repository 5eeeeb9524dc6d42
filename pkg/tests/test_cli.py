"""CLI surface: formats, exit codes, budget signaling, cache plumbing."""

import json
import subprocess
import sys

import pytest

from monogrid.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_gen_monomials(capsys):
    code, out, _ = run_cli(capsys, "gen", "3", "2", "--format", "monomials")
    assert code == 0
    assert out.splitlines() == ["2 0 0", "1 1 0", "1 0 1", "0 2 0", "0 1 1", "0 0 2"]


def test_gen_edges_path(capsys):
    code, out, _ = run_cli(capsys, "gen", "2", "4", "--format", "edges")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "p 5 4"
    assert len(lines) == 5


def test_gen_dot_node_count(capsys):
    code, out, _ = run_cli(capsys, "gen", "4", "8", "--format", "dot")
    assert code == 0
    assert out.count("label=") == 165


def test_gen_capacity_exit(capsys):
    code, _, err = run_cli(capsys, "gen", "4", "8", "--size-cap", "100")
    assert code == 1
    assert "size cap" in err


def test_alpha_json(capsys):
    code, out, _ = run_cli(capsys, "alpha", "3", "6", "--threads", "1")
    assert code == 0
    payload = json.loads(out)
    assert payload["objective"] == 10
    assert payload["exact"] is True


def test_count_json(capsys):
    code, out, _ = run_cli(capsys, "count", "3", "6", "--threads", "1")
    assert code == 0
    assert json.loads(out)["count"] == "2"


def test_count_budget_exit_code(capsys):
    code, out, _ = run_cli(capsys, "count", "4", "5", "--max-nodes", "20",
                           "--threads", "1")
    assert code == 3
    payload = json.loads(out)
    assert payload["exact"] is False
    assert payload["budget_exhausted"] == "nodes"


def test_dom_and_idom(capsys):
    code, out, _ = run_cli(capsys, "dom", "2", "4", "--threads", "1")
    assert code == 0
    assert json.loads(out)["gamma"] == 2
    code, out, _ = run_cli(capsys, "idom", "3", "2", "--threads", "1")
    assert code == 0
    assert json.loads(out)["i"] == 2


def test_construct_outputs(capsys):
    code, out, _ = run_cli(capsys, "construct", "3", "12")
    assert code == 0
    assert len(out.strip().splitlines()) == 31
    code, out, _ = run_cli(capsys, "construct", "4", "2", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["size"] == 4
    assert [2, 0, 0, 0] in payload["monomials"]


def test_construct_usage_errors(capsys):
    assert run_cli(capsys, "construct", "4", "7")[0] == 2
    assert run_cli(capsys, "construct", "3", "5")[0] == 2
    assert run_cli(capsys, "construct", "5", "5")[0] == 2


def test_check_igamma(capsys):
    code, out, _ = run_cli(capsys, "check", "igamma", "--n", "3", "--dmax", "4",
                           "--threads", "1")
    assert code == 0
    assert out.count("consistent") == 5


def test_check_howroyd_json(capsys):
    code, out, _ = run_cli(capsys, "check", "howroyd", "--dmax", "9",
                           "--threads", "1", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["statuses"] == {"9": "consistent"}


def test_check_periodicity_note(capsys):
    code, out, _ = run_cli(capsys, "check", "periodicity", "--n", "2",
                           "--dmax", "5", "--threads", "1")
    assert code == 0
    assert "violated" in out
    assert "data, not refutations" in out


def test_render_svg_and_usage(capsys, tmp_path):
    out_file = tmp_path / "fig.svg"
    code, _, _ = run_cli(capsys, "render", "3", "0", "--out", str(out_file))
    assert code == 0
    assert out_file.read_text().count("<circle") == 1
    assert run_cli(capsys, "render", "5", "2")[0] == 2


def test_render_with_highlight(capsys, tmp_path):
    highlight = tmp_path / "mis.txt"
    code, out, _ = run_cli(capsys, "construct", "3", "3", "--out", str(highlight))
    assert code == 0
    code, out, _ = run_cli(capsys, "render", "3", "3", "--highlight", str(highlight),
                           "--format", "tikz")
    assert code == 0
    assert out.count("fill=red") == 4


def test_seq_compute_and_export(capsys, tmp_path):
    cache = str(tmp_path / "cache.jsonl")
    code, out, _ = run_cli(capsys, "seq", "compute", "--n", "4", "--dmax", "3",
                           "--cache", cache, "--threads", "1")
    assert code == 0
    assert out.splitlines()[0].startswith("n,d,alpha")
    code, out, _ = run_cli(capsys, "seq", "export", "--format", "bfile",
                           "--field", "count", "--n", "4", "--cache", cache)
    assert code == 0
    assert out == "0 1\n1 4\n2 1\n3 80\n"


def test_unknown_conjecture_is_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["check", "nonsense"])
    assert exc.value.code == 2


def test_entry_point_version():
    proc = subprocess.run(
        [sys.executable, "-m", "monogrid.cli", "--version"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0
    assert "monogrid" in proc.stdout
