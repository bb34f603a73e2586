import json
import subprocess
import sys

import pytest

from tightpaths import formats
from tightpaths.cli import main, run_command
from tightpaths.constructions import clique_union, stack_free


@pytest.fixture
def cgh(tmp_path):
    def write(H, name="h.cgh"):
        path = tmp_path / name
        formats.write(H, path)
        return str(path)
    return write


def test_construct_round_trip(tmp_path):
    out = tmp_path / "h.cgh"
    status, text = run_command(["construct", "--family", "stack_free", "--n", "12", "--r", "4", "--k", "3", "-o", str(out)])
    assert status == 0 and "edges" in text
    H = formats.read(out)
    assert H == stack_free(12, 4, 3)
    assert out.read_text() == formats.dumps(H)
    status, text = run_command(["construct", "--family", "clique_union", "--n", "6", "--k", "3"])
    assert status == 0 and formats.loads(text) == clique_union(6, 3)


def test_construct_lift(cgh):
    path = cgh(clique_union(4, 2))
    status, text = run_command(["construct", "--family", "lift_plus", "--in", path, "--m", "2"])
    assert status == 0
    L = formats.loads(text)
    assert L.r == 3 and len(L) == 4


def test_construct_missing_flags():
    status, text = run_command(["construct", "--family", "stack_free", "--n", "8"])
    assert status == 2 and "--r" in text


def test_detect_exit_codes(cgh):
    path = cgh(clique_union(6, 3))
    assert run_command(["detect", "--in", path, "--pattern", "zigzag", "--k", "3"]) == (0, "free")
    status, text = run_command(["detect", "--in", path, "--pattern", "zigzag", "--k", "2", "--json"])
    assert status == 1
    assert json.loads(text)["witness"]["kind"] == "zigzag"


def test_bound_table_text_and_json():
    status, text = run_command(["bound", "--n", "6", "--r", "3", "--k", "4"])
    assert status == 0 and "kalai" in text and "n/a" in text
    status, text = run_command(["bound", "--n", "6", "--r", "2", "--k", "3", "--json"])
    rows = {row["kind"]: row for row in json.loads(text)}
    assert rows["perles"]["value"] == "6"


def test_search(tmp_path):
    out = tmp_path / "w.cgh"
    status, text = run_command(["search", "--n", "6", "--r", "2", "--k", "3", "--pattern", "zigzag", "-o", str(out)])
    assert status == 0 and text.startswith("value 6")
    assert len(formats.read(out)) == 6
    status, text = run_command(["search", "--n", "6", "--r", "3", "--k", "4", "--pattern", "tight_path",
                                "--geometry", "abstract", "--json"])
    assert status == 0 and json.loads(text)["value"] == 11


def test_search_budget_exit_code():
    status, text = run_command(["search", "--n", "6", "--r", "3", "--k", "4", "--pattern", "tight_path",
                                "--geometry", "abstract", "--budget", "20"])
    assert status == 3 and "bounded" in text


def test_verify(cgh):
    path = cgh(clique_union(6, 3))
    status, text = run_command(["verify", "--in", path, "--pattern", "zigzag", "--k", "3"])
    assert status == 0 and "0 violations" in text
    status, text = run_command(["verify", "--in", path, "--pattern", "zigzag", "--k", "2", "--json"])
    assert status == 1 and not json.loads(text)["family"]["free"]


def test_experiment(cgh):
    path = cgh(stack_free(10, 4, 2))
    status, text = run_command(["experiment", "--in", path, "--trials", "100", "--json"])
    rep = json.loads(text)
    assert status == 0 and rep["seed"] == 0 and rep["trials"] == 100
    assert run_command(["experiment", "--in", path, "--trials", "100", "--json"])[1] == text
    assert run_command(["experiment", "--in", path, "--trials", "0"])[0] == 2


def test_malformed_file(tmp_path):
    bad = tmp_path / "bad.cgh"
    bad.write_text("4 2 cgh\n0 x\n")
    status, text = run_command(["detect", "--in", str(bad), "--pattern", "zigzag", "--k", "2"])
    assert status == 2 and "line 2, column 3" in text


def test_usage_errors(tmp_path):
    assert run_command([])[0] == 2
    assert run_command(["detect", "--pattern", "zigzag", "--k", "2", "--in", str(tmp_path / "nope")])[0] == 2
    assert run_command(["search", "--n", "5", "--r", "3", "--k", "2", "--pattern", "stack"])[0] == 2


def test_main_and_module_entry(capsys):
    assert main(["bound", "--n", "5", "--r", "2", "--k", "2"]) == 0
    assert "trivial" in capsys.readouterr().out
    proc = subprocess.run([sys.executable, "-m", "tightpaths", "bound", "--n", "5", "--r", "2", "--k", "2"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and "perles" in proc.stdout
