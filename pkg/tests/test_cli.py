import subprocess
import sys

import pytest

from edgedim import families as F
from edgedim.cli import main
from edgedim.graph import build_graph, read_edge_list, write_edge_list


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def edge_file(tmp_path):
    def make(lg, name="g"):
        path = tmp_path / f"{name}.edges"
        write_edge_list(lg.graph if hasattr(lg, "graph") else lg, path)
        return str(path)
    return make


def test_compute_cycle_edimf(capsys, edge_file):
    code, out, _ = run(capsys, "compute", edge_file(F.cycle(5)), "--what", "edimf")
    lines = out.splitlines()
    assert code == 0 and lines[0] == "5/4"
    assert all("=" in line and "." not in line for line in lines[1:])


def test_compute_petersen(capsys, edge_file):
    path = edge_file(F.petersen())
    assert run(capsys, "compute", path, "--what", "edimf")[1].splitlines()[0] == "5/2"
    assert run(capsys, "compute", path, "--what", "dimf")[1].splitlines()[0] == "5/3"
    assert run(capsys, "compute", path, "--what", "edim")[1].splitlines()[0] == "4"


def test_compute_path_dim(capsys, edge_file):
    code, out, _ = run(capsys, "compute", edge_file(F.path(4)), "--what", "dim")
    assert code == 0
    assert out.splitlines()[0] == "1" and out.splitlines()[1] in ("{0}", "{3}")


def test_compute_dump_lp(capsys, edge_file, tmp_path):
    dump = tmp_path / "rows.txt"
    code, _, _ = run(capsys, "compute", edge_file(F.cycle(5)), "--what", "dimf", "--dump-lp", str(dump))
    rows = dump.read_text().splitlines()
    assert code == 0 and len(rows) == 5 and all(len(r.split()) == 4 for r in rows)


def test_compute_budget_warning(capsys, edge_file):
    code, out, _ = run(capsys, "compute", edge_file(F.petersen()), "--what", "edim", "--node-budget", "1")
    assert code == 0 and "not proven optimal" in out


def test_exit_codes(capsys, tmp_path, edge_file):
    bad = tmp_path / "bad.edges"
    bad.write_text("p 3 2\n0 1\n")
    code, _, err = run(capsys, "compute", str(bad), "--what", "dim")
    assert code == 2 and err.startswith("error:") and len(err.splitlines()) == 1
    assert run(capsys, "compute", str(tmp_path / "missing"), "--what", "dim")[0] == 2
    disc = edge_file(build_graph(4, [(0, 1), (2, 3)]), "disc")
    code, _, err = run(capsys, "compute", disc, "--what", "edimf")
    assert code == 3 and len(err.splitlines()) == 1
    assert run(capsys, "compute", edge_file(F.path(2), "p2"), "--what", "edim")[0] == 3
    assert run(capsys, "compute", disc, "--what", "nonsense")[0] == 2
    assert run(capsys, "gen", "--family", "cycle")[0] == 2
    assert run(capsys, "gen", "--family", "cycle", "--n", "2")[0] == 2
    assert run(capsys, "gen", "--family", "multipartite", "--parts", "a,b")[0] == 2


def test_gen_grid(capsys, tmp_path):
    stem = str(tmp_path / "grid")
    code, out, _ = run(capsys, "gen", "--family", "grid", "--s", "6", "--t", "4", "-o", stem)
    assert code == 0 and out.split() == [stem + ".edges", stem + ".names"]
    g = read_edge_list(stem + ".edges")
    assert g.n == 24 and g.m == 38


def test_gen_nonplanar(capsys, tmp_path):
    stem = str(tmp_path / "np")
    run(capsys, "gen", "--family", "nonplanar-edim2", "-o", stem)
    assert read_edge_list(stem + ".edges").n == 15
    names = dict(line.split() for line in open(stem + ".names"))
    assert names["x1"] == str(F.nonplanar_edim2()["x1"]) and len(names) == 15


def test_gen_twin_ladder(capsys, tmp_path):
    stem = str(tmp_path / "tl")
    code, out, _ = run(capsys, "gen", "--family", "twin-ladder", "--k", "2", "-o", stem)
    assert code == 0
    assert read_edge_list(stem + "_G.edges").n == 21
    assert read_edge_list(stem + "_H.edges").n == 12


def test_gen_same_codes(capsys, tmp_path):
    stem = str(tmp_path / "sc")
    run(capsys, "gen", "--family", "same-codes", "-o", stem)
    assert read_edge_list(stem + "_H1.edges").edges != read_edge_list(stem + "_H2.edges").edges


def test_verify_filters(capsys):
    code, out, _ = run(capsys, "verify", "--filter", "cycle")
    lines = out.splitlines()
    assert code == 0 and lines[-1].startswith("OK")
    assert all("cycle" in line for line in lines[:-1]) and len(lines) > 1
    code, out, _ = run(capsys, "verify", "--filter", "petersen")
    assert "expected=5/2 got=5/2" in out and "expected=5/3 got=5/3" in out
    for line in out.splitlines()[:-1]:
        assert line.split()[0] in ("PASS", "FAIL")
        assert " expected=" in line and " got=" in line


def test_verify_nothing_matched(capsys):
    code, out, _ = run(capsys, "verify", "--filter", "no-such-check")
    assert code == 0 and out.strip() == "OK 0/0 checks passed"


def test_byte_identical_output(tmp_path):
    path = tmp_path / "w.edges"
    write_edge_list(F.wheel(7).graph, path)
    cmd = [sys.executable, "-m", "edgedim", "compute", str(path), "--what", "edimf"]
    first = subprocess.run(cmd, capture_output=True, check=True).stdout
    second = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert first == second and first.splitlines()[0] == b"3"
    cmd = [sys.executable, "-m", "edgedim", "verify", "--filter", "wheel"]
    assert subprocess.run(cmd, capture_output=True).stdout == subprocess.run(cmd, capture_output=True).stdout
