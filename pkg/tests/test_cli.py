import json
import os
import subprocess
import sys

import pytest

from hyperbetti import formats
from hyperbetti.cli import EXIT_INPUT, EXIT_MISMATCH, EXIT_OK, EXIT_RESOURCE, main
from hyperbetti.families import make_da

DATA = os.path.join(os.path.dirname(__file__), "data")
K23 = ["--family", "multipartite", "--n", "2,3", "--d", "3"]


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize("method", ["hochster", "closed", "fvector"])
def test_betti_methods_agree(capsys, method):
    code, out, _ = run(capsys, "betti", *K23, "--method", method, "--format", "json")
    assert code == EXIT_OK
    data = json.loads(out)
    assert [e["beta"] for e in data["entries"]] == [1, 9, 13, 5]
    assert data["linear_for_d"] == 3 and data["depth"] == 2


def test_betti_text_output(capsys):
    code, out, _ = run(capsys, "betti", *K23, "--field", "2")
    assert code == EXIT_OK
    assert "total:  1  9 13  5" in out
    assert "pd: 3" in out and "linear resolution (d=3): yes" in out


def test_betti_csv_and_multigraded(capsys):
    _, out, _ = run(capsys, "betti", "--family", "knd", "--n", "3", "--d", "2", "--format", "csv")
    assert out.splitlines() == ["i,j,beta", "0,0,1", "1,2,3", "2,3,2"]
    _, out, _ = run(capsys, "betti", "--family", "knd", "--n", "3", "--d", "2", "--multigraded")
    assert json.loads(out)["entries"][-1] == {"i": 2, "degree": ["a", "b", "c"], "beta": 2}


def test_generate(capsys, tmp_path):
    path = tmp_path / "h.txt"
    code, out, _ = run(capsys, "generate", "--family", "dI", "--n", "3,3,3", "--d", "5",
                       "--intervals", "1:2,1:1,2:3", "-o", str(path))
    assert code == EXIT_OK and out.strip() == "36 edges"
    assert len(formats.parse_hypergraph(path.read_text()).edges) == 36
    code, out, err = run(capsys, "generate", "--family", "da", "--n", "3,3,3", "--a", "1,1,3")
    assert err.strip() == "9 edges"
    assert formats.parse_hypergraph(out) == make_da([3, 3, 3], [1, 1, 3])
    code, out, err = run(capsys, "generate", "--family", "knd", "--n", "2", "--d", "3")
    assert code == EXIT_OK and "0 edges" in err and "warning" in err


def test_generate_json_and_strict_intervals(capsys):
    code, out, _ = run(capsys, "generate", "--family", "da", "--n", "2,2", "--a", "1,1", "--format", "json")
    assert len(json.loads(out)["edges"]) == 4
    code, _, err = run(capsys, "generate", "--family", "dI", "--n", "3,3,3", "--d", "5",
                       "--intervals", "0:3,1,2:3", "--strict-intervals")
    assert code == EXIT_INPUT and "normalized" in err
    code, _, err = run(capsys, "generate", "--family", "dI", "--n", "3,3", "--d", "5", "--intervals", "2,2")
    assert code == EXIT_INPUT


def test_verify_passes(capsys):
    code, out, _ = run(capsys, "verify", "--family", "da", "--n", "3,3,3", "--a", "1,1,3", "--fields", "2,3,q")
    assert code == EXIT_OK
    assert "PASS da n=3,3,3 d=5 a=1,1,3: hochster Q == GF(2)" in out
    assert "product formula" in out and "FAIL" not in out


def test_verify_knd_sweep(capsys):
    code, out, _ = run(capsys, "verify", "--family", "knd", "--n", "8", "--d", "2", "--sweep", "--fields", "2,3")
    assert code == EXIT_OK and "knd n=8 d=5" in out and "FAIL" not in out


def test_verify_detects_corrupted_table(capsys):
    code, out, _ = run(capsys, "verify", *K23, "--expect", os.path.join(DATA, "k23_corrupted.json"))
    assert code == EXIT_MISMATCH
    assert "FAIL multipartite n=2,3 d=3: hochster == expected table" in out


def test_dual_homology_hilbert(capsys, tmp_path):
    k42 = tmp_path / "k42.txt"
    run(capsys, "generate", "--family", "knd", "--n", "4", "--d", "2", "-o", str(k42))
    code, out, _ = run(capsys, "dual", "--input", str(k42))
    facets = [line for line in out.splitlines() if line.startswith("facet:")]
    assert code == EXIT_OK and len(facets) == 6 and all(len(f.split()) == 3 for f in facets)
    tri = tmp_path / "tri.txt"
    tri.write_text("vertices: a b c\nfacet: a b\nfacet: b c\nfacet: a c\n")
    code, out, _ = run(capsys, "homology", "--input", str(tri))
    assert json.loads(out) == {"-1": 0, "0": 0, "1": 1}
    k32 = tmp_path / "k32.txt"
    run(capsys, "generate", "--family", "knd", "--n", "3", "--d", "2", "-o", str(k32))
    for method in ("fvector", "hochster"):
        _, out, _ = run(capsys, "hilbert", "--input", str(k32), "--method", method, "--format", "json")
        assert json.loads(out)["numerator"] == [1, 0, -3, 2]
    _, out, _ = run(capsys, "hilbert", "--family", "knd", "--n", "3", "--d", "2", "--method", "closed")
    assert out.strip() == "(1 - 3t^2 + 2t^3) / (1 - t)^3"


def test_json_input_files(capsys, tmp_path):
    cx_path = tmp_path / "cx.json"
    _, out, _ = run(capsys, "dual", "--family", "knd", "--n", "4", "--d", "2", "--format", "json")
    cx_path.write_text(out)
    code, out, _ = run(capsys, "homology", "--input", str(cx_path))
    assert code == EXIT_OK and json.loads(out)["1"] == 3


def test_error_exit_codes(capsys, tmp_path, monkeypatch):
    assert run(capsys, "betti", "--input", str(tmp_path / "missing.txt"))[0] == EXIT_INPUT
    assert run(capsys, "betti", *K23, "--field", "4")[0] == EXIT_INPUT
    assert run(capsys, "betti", "--input", "x", "--method", "closed")[0] == EXIT_INPUT
    assert run(capsys, "betti")[0] == EXIT_INPUT
    assert run(capsys, "betti", "--family", "knd", "--n", "3,x", "--d", "2")[0] == EXIT_INPUT
    assert run(capsys, "betti", "--family", "knd", "--n", "12", "--d", "3", "--limit", "10")[0] == EXIT_RESOURCE
    monkeypatch.setenv("HYPERBETTI_LIMIT", "10")
    assert run(capsys, "betti", "--family", "knd", "--n", "12", "--d", "3")[0] == EXIT_RESOURCE
    monkeypatch.setenv("HYPERBETTI_LIMIT", "ten")
    assert run(capsys, "betti", "--family", "knd", "--n", "5", "--d", "3")[0] == EXIT_INPUT
    bad = tmp_path / "bad.txt"
    bad.write_text("vertices: a b\nedge: a z\n")
    assert run(capsys, "betti", "--input", str(bad))[0] == EXIT_INPUT


def test_jobs_give_identical_json(capsys):
    argv = ["betti", "--family", "da", "--n", "3,3,2", "--a", "1,2,1", "--format", "json"]
    outs = {run(capsys, *argv, "--jobs", str(j))[1] for j in (1, 2, 3)}
    assert len(outs) == 1


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "hyperbetti", "betti", "--family", "knd", "--n", "3",
                           "--d", "2", "--format", "csv"], capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and proc.stdout.splitlines()[-1] == "2,3,2"
