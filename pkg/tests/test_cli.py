import json
import subprocess
import sys

import numpy as np
import pytest

from qbargmann.cli import main
from qbargmann.csvio import read_coefficients, write_coefficients


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_verify_subset_json(capsys):
    code, out, _ = run(capsys, "verify", "--only", "splitting,parseval", "--format", "json")
    assert code == 0
    d = json.loads(out)
    assert [e["name"] for e in d["entries"]] == ["parseval", "splitting"]
    assert d["config"]["gh_nodes"] == 128


def test_verify_writes_file(tmp_path, capsys):
    out = tmp_path / "r.csv"
    code, stdout, _ = run(capsys, "verify", "--only", "parseval", "--format", "csv", "--out", str(out))
    assert code == 0 and stdout == ""
    assert out.read_text().startswith("name,anchor,residual")


def test_verify_tolerance_override(capsys):
    code, out, _ = run(capsys, "verify", "--only", "parseval", "--tol.parseval", "0", "--format", "json")
    assert code == 1
    assert json.loads(out)["config"]["tolerances"] == {"parseval": 0.0}


def test_verify_underresolved_exit_1(capsys, caplog):
    code, out, _ = run(capsys, "verify", "--gh-nodes", "8", "--only", "projection_roundtrip")
    assert code == 1
    assert "FAIL" in out and "needs >= 64 nodes" in caplog.text


@pytest.mark.parametrize("argv", [["verify", "--nu", "-1"], ["verify", "--only", "nope"],
                                  ["verify", "--trunc", "0"]])
def test_verify_config_errors(argv, capsys):
    code, _, err = run(capsys, *argv)
    assert code == 2 and err


def test_bad_flag_exits_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["verify", "--no-such-flag"])
    assert exc.value.code == 2


def test_transform_roundtrip(tmp_path, capsys, rng):
    c = rng.standard_normal((9, 4))
    src, fwd, back = tmp_path / "h.csv", tmp_path / "f.csv", tmp_path / "b.csv"
    write_coefficients(src, c, nu=2.0, basis="hermite")
    assert run(capsys, "transform", str(src), "--out", str(fwd))[0] == 0
    t = read_coefficients(fwd)
    assert t.basis == "fock" and t.nu == 2.0
    assert run(capsys, "transform", str(fwd), "--direction", "inverse", "--out", str(back))[0] == 0
    assert np.max(np.abs(read_coefficients(back).coeffs - c)) < 1e-13


def test_transform_json(tmp_path, capsys):
    src = tmp_path / "h.csv"
    src.write_text("n,w,x,y,z\n0,1,0,0,0\n")
    code, out, _ = run(capsys, "transform", str(src), "--format", "json")
    d = json.loads(out)
    assert code == 0 and d["basis"] == "fock" and d["coeffs"][0][0] == pytest.approx(np.pi ** -0.5)


def test_transform_errors(tmp_path, capsys):
    src = tmp_path / "h.csv"
    src.write_text("# nu=2 basis=hermite\nn,w,x,y,z\n0,1,0,0,0\n")
    assert run(capsys, "transform", str(src), "--nu", "1")[0] == 2
    assert run(capsys, "transform", str(src), "--direction", "inverse")[0] == 2
    bad = tmp_path / "bad.csv"
    bad.write_text("n,w,x,y,z\n0,1,0,0\n")
    code, _, err = run(capsys, "transform", str(bad))
    assert code == 2 and "line 2" in err
    assert run(capsys, "transform", str(tmp_path / "missing.csv"))[0] == 2


@pytest.mark.parametrize("kind", ["monomial-norms", "hermite-norms", "kernel-norms"])
def test_table(kind, capsys):
    code, out, _ = run(capsys, "table", kind, "--format", "json")
    rows = json.loads(out)
    assert code == 0 and rows
    assert all(r["rel_diff"] < 1e-9 for r in rows)


def test_table_limits(capsys):
    assert run(capsys, "table", "monomial-norms", "--n-max", "65")[0] == 2
    assert run(capsys, "table", "kernel-norms", "--q-max", "3.5")[0] == 2
    code, out, _ = run(capsys, "table", "hermite-norms", "--n-max", "64", "--format", "csv")
    assert code == 0 and len(out.splitlines()) == 66


def test_kernel_command(capsys):
    code, out, _ = run(capsys, "kernel", "--q", "0,0,0,0", "--x", "0", "--p", "1,2,3,4",
                       "--nu", "1", "--format", "json")
    rows = json.loads(out)
    assert code == 0
    assert rows[0]["w"] == pytest.approx(np.pi ** -0.75)
    assert rows[1]["w"] == pytest.approx(1 / np.pi)
    assert run(capsys, "kernel", "--q", "1,2")[0] == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "qbargmann", "table", "kernel-norms", "--q-steps", "3"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and "|q|" in proc.stdout
