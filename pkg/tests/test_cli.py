import io
import json
import subprocess
import sys

import pytest

from primrep.cli import main


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def test_rep_counts():
    assert run("rep", "--form", "1,1,1,1", "--n", "4") == (0, "n   r\n4  24\n")
    assert run("rep", "--form", "1,1,1,1", "--n", "4", "--primitive")[1].split()[-1] == "16"
    assert run("rep", "--form", "1,1,1,1", "--n", "8", "--primitive", "--oracle", "loop")[1].split()[-1] == "0"


def test_rep_oracles_agree():
    outs = {o: run("--format", "csv", "rep", "--form", "1,1,2,3", "--range", "1..40", "--oracle", o)[1]
            for o in ("loop", "series", "formula")}
    assert len(set(outs.values())) == 1
    assert outs["loop"].splitlines()[0] == "n,r"


def test_rep_errors(capsys):
    assert run("rep", "--form", "1,1,x", "--n", "3")[0] == 2
    assert run("rep", "--form", "1,1,1,7", "--n", "3", "--oracle", "formula")[0] == 2
    assert run("rep", "--form", "1,1", "--range", "9..3")[0] == 2
    assert "empty range" in capsys.readouterr().err


def test_thm2():
    code, out = run("thm2", "--psi", "1", "--phi", "1", "--h", "1", "--n", "12", "--method", "both")
    assert code == 0 and out.splitlines()[1].split() == ["12", "24", "24", "true"]
    assert run("thm2", "--psi", "kron:-4", "--phi", "1", "--h", "2", "--n", "2")[1].split()[-1] == "4"
    assert run("thm2", "--psi", "kron:5", "--phi", "kron:-4", "--h", "3", "--n", "1")[1].split()[-1] == "1"


def test_thm2_real_method_needs_real_psi():
    assert run("thm2", "--psi", "mod:5:1", "--phi", "1", "--h", "1", "--n", "3", "--method", "real")[0] == 2
    assert run("thm2", "--psi", "kron:-3", "--phi", "mod:5:1", "--h", "1", "--range", "1..30", "--method", "real")[0] == 0


def test_thm2_jsonl_with_general_characters():
    code, out = run("--format", "jsonl", "thm2", "--psi", "mod:7:1", "--phi", "kron:-4", "--h", "1",
                    "--range", "1..20", "--method", "both")
    rows = [json.loads(line) for line in out.splitlines()]
    assert code == 0 and len(rows) == 20 and all(r["equal"] for r in rows)


def test_verify(tmp_path):
    report = tmp_path / "r.json"
    code, out = run("verify", "jacobi", "--range", "1..300", "--report", str(report))
    assert code == 0 and "pass" in out
    doc = json.loads(report.read_text())
    assert doc["schema_version"] == 1 and doc["all_pass"] and doc["range"] == [1, 300]


def test_verify_reports_erratum_and_fails(tmp_path):
    report = tmp_path / "r.json"
    code, out = run("verify", "1,1,1,5", "--range", "1..40", "--report", str(report))
    assert code == 1 and "FAIL" in out
    doc = json.loads(report.read_text())
    (er,) = doc["errata"]
    assert er["stated_first_counterexample"] == 8 and er["corrected_holds"]


def test_verify_usage_errors(tmp_path):
    assert run("verify", "all", "--range", "5..1")[0] == 2
    assert run("verify", "nosuch", "--range", "1..5")[0] == 2
    assert run("verify", "jacobi", "--range", "1..5", "--report", str(tmp_path / "missing" / "r.json"))[0] == 1


def test_fit(tmp_path):
    path = tmp_path / "fit.json"
    code, _ = run("fit", "--form", "1,1,1,1", "--train", "1..10", "--validate", "11..200", "--out", str(path))
    assert code == 0
    doc = json.loads(path.read_text())
    assert [(t["coeff"], t["t"]) for t in doc["terms"]] == [("8", 1), ("-32", 4)]
    code, out = run("fit", "--form", "1,1,1,1,1,1")
    assert code == 0 and {t["coeff"] for t in json.loads(out)["terms"]} == {"16", "-4"}


def test_fit_failures(capsys):
    assert run("fit", "--form", "1,1,1")[0] == 2
    assert "even rank required" in capsys.readouterr().err
    assert run("fit", "--form", "1,1,1,1,1,1,1,1,1,1")[0] == 1


def test_char_table():
    code, out = run("--format", "csv", "char", "kron:-4")
    assert out == "m,value\n0,0\n1,1\n2,0\n3,-1\n"
    assert run("char", "mod:7:1")[1].splitlines()[3].split() == ["2", "e(1/3)"]
    assert run("char", "kron:-12")[0] == 2


def test_output_is_byte_stable():
    args = ("--format", "csv", "thm2", "--psi", "kron:-3", "--phi", "kron:8", "--h", "2", "--range", "1..60")
    assert run(*args) == run(*args)


@pytest.mark.parametrize("argv, code", [
    (["rep", "--form", "1,1", "--n", "5"], 0),
    (["verify", "1,1,1,5", "--range", "1..10", "--no-loop"], 1),
    (["fit", "--form", "1,1,1"], 2),
    ([], 2),
])
def test_module_entry_point_exit_codes(argv, code):
    proc = subprocess.run([sys.executable, "-m", "primrep", *argv], capture_output=True, text=True)
    assert proc.returncode == code
