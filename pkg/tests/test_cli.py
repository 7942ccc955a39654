import json
import subprocess
import sys

import pytest

from schubsem.cli import main
from schubsem.poly import Poly


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_schubert_text(capsys):
    assert run(capsys, "schubert", "--w", "4132") == (0, "x1^3*x3 + x1^3*x2\n", "")
    assert run(capsys, "schubert", "--w", "1")[1] == "1\n"
    assert run(capsys, "schubert", "--w", "4132", "--method", "checked")[1] == "x1^3*x3 + x1^3*x2\n"


def test_schubert_json_roundtrip(capsys):
    _, out, _ = run(capsys, "schubert", "--w", "35427861", "--format", "json")
    text = out.strip()
    assert Poly.from_json(text).to_json() == text


def test_invalid_word_exits_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["schubert", "--w", "4413"])
    assert exc.value.code == 2
    assert "duplicate value 4 at index 2" in capsys.readouterr().err


def test_dot_only_for_pipedreams(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["schubert", "--w", "12", "--format", "dot"])
    assert exc.value.code == 2


def test_expand(capsys):
    assert run(capsys, "expand", "--w", "35427861", "--basis", "sem")[1] == "e[2,1]*e[3,3]*e[6,2]*e[7,7]\n"
    assert run(capsys, "expand", "--w", "312", "--basis", "sem")[1] == "e[1,1]*e[2,1] - e[2,2]\n"
    assert run(capsys, "expand", "--w", "132", "--basis", "chm")[1] == "h[2,1]\n"
    assert "not a single CHM" in run(capsys, "expand", "--w", "321", "--basis", "chm")[1]
    assert run(capsys, "expand", "--w", "132", "--basis", "monomial")[1] == "x2 + x1\n"
    assert run(capsys, "expand", "--w", "213", "--basis", "schubert", "--monk", "2")[1] == "S[3124] + S[2314]\n"


def test_expand_sem_json(capsys):
    _, out, _ = run(capsys, "expand", "--w", "312", "--basis", "sem", "--format", "json")
    obj = json.loads(out)
    assert sorted((tuple(t["a"]), int(t["coeff"])) for t in obj["terms"]) == [((0, 2), -1), ((1, 1), 1)]
    assert json.dumps(obj, separators=(",", ":")) == out.strip()


def test_pipedreams(capsys):
    assert run(capsys, "pipedreams", "--w", "4132")[1].startswith("count: 2\n")
    assert run(capsys, "pipedreams", "--w", "1")[1].startswith("count: 1\n")
    assert run(capsys, "pipedreams", "--w", "312")[1].startswith("count: 1\n")
    _, out, _ = run(capsys, "pipedreams", "--w", "4132", "--format", "json")
    assert json.loads(out)["count"] == 2
    _, out, _ = run(capsys, "pipedreams", "--w", "1432", "--format", "dot")
    assert out.startswith("digraph")


def test_pipedream_limit(capsys):
    code, _, err = run(capsys, "pipedreams", "--w", "15432", "--limit", "2")
    assert code == 1 and "more than 2" in err


def test_scan(capsys, tmp_path):
    code, out, _ = run(capsys, "scan", "--n", "3", "--report", str(tmp_path / "r.json"))
    assert code == 0
    assert "n=3: monomial=5 sem=5 chm=4 ok" in out
    rep = json.loads((tmp_path / "r.json").read_text())
    c = rep["counts"]["3"]
    assert (c["monomial"], c["sem"], c["chm"]) == (5, 5, 4)
    assert run(capsys, "scan", "--n", "1")[0] == 0


def test_scan_bad_checks(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["scan", "--n", "2", "--checks", "theorems,nope"])
    assert exc.value.code == 2


def test_scan_cache_env(capsys, tmp_path, monkeypatch):
    monkeypatch.setenv("SCHUBSEM_CACHE_DIR", str(tmp_path))
    assert run(capsys, "scan", "--n", "3")[0] == 0
    assert (tmp_path / "schubert_S3.json").exists()


def test_module_entry_point():
    out = subprocess.run([sys.executable, "-m", "schubsem", "schubert", "--w", "132"],
                         capture_output=True, text=True, check=True)
    assert out.stdout == "x2 + x1\n"
