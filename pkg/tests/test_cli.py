import json
import shutil
import subprocess

import pytest

from ldc.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_exists(capsys):
    assert run(capsys, "exists", "(A@B)*C", "A@(B*C)")[:2] == (0, "true\n")
    assert run(capsys, "exists", "(A*B)", "(A@B)")[:2] == (1, "false\n")
    for mode in ("full", "lax-ld", "lax-monoidal"):
        assert run(capsys, "exists", "--mode", mode, "(A*B)", "(A@B)")[0] == 1
    assert run(capsys, "exists", "--mode", "lax-monoidal", "(A*B)*C", "A*(B*C)")[0] == 1
    assert run(capsys, "exists", "--mode", "full", "(A*B)*C", "A*(B*C)")[0] == 0


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "--frontier", "A@B*C*D@E")
    assert code == 0 and "14 vertices" in out and "0 failures" in out
    code, out, _ = run(capsys, "verify", "--frontier", "A*B*C", "--functor", "--json")
    assert code == 0 and json.loads(out)["vertex_count"] == 6


def test_parse_and_errors(capsys):
    assert run(capsys, "parse", "A@(B*C)")[:2] == (0, "object (A@(B*C))\n")
    assert run(capsys, "parse", "dr{A,B,C}")[:2] == (0, "morphism dr{A,B,C}\n")
    code, out, err = run(capsys, "parse", "A*B*C")
    assert code == 2 and out == "" and "position" in err
    assert run(capsys, "parse", "mu{A,B}")[0] == 2
    assert run(capsys, "parse", "--functor", "mu{A,B}")[0] == 0


def test_typecheck(capsys):
    assert run(capsys, "typecheck", "dr{A,B,C}")[:2] == (0, "((A@B)*C) -> (A@(B*C))\n")
    code, out, err = run(capsys, "typecheck", "(dl{A,B,C} . dr{A,B,C})")
    assert code == 2 and out == "" and "cannot compose" in err


def test_rank(capsys, tmp_path):
    assert run(capsys, "rank", "(A*B)@C")[:2] == (0, "3\n")
    path = tmp_path / "ranks.json"
    path.write_text(json.dumps({"A": 1, "B": 2}))
    assert run(capsys, "rank", "(A*B)@C", "--rank-file", str(path))[:2] == (0, "4\n")
    path.write_text(json.dumps({"A": 0}))
    assert run(capsys, "rank", "A", "--rank-file", str(path))[0] == 2
    assert run(capsys, "rank", "A", "--rank-file", str(tmp_path / "missing.json"))[0] == 2


def test_synth_and_normalize(capsys):
    code, out, _ = run(capsys, "synth", "--json", "(A@B)*C", "A@(B*C)")
    assert code == 0 and json.loads(out)["word"] == ["dr"]
    code, out, err = run(capsys, "synth", "(A*B)", "(A@B)")
    assert code == 1 and out == "" and "no morphism" in err
    code, out, _ = run(capsys, "normalize", "--json", "dr{A,B,C}")
    assert code == 0 and json.loads(out)["vector"] == ["C"]
    code, out, _ = run(capsys, "normalize", "(al'{A,B,C} . al{A,B,C})")
    assert code == 0 and "al" not in out


def test_functor_synth(capsys):
    code, out, _ = run(capsys, "synth", "--functor", "--json", "F((A@B))", "(F(A)@F(B))")
    data = json.loads(out)
    assert code == 0 and data["base"]["kind"] == "dbase"
    code, out, _ = run(capsys, "synth", "--functor", "--json", "(F(A)*F(B))", "F((A*B))")
    assert code == 0 and json.loads(out)["kind"] == "flift"


def test_eq(capsys):
    assert run(capsys, "eq", "(al'{A,B,C} . al{A,B,C})", "id{(A*(B*C))}")[:2] == (0, "true\n")
    assert run(capsys, "eq", "dr{A,B,C}", "id{((A@B)*C)}")[:2] == (1, "false\n")


def test_graph(capsys):
    code, out, _ = run(capsys, "graph", "--frontier", "A@B*C@D")
    assert code == 0 and out.startswith("digraph") and out.count("dir=both") == 1
    code, out, _ = run(capsys, "graph", "--frontier", "A*B*C", "--format", "json", "--mode", "lax-monoidal")
    assert code == 0 and len(json.loads(out)["edges"]) == 1
    assert run(capsys, "graph", "--frontier", "A*")[0] == 2
    assert run(capsys, "graph", "--frontier", "A*B", "--mode", "bogus")[0] == 2


def test_verify_suite(capsys):
    code, out, _ = run(capsys, "verify-suite", "--max-letters", "3")
    assert code == 0 and out.strip().endswith("18 frontiers checked, 0 failed")
    code2, out2, _ = run(capsys, "verify-suite", "--max-letters", "3")
    assert out2 == out
    code, out, _ = run(capsys, "verify-suite", "--max-letters", "3", "--seed", "5", "--mode", "full", "--json")
    assert code == 0 and len(json.loads(out)) == 6
    assert run(capsys, "verify-suite", "--max-letters", "1")[0] == 2


def test_spider(capsys):
    assert run(capsys, "spider", "--emit", "2", "2")[:2] == (0, "(cm{*,*} . mu{*,*})\n")
    assert run(capsys, "spider", "--emit", "0", "1")[0] == 2
    code, out, _ = run(
        capsys, "spider", "--check",
        "((id{F(*)} @ mu{*,*}) . (dr{F(*),F(*),F(*)} . (cm{*,*} * id{F(*)})))",
    )
    assert (code, out) == (0, "2 2\n")
    assert run(capsys, "spider", "--check", "(ap{F(*),F(*),F(*)} . (id{F(*)} @ cm{*,*}))")[0] == 2


def test_units_cx(capsys):
    code, out, _ = run(capsys, "units-cx", "--json")
    data = json.loads(out)
    assert code == 0 and data["differ"] and data["snake_identity"]


def test_usage_errors(capsys):
    assert run(capsys)[0] == 2
    assert run(capsys, "exists", "--bogus", "A", "A")[0] == 2


@pytest.mark.skipif(shutil.which("ldc") is None, reason="console script not installed")
def test_console_script():
    p = subprocess.run(["ldc", "exists", "(A@B)*C", "A@(B*C)"], capture_output=True, text=True)
    assert p.returncode == 0 and p.stdout == "true\n"
    p = subprocess.run(["ldc", "exists", "(A*B)", "(A@B)"], capture_output=True, text=True)
    assert p.returncode == 1
