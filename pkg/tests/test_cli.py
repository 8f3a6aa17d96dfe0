import io
import json
import shutil
import subprocess

import jsonschema
import pytest

from dscsib.cli import parse_periodic_set, run
from dscsib.report import load_schema
from dscsib.witness import evens

SCHEMA = load_schema()


def call(*argv):
    out = io.StringIO()
    code = run(list(argv) + ["--format", "structured"], out=out)
    rep = json.loads(out.getvalue())
    jsonschema.validate(rep, SCHEMA)
    assert rep["exit_code"] == code
    return code, rep


def test_classify_definite():
    code, rep = call("classify", "aleph0*w", "--mode", "countable")
    assert code == 0 and rep["result"] == "2^aleph0"
    assert rep["certificate"]["rule"] == "Sibincreasingunbounded"
    assert rep["certificate"]["paper_quote"]


def test_classify_range_exits_2():
    code, rep = call("classify", "w + aleph0*C^2", "--mode", "countable")
    assert code == 2 and rep["result"] == "[aleph0, 2^aleph0]" and rep["exact"] is False


def test_errors_exit_1_with_stable_code():
    code, rep = call("classify", "0*C^2")
    assert code == 1 and rep["error"]["code"] == "ZERO_MULTIPLICITY"
    code, rep = call("classify", "aleph1*C^1", "--mode", "countable")
    assert code == 1 and rep["error"]["code"] == "NOT_COUNTABLE"


def test_embeds_and_equimorphic():
    code, rep = call("embeds", "C^2 + C^2", "w + C^2")
    assert rep["result"] is True and len(rep["assignment"]) == 2
    code, rep = call("equimorphic", "3*C^1", "4*C^1")
    assert code == 0 and rep["result"] is False


def test_witnesses():
    _, rep = call("witnesses", "aleph0*w", "--kind", "padding", "--k", "2")
    assert rep["result"] == ["C^1 + aleph0*w", "2*C^1 + aleph0*w"]
    _, rep = call("witnesses", "Did", "--kind", "qj", "--j", "evens>=2", "--j", "odds")
    assert rep["result"] == ["Fam(2,2)", "Fam(2,1)"]
    _, rep = call("witnesses", "aleph0*C^2", "--kind", "bounded", "--t", "3")
    assert len(rep["result"]) == 1
    _, rep = call("witnesses", "2*eta", "--kind", "swap", "--target", "eta", "--k", "2")
    assert len(rep["result"]) == 2


def test_verify_oracle_equivalence():
    code, rep = call("verify", "oracle-equivalence", "--cap", "5")
    assert code == 0 and rep["result"]["oracle-equivalence"]["failures"] == 0


def test_oracle_subcommands():
    assert call("oracle", "embeds", "2,2", "3,2")[1]["result"]["embeds"] is True
    assert call("oracle", "iso", "2,3", "3,2")[1]["result"] is True
    assert call("oracle", "mutual", "--cap", "4")[1]["result"]["counterexamples"] == []
    assert call("oracle", "injection", "2,2", "5,5,5", "--cap", "15")[1]["result"] is True


def test_declarations_file(tmp_path):
    path = tmp_path / "d.json"
    path.write_text(json.dumps({"chains": [
        {"name": "r1", "size": "aleph0", "sib": "1"},
        {"name": "r2", "size": "aleph0", "sib": "1"}]}))
    code, rep = call("classify", "aleph1*C^1 + aleph0*C^2 + X(r1) + X(r2)",
                     "--decls", str(path))
    assert code == 0 and rep["certificate"]["rule"] == "Generalnoincreasing"


def test_text_format():
    out = io.StringIO()
    assert run(["classify", "Did", "--mode", "countable"], out=out) == 0
    assert "Strictlyinc" in out.getvalue()


def test_periodic_set_descriptors():
    assert parse_periodic_set("evens>=2") == evens(2)
    s = parse_periodic_set("prefix=1;start=4;period=3;residues=0,2")
    assert 1 in s and 6 in s and 4 not in s


@pytest.mark.skipif(shutil.which("dscsib") is None, reason="console script not installed")
def test_console_script():
    p = subprocess.run(["dscsib", "classify", "w + aleph0*C^2", "--mode", "countable"],
                       capture_output=True, text=True)
    assert p.returncode == 2 and "BoundsOnly" in p.stdout


def test_bad_inputs_are_reported_not_raised(tmp_path):
    assert call("verify", "no-such-suite")[1]["error"]["code"] == "DSC_ERROR"
    code, rep = call("classify", "w", "--decls", str(tmp_path / "missing.json"))
    assert code == 1 and rep["error"]["code"] == "BAD_INPUT"
