import io
import json
import subprocess
import sys

import pytest

from qpairs.cli import run


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def test_verify_json_example():
    code, out, _ = call("verify", "--identity", "thm2_component_A2", "--order", "60", "--format", "json")
    assert code == 0
    d = json.loads(out)
    assert (d["name"], d["order"], d["passed"]) == ("thm2_component_A2", 60, True)
    assert out.startswith('{"name":"thm2_component_A2","order":60,"passed":true')


def test_st_table_csv():
    code, out, _ = call("st-table", "--max-n", "5", "--format", "csv")
    assert code == 0 and out.splitlines()[0] == "n,sT" and out.splitlines()[-1] == "5,15"
    code, out, _ = call("st-table", "--max-n", "0", "--format", "csv")
    assert code == 0 and out.splitlines() == ["n,sT"]


def test_crank_table_csv():
    code, out, _ = call("crank-table", "--max-n", "8", "--modulus", "3", "--format", "csv")
    lines = out.splitlines()
    assert code == 0 and lines[0] == "n,m,C" and lines[-3:] == ["8,0,20", "8,1,20", "8,2,20"]
    code, out, _ = call("crank-table", "--max-n", "5", "--format", "json")
    rows = json.loads(out)
    assert sum(r["C"] for r in rows if r["n"] == 5) == 15


def test_enumerate():
    code, out, _ = call("enumerate", "--max-n", "5", "--format", "csv")
    lines = out.splitlines()
    assert code == 0 and lines[0] == "n,pi1,pi2,paircrank"
    assert sum(1 for x in lines[1:] if x.startswith("5,")) == 15
    assert call("enumerate", "--max-n", "99")[0] == 2


def test_usage_errors():
    code, out, err = call("verify", "--identity", "bogus")
    assert code == 2 and out == "" and "bogus" in err
    assert call("verify")[0] == 2
    assert call("st-table", "--max-n", "x")[0] == 2
    assert call("--nope")[0] == 2
    assert call()[0] == 2
    assert call("verify", "--identity", "thm2_component_A0", "--order", "1")[0] == 2


def test_verify_all_csv_and_seed_on_stderr():
    code, out, err = call("verify-all", "--order", "30", "--format", "csv", "--seed", "11")
    lines = out.splitlines()
    assert code == 0 and lines[0] == "name,order,passed,first_bad_exponent"
    assert all(x.split(",")[2] == "true" for x in lines[1:])
    assert "seed: 11" in err and "seed" not in out


def test_json_reproducible():
    a = call("verify", "--identity", "chan_lemma_s4", "--order", "40", "--format", "json", "--seed", "5")[1]
    b = call("verify", "--identity", "chan_lemma_s4", "--order", "40", "--format", "json", "--seed", "5")[1]
    assert a == b and json.loads(a)["seed"] == 5


def test_failure_exit_code(monkeypatch):
    import qpairs.cli as cli
    from qpairs.identities import verify as real

    monkeypatch.setattr(cli, "verify", lambda name, order, seed=None: real(name, order, inject=(2, 1), seed=seed))
    code, out, _ = call("verify", "--identity", "eta_3dissection", "--order", "20", "--format", "json")
    assert code == 1 and json.loads(out)["first_bad_exponent"] == 2


def test_list():
    code, out, _ = call("--list", "--format", "json")
    names = [d["name"] for d in json.loads(out)]
    assert code == 0 and "thm2_dissection" in names


@pytest.mark.parametrize("entry", [[sys.executable, "-m", "qpairs"]])
def test_module_entry_point(entry):
    p = subprocess.run(entry + ["st-table", "--max-n", "3", "--format", "csv"], capture_output=True, text=True)
    assert p.returncode == 0 and p.stdout.splitlines()[-1] == "3,5"
