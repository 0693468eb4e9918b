import json

import pytest

from qsymops.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out.strip(), err.strip()


def test_dual_immaculate_golden(capsys):
    assert run(capsys, "dual-immaculate", "[1,2]", "--method", "tableaux", "--basis", "M") == (
        0, "M[1,2] + M[1,1,1]", "")


@pytest.mark.parametrize("method", ["tableaux", "creation", "zabrocki"])
def test_dual_immaculate_methods_agree(capsys, method):
    code, out, _ = run(capsys, "dual-immaculate", "[2,1,2]", "--method", method)
    assert code == 0
    assert out == run(capsys, "dual-immaculate", "[2,1,2]")[1]


def test_op_belg_golden(capsys):
    assert run(capsys, "op", "belg", "F[1]", "F[1]", "--basis", "F") == (0, "F[2]", "")


def test_verify_zabrocki_golden(capsys):
    code, out, _ = run(capsys, "verify", "zabrocki", "--max-degree", "5")
    assert code == 0
    assert "verified 32 compositions" in out


def test_verify_json(capsys):
    code, out, _ = run(capsys, "verify", "bel-F", "--max-degree", "3", "--json")
    assert code == 0
    rep = json.loads(out)
    assert rep["suite"] == "bel-F" and rep["degree"] == 3 and rep["failures"] == []
    assert rep["cases"] > 0


def test_verify_env_default(capsys, monkeypatch):
    monkeypatch.setenv("QSYM_MAX_DEGREE", "2")
    code, out, _ = run(capsys, "verify", "omega", "--json")
    assert code == 0 and json.loads(out)["degree"] == 2
    monkeypatch.setenv("QSYM_MAX_DEGREE", "x")
    assert run(capsys, "verify", "omega")[0] == 2


def test_verify_counterexample_exit_1(capsys, monkeypatch):
    from qsymops import verify

    def broken(rep, D, with_oracle, rng):
        rep.check(("x",), 1, 2)

    monkeypatch.setitem(verify.SUITES, "omega", broken)
    code, out, _ = run(capsys, "verify", "omega", "--max-degree", "1")
    assert code == 1
    assert json.loads(out)["failures"] == [{"inputs": ["x"], "expected": "1", "actual": "2"}]


def test_usage_errors(capsys):
    assert run(capsys, "op", "nope", "M[1]", "M[1]")[0] == 2
    assert run(capsys)[0] == 2
    code, _, err = run(capsys, "op", "prec", "M[1", "M[1]")
    assert code == 2 and "error" in err
    assert run(capsys, "dual-immaculate", "[0,1]")[0] == 2
    assert run(capsys, "wop", "0", "M[1]")[0] == 2


def test_convert_and_json(capsys):
    code, out, _ = run(capsys, "convert", "M[2]", "--basis", "F", "--json")
    assert code == 0
    assert json.loads(out) == {"basis": "F", "terms": [{"comp": [2], "coeff": "1"}, {"comp": [1, 1], "coeff": "-1"}]}
    elem = json.dumps({"basis": "F", "terms": [{"comp": [2], "coeff": "1"}]})
    assert run(capsys, "convert", elem) == (0, "M[2] + M[1,1]", "")


def test_wop(capsys):
    assert run(capsys, "wop", "1", "M[1]") == (0, "M[1,1]", "")
    elem = json.dumps({"basis": "M", "terms": [{"comp": [1], "coeff": "1"}]})
    assert run(capsys, "wop", "1", elem) == (0, "M[1,1]", "")


def test_word_commands(capsys):
    assert run(capsys, "wq-op", "belg", "[1]", "[1]") == (0, "M[1,2] + M[1,1]", "")
    assert run(capsys, "wq-op", "prec", "[1]", "M[1]") == (0, "M[1,2]", "")
    assert run(capsys, "fq-op", "succ", "[1]", "[1]") == (0, "G[2,1]", "")
    assert run(capsys, "fq-op", "belg", "[2,1]", "G[1]") == (0, "G[2,1,3]", "")
    assert run(capsys, "project", "[2,1,3,1]") == (0, "M[2,1,1]", "")
    assert run(capsys, "fq-op", "succ", "[1,1]", "[1]")[0] == 2
    assert run(capsys, "fq-op", "prec", "[1]", "[1]")[0] == 2


def test_expand(capsys):
    assert run(capsys, "expand", "M[1,1]", "--n", "3") == (0, "x1*x2 + x1*x3 + x2*x3", "")
    assert run(capsys, "expand", "M[2] - M[1,1] + 3", "--n", "2") == (0, "3 + x1^2 - x1*x2 + x2^2", "")


def test_output_is_deterministic(capsys):
    outs = {run(capsys, "op", "mul", "M[1]+M[2]", "F[1,1]")[1] for _ in range(3)}
    assert len(outs) == 1
