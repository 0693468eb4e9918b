import json

import pytest
from hypothesis import given

from qsymops.qsym import fundamental, monomial, one
from qsymops.text import (
    ParseError,
    format_qsym,
    parse_qsym,
    parse_qsym_any,
    parse_terms,
    parse_word,
    parse_wqsym,
    qsym_from_json,
    qsym_to_json,
    wqsym_to_json,
)
from qsymops.words import WQSymElem, g_basis

from conftest import comps

M, F = monomial, fundamental


def test_parse_terms():
    assert parse_terms("2*M[1,2] - F[3]") == [(2, "M", (1, 2)), (-1, "F", (3,))]
    assert parse_terms(" -3 + M[] ") == [(-3, None, ()), (1, "M", ())]


def test_parse_qsym_mixed_bases():
    assert parse_qsym("2*M[1,2] - F[3]") == M((1, 2)).scale(2) - F((3,))
    assert parse_qsym("F[1]") == M((1,))
    assert parse_qsym("1") == one()
    assert parse_qsym("M[1] - M[1]") == 0


@pytest.mark.parametrize("bad", ["", "M[1", "M[0]", "X[1]", "M[1]M[2]", "M[1,,2]", "2**M[1]"])
def test_parse_qsym_rejects(bad):
    with pytest.raises(ParseError):
        parse_qsym(bad)


def test_parse_wqsym():
    assert parse_wqsym("M[1,2] + G[1]") == WQSymElem({(1, 2): 1, (1,): 1})
    assert parse_wqsym("G[1,2]") == g_basis((1, 2))
    for bad in ["M[1,3]", "G[1,1]", "F[1]"]:
        with pytest.raises(ParseError):
            parse_wqsym(bad)


def test_parse_word():
    assert parse_word("[2, 1]") == (2, 1)
    assert parse_word("[]") == ()
    for bad in ["2,1", "[a]", "[0]"]:
        with pytest.raises(ParseError):
            parse_word(bad)


def test_format():
    f = F((2,)) - M((3,))
    assert format_qsym(F((1, 2)), "F") == "F[1,2]"
    assert format_qsym(M((1, 1)), "M") == "M[1,1]"
    assert format_qsym(f, "M") == "M[2] + M[1,1] - M[3]"
    assert format_qsym(f, "F") == "F[2] - F[3] + F[2,1] + F[1,2] - F[1,1,1]"
    with pytest.raises(ValueError):
        format_qsym(f, "Q")


def test_json_schema():
    obj = qsym_to_json(M((2,)), "F")
    assert obj == {"basis": "F", "terms": [{"comp": [2], "coeff": "1"}, {"comp": [1, 1], "coeff": "-1"}]}
    assert qsym_from_json(json.dumps(obj)) == M((2,))
    assert wqsym_to_json(WQSymElem({(1,): 3})) == {"basis": "M", "terms": [{"word": [1], "coeff": "3"}]}
    with pytest.raises(ParseError):
        qsym_from_json({"basis": "M"})
    with pytest.raises(ParseError):
        parse_qsym_any("{not json")


@given(comps(4), comps(4))
def test_json_round_trip(a, b):
    f = M(a).scale(10 ** 25) - F(b)
    for basis in ("M", "F"):
        assert qsym_from_json(qsym_to_json(f, basis)) == f
    assert parse_qsym(str(f)) == f
