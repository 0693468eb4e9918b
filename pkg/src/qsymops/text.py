"""Text and JSON formats for elements.

Text grammar: a signed sum of terms ``c*T[k1,k2,...]`` where ``T`` is a basis
tag and ``c`` an optional nonnegative integer; a bare integer is a constant.
Whitespace is ignored.  Example: ``"2*M[1,2] - F[3] + 1"``.
"""

from __future__ import annotations

import json
import re

from .qsym import QSymElem, from_f, m_to_f
from .words import FQSymElem, WQSymElem, fq_to_wq, is_packed, is_permutation

_TERM = re.compile(r"(?:(\d+)\*?)?([A-Za-z])\[([\d,]*)\]|(\d+)")


class ParseError(ValueError):
    pass


def parse_terms(text: str) -> list:
    """Split ``text`` into ``(coeff, tag, key)`` triples; ``tag`` is None for constants."""
    s = re.sub(r"\s+", "", text)
    if not s:
        raise ParseError("empty element")
    out = []
    pos = 0
    first = True
    while pos < len(s):
        sign = 1
        if s[pos] in "+-":
            sign = -1 if s[pos] == "-" else 1
            pos += 1
        elif not first:
            raise ParseError(f"expected '+' or '-' at position {pos} in {text!r}")
        m = _TERM.match(s, pos)
        if not m:
            raise ParseError(f"cannot parse term at position {pos} in {text!r}")
        coeff, tag, body, const = m.groups()
        if const is not None:
            out.append((sign * int(const), None, ()))
        else:
            if body and (body.startswith(",") or body.endswith(",") or ",," in body):
                raise ParseError(f"malformed index list [{body}]")
            key = tuple(int(x) for x in body.split(",")) if body else ()
            out.append((sign * int(coeff if coeff is not None else 1), tag, key))
        pos = m.end()
        first = False
    return out


def parse_qsym(text: str) -> QSymElem:
    """Parse a QSym element; ``M`` and ``F`` terms may be mixed."""
    total = QSymElem()
    for c, tag, key in parse_terms(text):
        if any(p < 1 for p in key):
            raise ParseError(f"composition parts must be positive: {key}")
        if tag is None:
            total = total + QSymElem({(): c})
        elif tag == "M":
            total = total + QSymElem({key: c})
        elif tag == "F":
            total = total + from_f({key: c})
        else:
            raise ParseError(f"unknown QSym basis tag {tag!r} (use M or F)")
    return total


def parse_wqsym(text: str) -> WQSymElem:
    """Parse a WQSym element; ``M`` terms take packed words, ``G`` permutations."""
    total = WQSymElem()
    for c, tag, key in parse_terms(text):
        if tag is None:
            total = total + WQSymElem({(): c})
        elif tag == "M":
            if not is_packed(key) or any(x < 1 for x in key):
                raise ParseError(f"{list(key)} is not a packed word")
            total = total + WQSymElem({key: c})
        elif tag == "G":
            if not is_permutation(key):
                raise ParseError(f"{list(key)} is not a permutation")
            total = total + fq_to_wq(FQSymElem({key: c}))
        else:
            raise ParseError(f"unknown WQSym basis tag {tag!r} (use M or G)")
    return total


def parse_word(text: str) -> tuple:
    s = text.strip()
    if not (s.startswith("[") and s.endswith("]")):
        raise ParseError(f"word must be bracketed, got {text!r}")
    body = s[1:-1].replace(" ", "")
    try:
        w = tuple(int(x) for x in body.split(",")) if body else ()
    except ValueError:
        raise ParseError(f"bad word {text!r}") from None
    if any(x < 1 for x in w):
        raise ParseError(f"word letters must be positive: {text!r}")
    return w


def format_qsym(f: QSymElem, basis: str = "M") -> str:
    if basis == "M":
        return str(f)
    if basis == "F":
        return str(QSymElem(m_to_f(f))).replace("M[", "F[")
    raise ValueError(f"unknown basis {basis!r}")


def qsym_to_json(f: QSymElem, basis: str = "M") -> dict:
    """``{"basis": ..., "terms": [{"comp": [...], "coeff": "<decimal>"}]}`` in canonical order."""
    view = f if basis == "M" else QSymElem(m_to_f(f))
    if basis not in ("M", "F"):
        raise ValueError(f"unknown basis {basis!r}")
    return {
        "basis": basis,
        "terms": [{"comp": list(k), "coeff": str(c)} for k, c in view.items()],
    }


def qsym_from_json(obj) -> QSymElem:
    if isinstance(obj, str):
        obj = json.loads(obj)
    try:
        basis = obj["basis"]
        terms = {tuple(int(p) for p in t["comp"]): int(t["coeff"]) for t in obj["terms"]}
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"malformed element JSON: {exc}") from None
    if any(p < 1 for k in terms for p in k):
        raise ParseError("composition parts must be positive")
    if basis == "M":
        return QSymElem(terms)
    if basis == "F":
        return from_f(terms)
    raise ParseError(f"unknown basis {basis!r}")


def parse_qsym_any(text: str) -> QSymElem:
    """Accept either the JSON form or the text grammar."""
    if text.lstrip().startswith("{"):
        try:
            return qsym_from_json(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"bad JSON: {exc}") from None
    return parse_qsym(text)


def wqsym_to_json(f: WQSymElem) -> dict:
    return {"basis": "M", "terms": [{"word": list(k), "coeff": str(c)} for k, c in f.items()]}
