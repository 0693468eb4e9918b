"""Command-line front end: ``qsymops <subcommand> ...``.

Exit codes: 0 success, 1 an identity failed (counterexample printed as
JSON), 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import oracle
from .compositions import parse_composition
from .dendriform import OPERATIONS, apply
from .immaculate import dual_immaculate_creation, dual_immaculate_tableaux
from .nsym import W, zabrocki_dual_immaculate
from .text import (
    ParseError,
    format_qsym,
    parse_qsym_any,
    parse_wqsym,
    parse_word,
    qsym_to_json,
    wqsym_to_json,
)
from .verify import SUITES, run_suite
from .words import FQ_OPS, WQ_OPS, FQSymElem, fq_op, is_permutation, project, wq_op

METHODS = {
    "tableaux": dual_immaculate_tableaux,
    "creation": dual_immaculate_creation,
    "zabrocki": zabrocki_dual_immaculate,
}

# suites whose cases are one per composition
_PER_COMPOSITION = {"zabrocki"}


def _default_degree() -> int:
    raw = os.environ.get("QSYM_MAX_DEGREE")
    if raw is None:
        return 4
    try:
        value = int(raw)
    except ValueError:
        raise ParseError(f"QSYM_MAX_DEGREE must be an integer, got {raw!r}") from None
    if value < 0:
        raise ParseError("QSYM_MAX_DEGREE must be nonnegative")
    return value


def _emit_qsym(f, args):
    if args.json:
        print(json.dumps(qsym_to_json(f, args.basis)))
    else:
        print(format_qsym(f, args.basis))


def _wq_arg(text):
    s = text.strip()
    if s.startswith("["):
        return parse_wqsym("M" + s)
    return parse_wqsym(s)


def _fq_arg(text):
    s = text.strip()
    if s.startswith("["):
        w = parse_word(s)
        if not is_permutation(w):
            raise ParseError(f"{list(w)} is not a permutation")
        return FQSymElem({w: 1})
    total = FQSymElem()
    from .text import parse_terms

    for c, tag, key in parse_terms(s):
        if tag not in ("G", None) or (tag == "G" and not is_permutation(key)):
            raise ParseError(f"expected G[permutation] terms, got {tag}{list(key)}")
        total = total + FQSymElem({key: c})
    return total


def _monomial_str(m) -> str:
    parts = []
    for i, e in enumerate(m, 1):
        if e == 1:
            parts.append(f"x{i}")
        elif e:
            parts.append(f"x{i}^{e}")
    return "*".join(parts) or "1"


def cmd_expand(args):
    f = parse_qsym_any(args.elem)
    d = args.d if args.d is not None else max(int(f.degree()), 0)
    s = oracle.expand_elem(f, args.n, d)
    terms = sorted(s.terms.items(), key=lambda kv: (sum(kv[0]), tuple(-x for x in kv[0])))
    if args.json:
        print(json.dumps({"n": args.n, "d": d,
                          "terms": [{"exp": list(m), "coeff": str(c)} for m, c in terms]}))
        return 0
    out = []
    for m, c in terms:
        body = _monomial_str(m)
        mag = abs(c)
        txt = body if mag == 1 and body != "1" else (f"{mag}" if body == "1" else f"{mag}*{body}")
        out.append(("-" if c < 0 else "+", txt))
    if not out:
        print("0")
    else:
        line = ("-" if out[0][0] == "-" else "") + out[0][1]
        for sign, txt in out[1:]:
            line += f" {sign} {txt}"
        print(line)
    return 0


def cmd_op(args):
    f, g = parse_qsym_any(args.a), parse_qsym_any(args.b)
    _emit_qsym(apply(args.name, f, g), args)
    return 0


def cmd_convert(args):
    _emit_qsym(parse_qsym_any(args.elem), args)
    return 0


def cmd_dual_immaculate(args):
    alpha = parse_composition(args.comp)
    _emit_qsym(METHODS[args.method](alpha), args)
    return 0


def cmd_wop(args):
    _emit_qsym(W(args.m, parse_qsym_any(args.elem)), args)
    return 0


def cmd_wq_op(args):
    r = wq_op(args.name, _wq_arg(args.u), _wq_arg(args.v))
    print(json.dumps(wqsym_to_json(r)) if args.json else r)
    return 0


def cmd_fq_op(args):
    r = fq_op(args.name, _fq_arg(args.s), _fq_arg(args.t))
    print(r)
    return 0


def cmd_project(args):
    _emit_qsym(project(_wq_arg(args.elem)), args)
    return 0


def cmd_verify(args):
    degree = args.max_degree if args.max_degree is not None else _default_degree()
    names = list(SUITES) if args.suite == "all" else [args.suite]
    status = 0
    reports = []
    for name in names:
        rep = run_suite(name, degree, with_oracle=args.with_oracle, seed=args.seed)
        reports.append(rep)
        if rep.failures:
            status = 1
            print(json.dumps(rep.as_dict()))
        elif not args.json:
            unit = "compositions" if name in _PER_COMPOSITION else "cases"
            print(f"{name}: verified {rep.cases} {unit}")
    if args.json and status == 0:
        out = [r.as_dict() for r in reports]
        print(json.dumps(out[0] if len(out) == 1 else out))
    return status


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="qsymops", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def basis_opts(sp):
        sp.add_argument("--basis", choices=("M", "F"), default="M")
        sp.add_argument("--json", action="store_true")

    sp = sub.add_parser("expand", help="expand a QSym element in n variables")
    sp.add_argument("elem")
    sp.add_argument("--n", type=int, default=3)
    sp.add_argument("--d", type=int, default=None, help="degree bound (default: element degree)")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_expand)

    sp = sub.add_parser("op", help="apply a QSym operation")
    sp.add_argument("name", choices=sorted(OPERATIONS))
    sp.add_argument("a")
    sp.add_argument("b")
    basis_opts(sp)
    sp.set_defaults(func=cmd_op)

    sp = sub.add_parser("convert", help="rewrite an element in the M or F basis")
    sp.add_argument("elem")
    basis_opts(sp)
    sp.set_defaults(func=cmd_convert)

    sp = sub.add_parser("dual-immaculate", help="dual immaculate function of a composition")
    sp.add_argument("comp")
    sp.add_argument("--method", choices=sorted(METHODS), default="tableaux")
    basis_opts(sp)
    sp.set_defaults(func=cmd_dual_immaculate)

    sp = sub.add_parser("wop", help="apply the creation operator W_m")
    sp.add_argument("m", type=int)
    sp.add_argument("elem")
    basis_opts(sp)
    sp.set_defaults(func=cmd_wop)

    sp = sub.add_parser("wq-op", help="restricted product on WQSym")
    sp.add_argument("name", choices=("mul",) + WQ_OPS)
    sp.add_argument("u")
    sp.add_argument("v")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_wq_op)

    sp = sub.add_parser("fq-op", help="restricted product on FQSym")
    sp.add_argument("name", choices=FQ_OPS)
    sp.add_argument("s")
    sp.add_argument("t")
    sp.set_defaults(func=cmd_fq_op)

    sp = sub.add_parser("project", help="commutative image of a WQSym element")
    sp.add_argument("elem")
    basis_opts(sp)
    sp.set_defaults(func=cmd_project)

    sp = sub.add_parser("verify", help="run an identity-verification suite")
    sp.add_argument("suite", choices=sorted(SUITES) + ["all"])
    sp.add_argument("--max-degree", type=int, default=None)
    sp.add_argument("--with-oracle", action="store_true")
    sp.add_argument("--json", action="store_true")
    sp.add_argument("--seed", type=int, default=None)
    sp.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (ParseError, ValueError) as exc:
        print(f"qsymops: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
