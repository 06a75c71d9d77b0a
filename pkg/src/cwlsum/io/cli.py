"""Command line interface.

Ideals are given as expressions, evaluated either in a document loaded with
``-f FILE`` / ``-e TEXT`` (so its names can be used) or in ``--ring``.

Exit codes: 0 done (whatever the verdict), 2 parse or input error,
3 a criterion was not applicable and ``--strict`` was given,
4 an internal cross-check failed or a campaign found violations.
"""
from __future__ import annotations

import argparse
import sys

from .. import criteria, dim2, fullset
from ..errors import AssignmentError, CrossCheckError, CwlError, ParseError
from ..monomial import Ring, colon, component
from ..resolution import (betti, betti_oracle_dim2, betti_oracle_lcm_lattice, is_cwl,
                          is_componentwise_linear, regularity)
from ..verify import CAMPAIGNS, run_campaign
from . import golden
from .parser import IdealDocument, Parser, format_stmt, parse
from .report import plain, report

EXIT_OK, EXIT_INPUT, EXIT_STRICT, EXIT_BUG = 0, 2, 3, 4


class InputError(Exception):
    pass


def _doc(args):
    if getattr(args, "file", None):
        with open(args.file, encoding="utf-8") as fh:
            return parse(fh.read())
    if getattr(args, "text", None):
        return parse(args.text)
    if getattr(args, "ring", None):
        return IdealDocument(ring=Ring(args.ring))
    raise InputError("give a document with -f/-e or a ring with --ring")


def _ideal(doc, text):
    p = Parser(text)
    e = p.expr()
    if p.tok.kind != "eof":
        raise p._err(f"trailing input {p.tok.text!r}")
    return doc.eval(e)


def _emit(args, obj, text):
    print(report(obj) if args.json else text)


def _verdict_text(v):
    lines = [f"{v.criterion}: {str(v.conclusion).lower()}"
             + ("" if v.applicable else " (not applicable)")]
    for lab, w in v.witnesses:
        lines.append(f"  {lab}: {plain(w)}")
    for k, b in v.bounds.items():
        lines.append(f"  bound {k} = {b}")
    if v.direct is not None:
        lines.append(f"  direct check: {str(v.direct).lower()}")
    if not v.consistent:
        lines.append("  INCONSISTENT with the direct check")
    return "\n".join(lines)


def _status(args, verdicts):
    if any(not v.consistent for v in verdicts):
        return EXIT_BUG
    if args.strict and any(not v.applicable for v in verdicts):
        return EXIT_STRICT
    return EXIT_OK


# ---- subcommands --------------------------------------------------------------

def cmd_check_cwl(args):
    v = is_componentwise_linear(_ideal(_doc(args), args.ideal))
    _emit(args, v, _verdict_text(v))
    return _status(args, [v])


def cmd_betti(args):
    I = _ideal(_doc(args), args.ideal)
    t = betti(I)
    if args.oracle != "koszul":
        others = {"lcm": [betti_oracle_lcm_lattice], "dim2": [betti_oracle_dim2],
                  "all": [betti_oracle_lcm_lattice] + ([betti_oracle_dim2] if I.ring.n == 2
                                                       else [])}[args.oracle]
        for fn in others:
            if fn(I) != t:
                raise CrossCheckError(f"{fn.__name__} disagrees with the Koszul route on {I}")
    _emit(args, t, f"{I}\n{t.format()}\n{t}")
    return EXIT_OK


def cmd_reg(args):
    r = regularity(_ideal(_doc(args), args.ideal))
    _emit(args, r, f"reg = {r.reg}, pd = {r.pd}, attained at beta_{r.witness[0]} "
                   f"in multidegree {r.witness[1]}")
    return EXIT_OK


def cmd_binop(args):
    doc = _doc(args)
    I, J = _ideal(doc, args.ideal), _ideal(doc, args.other)
    op = {"intersect": lambda: I & J, "sum": lambda: I + J, "colon": lambda: colon(I, J)}
    out = op[args.cmd]()
    _emit(args, {"result": out}, str(out))
    return EXIT_OK


def cmd_component(args):
    out = component(_ideal(_doc(args), args.ideal), args.degree)
    _emit(args, {"result": out}, str(out))
    return EXIT_OK


def cmd_sum_check(args):
    doc = _doc(args)
    I, J = _ideal(doc, args.ideal), _ideal(doc, args.other)
    which = args.criteria
    vs = []
    if which in ("fullsum", "all"):
        vs.append(dim2.fullsum_verdict(I, J))
    if which in ("hv", "all"):
        vs.append(criteria.check_hv_criterion(I, J, s_max=args.s_max))
    if which in ("componentwise", "all"):
        vs.append(criteria.check_componentwise_criterion(I, J, t_max=args.t_max))
    if which == "all":
        vs += [criteria.check_cwl_plus_linear(I, J), criteria.check_nJ_sum(I, J),
               dim2.reg_plus_one_verdict(I, J, s_max=args.s_max), dim2.mu_additive_verdict(I, J)]
    _emit(args, vs, "\n".join(_verdict_text(v) for v in vs))
    return _status(args, vs)


def cmd_order(args):
    c = dim2.cwl_ordering(_ideal(_doc(args), args.ideal))
    if c.success:
        text = "ordering: " + ", ".join(map(str, c.order)) + "\ncolons: " + ", ".join(c.colon_vars)
    else:
        text = f"no ordering: fails at step {c.failure_step}: {c.obstruction}"
    _emit(args, c, text)
    return EXIT_OK if c.consistent else EXIT_BUG


def cmd_fullset(args):
    doc = _doc(args)
    if args.name not in doc.fullsets:
        raise InputError(f"no fullset named {args.name!r}")
    L, A = doc.fullsets[args.name], doc.assignments[args.name]
    v = fullset.validate_assignment(L, A)
    if args.action == "validate":
        _emit(args, v, _verdict_text(v))
        return _status(args, [v])
    S = fullset.assemble(L, A, force=args.force)
    cw = S.is_unit or is_cwl(S)
    _emit(args, {"assembled": S, "valid": v.holds, "componentwise_linear": cw},
          f"{S}\nvalid assignment: {str(v.holds).lower()}\ncomponentwise linear: {str(cw).lower()}")
    if v.holds and not cw:
        return EXIT_BUG
    return EXIT_OK


def cmd_full_check(args):
    v = dim2.fullness_checks(_ideal(_doc(args), args.ideal), d_max=args.d_max)
    text = _verdict_text(v) + "\n" + "\n".join(f"  {k}: {str(b).lower()}"
                                               for k, b in v.details.items())
    _emit(args, v, text)
    return _status(args, [v])


def cmd_campaign(args):
    params = {}
    if args.count is not None:
        params["count"] = args.count
    if args.max_degree is not None:
        params["D"] = args.max_degree
    rep = run_campaign(args.theorem, seed=args.seed, **params)
    text = (f"{rep.theorem_id}: checked {rep.checked}, violations {len(rep.violations)}, "
            f"{rep.seconds:.2f}s\n" + "\n".join(f"  {w}" for w in rep.violations[:20]))
    _emit(args, rep, text.rstrip())
    return EXIT_OK if rep.passed else EXIT_BUG


def cmd_golden(args):
    paths = args.files or golden.golden_files()
    bad = 0
    out = {}
    for p in paths:
        text = p.read_text(encoding="utf-8") if hasattr(p, "read_text") else open(p).read()
        doc = parse(text)
        res = golden.check_document(doc)
        bad += sum(not r.ok for r in res)
        name = getattr(p, "name", str(p))
        out[name] = [{"check": format_stmt(r.stmt), "ok": r.ok} for r in res]
        if not args.json:
            print(f"== {name}")
            for r in res:
                print("  " + r.line())
    if args.json:
        print(report(out))
    return EXIT_OK if not bad else EXIT_BUG


def cmd_fmt(args):
    with open(args.path, encoding="utf-8") as fh:
        sys.stdout.write(parse(fh.read()).to_text())
    return EXIT_OK


def build_parser():
    ap = argparse.ArgumentParser(prog="cwlsum",
                                 description="componentwise linearity of monomial ideal sums")
    common = argparse.ArgumentParser(add_help=False)
    src = common.add_mutually_exclusive_group()
    src.add_argument("-f", "--file", help="ideal document to load")
    src.add_argument("-e", "--text", help="ideal document given inline")
    src.add_argument("--ring", help='variables, e.g. "x y"')
    common.add_argument("--json", action="store_true")
    common.add_argument("--strict", action="store_true",
                        help="exit 3 when a criterion is not applicable")
    sub = ap.add_subparsers(dest="cmd", required=True)

    def one(name, fn, help_):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.add_argument("ideal")
        p.set_defaults(func=fn)
        return p

    one("check-cwl", cmd_check_cwl, "componentwise linearity with witnesses")
    p = one("betti", cmd_betti, "multigraded Betti table")
    p.add_argument("--oracle", choices=["koszul", "lcm", "dim2", "all"], default="koszul",
                   help="cross-check against another route")
    one("reg", cmd_reg, "regularity")
    for name in ("intersect", "colon", "sum"):
        p = one(name, cmd_binop, f"{name} of two ideals")
        p.add_argument("other")
    p = one("component", cmd_component, "ideal generated by the degree-j part")
    p.add_argument("degree", type=int)
    p = one("sum-check", cmd_sum_check, "criteria for I + J")
    p.add_argument("other")
    p.add_argument("--criteria", choices=["fullsum", "hv", "componentwise", "all"], default="all")
    p.add_argument("--t-max", type=int)
    p.add_argument("--s-max", type=int)
    one("order", cmd_order, "linear-quotient ordering certificate (two variables)")
    p = one("full-check", cmd_full_check, "full / m-full / componentwise linear")
    p.add_argument("--d-max", type=int)
    p = sub.add_parser("fullset", parents=[common], help="validate or assemble a full-set block")
    p.add_argument("action", choices=["validate", "assemble"])
    p.add_argument("name")
    p.add_argument("--force", action="store_true")
    p.set_defaults(func=cmd_fullset)
    p = sub.add_parser("campaign", parents=[common], help="theorem-validation sweep")
    p.add_argument("theorem", choices=sorted(CAMPAIGNS))
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int)
    p.add_argument("--max-degree", type=int)
    p.set_defaults(func=cmd_campaign)
    p = sub.add_parser("golden", parents=[common], help="check expect lines of documents")
    p.add_argument("files", nargs="*")
    p.set_defaults(func=cmd_golden)
    p = sub.add_parser("fmt", help="print a document in canonical form")
    p.add_argument("path")
    p.set_defaults(func=cmd_fmt)
    return ap


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (CrossCheckError, AssertionError) as exc:
        print(f"cross-check failed: {exc}", file=sys.stderr)
        return EXIT_BUG
    except (InputError, AssignmentError, CwlError, ValueError, KeyError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
