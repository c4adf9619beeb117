"""Command-line front end.

Every subcommand prints a single JSON document on standard output:

    {"status": "ok", "schema": "seifol/1", "payload": {...}, "provenance": ...}

Exit codes: 0 for success, 1 for a domain error (reported as a JSON error
document with a stable code), 2 for a usage error.  ``--pretty`` indents
the output; there is no color and no environment configuration.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import gluing, link_surgery, presentations, rationals, torus_covers
from .errors import NotationError, SeifolError
from .foliation import FoliationDecision, decide_excellence, decide_horizontal
from .seifert import (
    SeifertInvariants,
    euler_number,
    format_seifert,
    h1_order,
    normalize,
    parse_seifert,
    reverse_orientation,
)

SCHEMA = "seifol/1"


def _seifert_payload(si: SeifertInvariants) -> dict:
    return {
        "b": si.b,
        "fibers": [{"alpha": a, "beta": be} for a, be in si.fibers],
        "notation": format_seifert(si),
    }


def _decision_payload(decision: FoliationDecision) -> dict:
    out: dict = {"horizontal": decision.horizontal}
    if decision.kind == "inapplicable":
        out["inapplicable"] = decision.reason
    if decision.condition is not None:
        out["condition"] = decision.condition
    if decision.witness is not None:
        w = decision.witness
        out["m"] = w.m
        out["a"] = w.a
        out["roles"] = list(w.roles)
        if w.on_reverse:
            out["on_reverse"] = True
    return out


def _cmd_cf_eval(args):
    cf = rationals.parse_continued_fraction(args.cf)
    return {"value": str(rationals.cf_eval(cf))}, None


def _cmd_cf_expand(args):
    r = rationals.parse_rational(args.value)
    cf = rationals.cf_expand(r, args.policy)
    return {"terms": list(cf.terms), "notation": str(cf)}, None


def _cmd_seifert(args):
    si = parse_seifert(args.form)
    op = args.op
    if op == "normalize":
        return _seifert_payload(normalize(si)), None
    if op == "reverse":
        return _seifert_payload(reverse_orientation(si)), None
    if op == "euler":
        return {"euler": str(euler_number(si))}, None
    if op == "h1":
        h = h1_order(si)
        return {"order": h.order, "finite": h.is_finite}, None
    if op == "decide":
        payload = _decision_payload(decide_horizontal(normalize(si)))
        verdict = decide_excellence(si)
        payload["verdict"] = verdict.kind
        payload["reason"] = verdict.reason
        return payload, None
    raise AssertionError(op)


def _cmd_classify(args):
    qr = torus_covers.parse_query(args.n, args.p, args.q)
    verdict = torus_covers.classify_torus_cover(qr)
    return {"verdict": verdict.kind, "reason": verdict.reason}, None


def _cmd_invariants(args):
    qr = torus_covers.parse_query(args.n, args.p, args.q)
    result = torus_covers.branched_invariants(qr)
    if not result.known:
        return {"known": False, "source": None}, None
    si = result.invariants
    payload = _seifert_payload(si)
    payload["known"] = True
    payload["source"] = result.source
    payload["euler"] = str(euler_number(si))
    payload["h1"] = h1_order(si).order
    return payload, result.source


def _cmd_crosscheck(args):
    n_max, p_max, q_max = args.sweep
    report = torus_covers.crosscheck_sweep(n_max, p_max, q_max)
    report["total_l_spaces"] = [list(t) for t in report["total_l_spaces"]]
    return report, None


def _cmd_surgery(args):
    ext = link_surgery.TorusLinkExterior(args.d, args.r, args.s)
    slopes = [link_surgery.parse_slope(s) for s in args.slopes]
    si = link_surgery.fill(ext, slopes, mirror=args.mirror)
    payload = _seifert_payload(si)
    verdict = decide_excellence(si)
    payload["verdict"] = verdict.kind
    payload["reason"] = verdict.reason
    return payload, None


def _parse_matrix(text: str) -> gluing.SlopeMap:
    parts = text.replace("[", " ").replace("]", " ").replace(",", " ").split()
    if len(parts) != 4:
        raise NotationError(f"need 4 matrix entries, got {text!r}")
    try:
        a, b, c, d = (int(p) for p in parts)
    except ValueError as exc:
        raise NotationError(f"bad matrix {text!r}: {exc}") from exc
    try:
        return gluing.SlopeMap(a, b, c, d)
    except ValueError as exc:
        raise NotationError(str(exc)) from exc


def _matrix_payload(f: gluing.SlopeMap) -> list[list[int]]:
    return [list(r) for r in f.rows]


def _cmd_slope_apply(args):
    f = _parse_matrix(args.matrix)
    sl = link_surgery.parse_slope(args.slope)
    a, c = gluing.apply_slope_map(f, (sl.a, sl.c))
    return {"slope": f"{a}/{c}", "a": a, "c": c}, None


def _cmd_slope_compose(args):
    maps = [_parse_matrix(m) for m in args.matrices]
    f = gluing.compose_slope_maps(maps)
    return {"matrix": _matrix_payload(f), "det": f.det}, None


def _cmd_slope_fixed(args):
    f = _parse_matrix(args.matrix)
    fixed = gluing.fixed_unit_fraction_slopes(f)
    if isinstance(fixed, gluing.AllIntegers):
        return {"fixed": "all"}, None
    return {"fixed": sorted(fixed)}, None


def _cmd_cable_family(args):
    row = gluing.get_cable_row(args.case)
    si = gluing.cable_family_invariants(row, args.k)
    payload = _seifert_payload(si)
    payload["decision"] = _decision_payload(decide_horizontal(si))
    return payload, row.label


def _cmd_cable_check(args):
    row = gluing.get_cable_row(args.case)
    report = gluing.cable_family_check(row, args.kmin, args.kmax)
    return {
        "checked": list(report.checked),
        "failures": [list(f) for f in report.failures],
        "ok": report.ok,
    }, row.label


def _cmd_present(args):
    if args.family == "twobridge":
        if len(args.params) != 3:
            raise NotationError("twobridge takes parameters k l n")
        pres = presentations.present_two_bridge_cover(*args.params)
    else:
        if len(args.params) != 3:
            raise NotationError("pretzel takes parameters k l m")
        pres = presentations.present_pretzel_cover(*args.params)
    return {
        "generators": list(pres.generators),
        "relators": [str(r) for r in pres.relators],
        "text": presentations.format_presentation(pres),
    }, None


def _load_presentation(source: str) -> presentations.GroupPresentation:
    if source.startswith("builtin:"):
        _, name, params = source.split(":", 2)
        values = [int(x) for x in params.split(",")]
        if name == "pretzel":
            return presentations.present_pretzel_cover(*values)
        if name == "twobridge":
            return presentations.present_two_bridge_cover(*values)
        raise NotationError(f"unknown builtin {name!r}")
    if source == "-":
        return presentations.parse_presentation(sys.stdin.read())
    with open(source, encoding="utf-8") as fh:
        return presentations.parse_presentation(fh.read())


def _cmd_lo_check(args):
    pres = _load_presentation(args.presentation)
    report = presentations.coarse_obstruction(pres)
    return {
        "obstructed": report.obstructed,
        "assignments_checked": report.assignments_checked,
        "survivors": ["".join(s) for s in report.survivors],
        "nontriviality_assumed": report.nontriviality_assumed,
    }, None


def _cmd_pretzel_surgery(args):
    desc = presentations.pretzel_surgery_description(args.n, args.k, args.l, args.sign)
    return {
        "strands": list(desc.strands),
        "coefficient": str(desc.coefficient),
        "orientation_reversed": desc.orientation_reversed,
    }, None


def build_parser() -> argparse.ArgumentParser:
    # --pretty is accepted both before and after the subcommand; SUPPRESS on
    # the per-command copy keeps it from clobbering the top-level value.
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--pretty", action="store_true", default=argparse.SUPPRESS, help="indent the JSON output"
    )
    parser = argparse.ArgumentParser(
        prog="seifol",
        description="Exact computations with Seifert invariants of branched "
        "covers, horizontal foliations, and left-order obstructions.",
    )
    parser.add_argument("--pretty", action="store_true", help="indent the JSON output")
    sub = parser.add_subparsers(dest="command", required=True)

    p_cf = sub.add_parser("cf", help="continued fractions")
    cf_sub = p_cf.add_subparsers(dest="op", required=True)
    p = cf_sub.add_parser("eval", parents=[common], help="evaluate a bracket expansion")
    p.add_argument("cf", help='bracketed list, e.g. "[2,-2]"')
    p.set_defaults(handler=_cmd_cf_eval)
    p = cf_sub.add_parser("expand", parents=[common], help="expand a rational")
    p.add_argument("value", help='rational, e.g. "19/3"')
    p.add_argument(
        "--policy",
        choices=[rationals.CANONICAL_POSITIVE, rationals.EVEN_TERMS],
        default=rationals.CANONICAL_POSITIVE,
    )
    p.set_defaults(handler=_cmd_cf_expand)

    p = sub.add_parser("seifert", parents=[common], help="operations on Seifert forms")
    p.add_argument("op", choices=["normalize", "reverse", "euler", "h1", "decide"])
    p.add_argument("form", help='e.g. "M(-1; 1/2, 1/3, 1/8)"')
    p.set_defaults(handler=_cmd_seifert)

    p = sub.add_parser("classify", parents=[common], help="finite/infinite classifier for torus-knot covers")
    p.add_argument("n")
    p.add_argument("p")
    p.add_argument("q")
    p.set_defaults(handler=_cmd_classify)

    p = sub.add_parser("invariants", parents=[common], help="Seifert invariants of a torus-knot cover")
    p.add_argument("n")
    p.add_argument("p")
    p.add_argument("q")
    p.set_defaults(handler=_cmd_invariants)

    p = sub.add_parser("crosscheck", parents=[common], help="cross-validate classifier against invariants")
    p.add_argument("--sweep", nargs=3, type=int, default=[9, 9, 9], metavar=("N", "P", "Q"))
    p.set_defaults(handler=_cmd_crosscheck)

    p = sub.add_parser("surgery", parents=[common], help="fill a torus-link exterior")
    p.add_argument("d", type=int)
    p.add_argument("r", type=int)
    p.add_argument("s", type=int)
    p.add_argument("slopes", nargs="+", help='meridian-longitude slopes "a/c"')
    p.add_argument("--mirror", action="store_true", help="surger the mirror link")
    p.set_defaults(handler=_cmd_surgery)

    p_slope = sub.add_parser("slope", help="slope-map calculus")
    slope_sub = p_slope.add_subparsers(dest="op", required=True)
    p = slope_sub.add_parser("apply", parents=[common])
    p.add_argument("matrix", help='"[[a,b],[c,d]]" or "a,b,c,d"')
    p.add_argument("slope", help='"a/c"')
    p.set_defaults(handler=_cmd_slope_apply)
    p = slope_sub.add_parser("compose", parents=[common])
    p.add_argument("matrices", nargs="+", help="matrices in application order")
    p.set_defaults(handler=_cmd_slope_compose)
    p = slope_sub.add_parser("fixed", parents=[common])
    p.add_argument("matrix")
    p.set_defaults(handler=_cmd_slope_fixed)

    p_cable = sub.add_parser("cable", help="parametrized cable families")
    cable_sub = p_cable.add_subparsers(dest="op", required=True)
    p = cable_sub.add_parser("family", parents=[common])
    p.add_argument("case")
    p.add_argument("k", type=int)
    p.set_defaults(handler=_cmd_cable_family)
    p = cable_sub.add_parser("check", parents=[common])
    p.add_argument("case")
    p.add_argument("kmin", type=int)
    p.add_argument("kmax", type=int)
    p.set_defaults(handler=_cmd_cable_check)

    p = sub.add_parser("present", parents=[common], help="branched-cover group presentations")
    p.add_argument("family", choices=["twobridge", "pretzel"])
    p.add_argument("params", nargs="+", type=int)
    p.set_defaults(handler=_cmd_present)

    p_lo = sub.add_parser("lo", help="left-order obstruction search")
    lo_sub = p_lo.add_subparsers(dest="op", required=True)
    p = lo_sub.add_parser("check", parents=[common])
    p.add_argument(
        "presentation",
        help='file, "-" for stdin, or builtin:pretzel:k,l,m / builtin:twobridge:k,l,n',
    )
    p.set_defaults(handler=_cmd_lo_check)

    p = sub.add_parser("pretzel-surgery", parents=[common], help="surgery description of a two-bridge cover")
    p.add_argument("n", type=int)
    p.add_argument("k", type=int)
    p.add_argument("l", type=int)
    p.add_argument("sign", choices=["+", "-"])
    p.set_defaults(handler=_cmd_pretzel_surgery)

    return parser


def _emit(document: dict, pretty: bool) -> None:
    if pretty:
        json.dump(document, sys.stdout, indent=2, sort_keys=True)
    else:
        json.dump(document, sys.stdout, sort_keys=True)
    sys.stdout.write("\n")


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        payload, provenance = args.handler(args)
    except SeifolError as exc:
        _emit({"status": "error", "code": exc.code, "message": str(exc)}, args.pretty)
        return 1
    except (ValueError, OSError) as exc:
        _emit({"status": "error", "code": "domain-error", "message": str(exc)}, args.pretty)
        return 1
    document = {"status": "ok", "schema": SCHEMA, "payload": payload}
    if provenance is not None:
        document["provenance"] = provenance
    _emit(document, args.pretty)
    return 0


if __name__ == "__main__":
    sys.exit(main())
