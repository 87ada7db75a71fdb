"""Command-line interface.

Verb-noun grammar, node sets as comma lists in Bourbaki numbering:

    magicsq weyl order --type E6
    magicsq weyl cosets --type E6 --parabolic 1,3,4,5,6
    magicsq weyl double-cosets --type E6 --left 3,4,5 --right 1,3,4,5,6 --star opposition
    magicsq poly eval-rational --num t^8-1,t^12-1,t^9+1 --den t-1,t^4-1,t^3+1
    magicsq poly divides --p 1+t^3+t^5+t^8 --q 1+t^3 [--semiring]
    magicsq poincare --type 2E6 --variety 1,6 [--conormed]
    magicsq jinv poly --group 2E6 --j 1,0,0
    magicsq jinv enumerate --group E7
    magicsq cgmb skeleton --ambient E6 --kernel 3,4,5 --variety 2
    magicsq cgmb check --fixture henke-y1
    magicsq cgmb blocks
    magicsq qform af-e7 --q definite --o definite --gamma +,+,+
    magicsq tables magic | conditions --group 2E6 | tits-index --rost not-pure-symbol
    magicsq verify [--filter 'dims-*']

Exit codes: 0 success, 1 verification failure, 2 usage error.
JSON output is byte-deterministic for fixed arguments.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import cgmb, jinv, magictables, poincare, qform, verify, weyl
from .polyring import (
    IntPoly,
    divides_ring,
    divides_semiring,
    eval_rational,
    format_poly,
    parse_poly,
    to_json_dict,
)
from .rootsys import (
    CartanType,
    build_root_system,
    identity_aut,
    opposition_involution,
)

_USAGE_ERROR = 2


def _emit_json(obj) -> None:
    sys.stdout.write(json.dumps(obj, sort_keys=True, indent=2) + "\n")


def _nodes(text: str) -> frozenset[int]:
    text = text.strip()
    if not text:
        return frozenset()
    try:
        return frozenset(int(p) for p in text.split(","))
    except ValueError:
        raise ValueError(f"node list must be comma-separated integers, got {text!r}")


def _poly_list(text: str) -> list[IntPoly]:
    return [parse_poly(part) for part in text.split(",")]


def _poly_payload(p: IntPoly) -> dict:
    payload = to_json_dict(p)
    payload["degree"] = p.degree
    payload["pretty"] = format_poly(p)
    payload["value_at_1"] = p(1)
    return payload


def _gamma(text: str) -> tuple[int, int, int]:
    parts = text.split(",")
    if len(parts) != 3:
        raise ValueError("gamma needs exactly three entries, e.g. +,+,-")
    out = []
    for p in parts:
        p = p.strip()
        if p in ("+", "+1", "1"):
            out.append(1)
        elif p in ("-", "-1"):
            out.append(-1)
        else:
            raise ValueError(f"gamma entries must be +/- signs, got {p!r}")
    return tuple(out)  # type: ignore[return-value]


def _algebra(kind: str, word: str) -> qform.CompositionAlgebraR:
    if word not in ("definite", "split"):
        raise ValueError(f"algebra flavor must be 'definite' or 'split', got {word!r}")
    return qform.CompositionAlgebraR(kind, word == "definite")


def _build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="magicsq",
        description="Exact Weyl, polynomial, and quadratic-form computations "
        "for the magic-square groups.",
    )
    top.add_argument(
        "--format",
        choices=("json", "text", "csv"),
        default=None,
        help="output format (default json; verify defaults to text)",
    )
    top.add_argument(
        "--seed-independent",
        action="store_true",
        help="reserved; no command uses randomness",
    )
    top.add_argument(
        "--fixtures", default=None, help="path to an alternative fixtures document"
    )
    sub = top.add_subparsers(dest="command", required=True)

    w = sub.add_parser("weyl", help="Weyl group computations")
    wsub = w.add_subparsers(dest="verb", required=True)
    worder = wsub.add_parser("order")
    worder.add_argument("--type", required=True)
    wcosets = wsub.add_parser("cosets")
    wcosets.add_argument("--type", required=True)
    wcosets.add_argument("--parabolic", required=True)
    wdc = wsub.add_parser("double-cosets")
    wdc.add_argument("--type", required=True)
    wdc.add_argument("--left", required=True)
    wdc.add_argument("--right", required=True)
    wdc.add_argument("--star", choices=("none", "opposition"), default="none")

    p = sub.add_parser("poly", help="integer polynomial operations")
    psub = p.add_subparsers(dest="verb", required=True)
    pev = psub.add_parser("eval-rational")
    pev.add_argument("--num", required=True, help="comma list of factors")
    pev.add_argument("--den", required=True, help="comma list of factors")
    pdiv = psub.add_parser("divides")
    pdiv.add_argument("--p", required=True)
    pdiv.add_argument("--q", required=True)
    pdiv.add_argument("--semiring", action="store_true")

    pc = sub.add_parser("poincare", help="flag variety Poincare polynomials")
    pc.add_argument("--type", required=True)
    pc.add_argument("--variety", required=True, help="circled nodes, e.g. 1,6")
    pc.add_argument("--conormed", action="store_true")

    j = sub.add_parser("jinv", help="J-invariant profiles")
    jsub = j.add_subparsers(dest="verb", required=True)
    jp = jsub.add_parser("poly")
    jp.add_argument("--group", required=True)
    jp.add_argument("--j", required=True, help="value vector, e.g. 1,0,0")
    je = jsub.add_parser("enumerate")
    je.add_argument("--group", required=True)
    jsub.add_parser("table")

    c = sub.add_parser("cgmb", help="double-coset motive skeletons")
    csub = c.add_subparsers(dest="verb", required=True)
    cs = csub.add_parser("skeleton")
    cs.add_argument("--ambient", required=True)
    cs.add_argument("--kernel", required=True)
    cs.add_argument("--variety", required=True, help="circled nodes of the variety")
    cs.add_argument("--star", choices=("none", "opposition"), default="opposition")
    cc = csub.add_parser("check")
    cc.add_argument("--fixture", required=True)
    csub.add_parser("blocks")

    q = sub.add_parser("qform", help="real diagonal quadratic forms")
    qsub = q.add_subparsers(dest="verb", required=True)
    qa = qsub.add_parser("af-e7")
    qa.add_argument("--q", required=True, help="definite | split")
    qa.add_argument("--o", required=True, help="definite | split")
    qa.add_argument("--gamma", required=True, help="three signs, e.g. +,+,-")

    t = sub.add_parser("tables", help="pinned classification tables")
    tsub = t.add_subparsers(dest="verb", required=True)
    tm = tsub.add_parser("magic")
    tm.add_argument("--row", default=None)
    tm.add_argument("--col", default=None)
    tc = tsub.add_parser("conditions")
    tc.add_argument("--group", default=None)
    tt = tsub.add_parser("tits-index")
    tt.add_argument("--rost", default=None)
    tsub.add_parser("constructions")

    v = sub.add_parser("verify", help="run the pinned verification suite")
    v.add_argument("--filter", default=None, help="glob over check names")

    return top


def _cmd_weyl(args) -> int:
    rs = build_root_system(CartanType.from_string(args.type))
    if args.verb == "order":
        _emit_json({"type": args.type, "order": weyl.weyl_order(rs)})
        return 0
    if args.verb == "cosets":
        parabolic = _nodes(args.parabolic)
        counts = weyl.coset_length_counts(rs, parabolic)
        _emit_json(
            {
                "type": args.type,
                "parabolic": sorted(parabolic),
                "count": sum(counts.values()),
                "max_length": max(counts),
                "length_counts": [[l, counts[l]] for l in sorted(counts)],
            }
        )
        return 0
    left = _nodes(args.left)
    right = _nodes(args.right)
    star = opposition_involution(rs) if args.star == "opposition" else None
    cells = weyl.double_cosets(rs, left, right, star)
    _emit_json(
        {
            "type": args.type,
            "left": sorted(left),
            "right": sorted(right),
            "star": args.star,
            "cells": [
                {
                    "length": c.min_rep.length,
                    "orbit_size": c.orbit_size,
                    "star_invariant": c.star_invariant,
                }
                for c in cells
            ],
        }
    )
    return 0


def _cmd_poly(args) -> int:
    if args.verb == "eval-rational":
        result = eval_rational(_poly_list(args.num), _poly_list(args.den))
        _emit_json(_poly_payload(result))
        return 0
    p = parse_poly(args.p)
    q = parse_poly(args.q)
    ok, quot = (divides_semiring if args.semiring else divides_ring)(p, q)
    payload = {"divides": ok, "semiring": args.semiring}
    if quot is not None:
        payload["quotient"] = _poly_payload(quot)
    _emit_json(payload)
    return 0


def _cmd_poincare(args) -> int:
    fv = poincare.FlagVariety(
        CartanType.from_string(args.type), _nodes(args.variety)
    )
    poly = (
        poincare.conormed_poincare(fv) if args.conormed else poincare.poincare_poly(fv)
    )
    payload = _poly_payload(poly)
    payload["type"] = args.type
    payload["variety"] = sorted(fv.parabolic_type)
    payload["conormed"] = args.conormed
    payload["dim"] = poincare.dim_flag(fv)
    _emit_json(payload)
    return 0


def _cmd_jinv(args) -> int:
    if args.verb == "table":
        out = {}
        for label in jinv.supported_labels():
            prof = jinv.max_profile(label)
            out[label] = {"degrees": list(prof.degrees), "caps": list(prof.caps)}
        _emit_json({"prime": jinv.PRIME, "max_profiles": out})
        return 0
    if args.verb == "poly":
        values = tuple(int(x) for x in args.j.split(","))
        prof = jinv.profile(args.group, values)
        payload = _poly_payload(jinv.upper_motive_poly(prof))
        payload["group"] = prof.group_label
        payload["j"] = list(prof.values)
        payload["degrees"] = list(prof.degrees)
        _emit_json(payload)
        return 0
    profiles = jinv.enumerate_admissible(args.group)
    _emit_json(
        {
            "group": jinv.normalize_label(args.group),
            "degrees": list(profiles[0].degrees),
            "caps": list(profiles[0].caps),
            "constraints_pinned": jinv.has_pinned_chain(args.group),
            "values": [list(p.values) for p in profiles],
        }
    )
    return 0


def _cmd_cgmb(args, fixtures_doc) -> int:
    if args.verb == "skeleton":
        rs = build_root_system(CartanType.from_string(args.ambient))
        kernel = _nodes(args.kernel)
        variety = _nodes(args.variety)
        target = rs.node_set() - variety
        star = (
            opposition_involution(rs) if args.star == "opposition" else identity_aut(rs)
        )
        shifts = cgmb.tate_skeleton(rs, kernel, target, star)
        _emit_json(
            {
                "ambient": args.ambient,
                "kernel": sorted(kernel),
                "variety": sorted(variety),
                "levi": sorted(target),
                "star": args.star,
                "shifts": shifts,
            }
        )
        return 0
    if args.verb == "check":
        result = verify.run_fixture(args.fixture, fixtures_doc)
        _emit_json(result)
        return 0 if result["pass"] else 1
    _emit_json(
        {
            "blocks": [
                {"name": b.name, "kind": b.kind, "poly": _poly_payload(b.poly)}
                for b in cgmb.karpenko_blocks()
            ]
        }
    )
    return 0


def _cmd_qform(args) -> int:
    form = qform.af_killing_form_e7(
        _algebra(qform.QUATERNION, args.q),
        _algebra(qform.OCTONION, args.o),
        _gamma(args.gamma),
    )
    _emit_json(
        {
            "dim": form.dim,
            "signature": form.signature,
            "witt_index": form.witt_index,
            "anisotropic": form.is_anisotropic,
        }
    )
    return 0


def _cmd_tables(args, fmt) -> int:
    if args.verb == "magic":
        cells = magictables.magic_square()
        if args.row or args.col:
            if not (args.row and args.col):
                raise ValueError("--row and --col must be given together")
            cell = magictables.query_magic_square(args.row, args.col)
            _emit_json(
                {
                    "row": cell.row_label,
                    "col": cell.col_label,
                    "group": cell.group_type,
                    "degree": cell.invariant_degree,
                }
            )
            return 0
        if fmt == "csv":
            sys.stdout.write("row,col,group,degree\n")
            for c in cells:
                sys.stdout.write(
                    f"{c.row_label},{c.col_label},{c.group_type},{c.invariant_degree}\n"
                )
            return 0
        _emit_json(
            {
                "cells": [
                    {
                        "row": c.row_label,
                        "col": c.col_label,
                        "group": c.group_type,
                        "degree": c.invariant_degree,
                    }
                    for c in cells
                ]
            }
        )
        return 0
    if args.verb == "conditions":
        rows = magictables.condition_rows()
        if args.group:
            rows = (magictables.conditions_for(args.group),)
        _emit_json(
            {
                "rows": [
                    {
                        "group": r.group,
                        "degree": r.degree,
                        "j_values": list(r.j_values) if r.j_values else None,
                        "j_degrees": list(r.j_degrees) if r.j_degrees else None,
                        "condition": r.condition,
                        "equivalent_condition": r.equivalent_condition,
                        "parabolic": r.parabolic_label,
                        "binary_motive_dim": r.binary_motive_dim,
                    }
                    for r in rows
                ]
            }
        )
        return 0
    if args.verb == "tits-index":
        cases = magictables.tits_index_cases()
        if args.rost:
            cases = (magictables.tits_index_for_rost(args.rost),)
        _emit_json(
            {
                "cases": [
                    {
                        "rost_condition": c.rost_condition.value,
                        "circled_nodes": sorted(c.circled_nodes),
                        "kernel_type": c.kernel_type,
                        "quasi_split": c.quasi_split,
                        "impossible": c.impossible,
                    }
                    for c in cases
                ]
            }
        )
        return 0
    _emit_json(
        {
            "rows": [
                {
                    "group": r.group,
                    "construction": r.construction,
                    "inputs": r.inputs,
                    "condition": {
                        "lhs": r.condition_lhs,
                        "relation": r.condition_relation,
                        "rhs": r.condition_rhs,
                        "invariant_degree": r.invariant_degree,
                    },
                    "condition_text": r.condition_text,
                }
                for r in magictables.tits_construction_rows()
            ]
        }
    )
    return 0


def _cmd_verify(args, fmt) -> int:
    report = verify.run_verify(args.filter)
    if fmt == "json":
        _emit_json(report.to_json_obj())
    else:
        sys.stdout.write(report.to_text() + "\n")
    return report.exit_code


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    fixtures_doc = None
    if args.fixtures:
        with open(args.fixtures, "r", encoding="utf-8") as fh:
            fixtures_doc = json.load(fh)
    try:
        if args.command == "weyl":
            return _cmd_weyl(args)
        if args.command == "poly":
            return _cmd_poly(args)
        if args.command == "poincare":
            return _cmd_poincare(args)
        if args.command == "jinv":
            return _cmd_jinv(args)
        if args.command == "cgmb":
            return _cmd_cgmb(args, fixtures_doc)
        if args.command == "qform":
            return _cmd_qform(args)
        if args.command == "tables":
            return _cmd_tables(args, args.format or "json")
        if args.command == "verify":
            return _cmd_verify(args, args.format or "text")
        raise AssertionError(args.command)
    except (ValueError, ZeroDivisionError, ArithmeticError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return _USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
