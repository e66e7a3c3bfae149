"""Command-line front end: ``kummer-sg <command> ...``.

Data goes to stdout, diagnostics to stderr.  The output format comes from
``--format``, else the ``KUMMER_SG_FORMAT`` environment variable, else
``table``.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import verify as verify_mod
from .closure import contains, semigroup_box
from .curve import INFINITY, CurveParams, Place, PlaceTuple, validate_params
from .errors import KummerError, NotAGammaElement
from .gamma import GammaSet, gamma
from .onepoint import OnePointSemigroup, gaps_at
from .oracle import pure_gaps_box
from .output import FORMATS, OutputDocument, coordinate_header, render, vector_text
from .witness import witness_divisor, witness_function

FORMAT_ENV = "KUMMER_SG_FORMAT"


class UsageError(Exception):
    pass


def _int_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _place(text: str) -> Place:
    if text.strip().lower() == "inf":
        return INFINITY
    try:
        return Place(int(text))
    except ValueError:
        raise argparse.ArgumentTypeError(f"place must be 'inf' or an index, got {text!r}") from None


def _params(args) -> CurveParams:
    return validate_params(args.r, args.m, args.lam, args.characteristic)


def _tuple(args, params: CurveParams) -> PlaceTuple:
    tup = PlaceTuple.parse(args.places).check(params)
    return tup


def _vector_doc(command, params, tup, elements, extra=None) -> OutputDocument:
    payload = {"count": len(elements), "elements": [list(v) for v in elements]}
    if extra:
        payload.update(extra)
    return OutputDocument(
        command, payload, params.as_dict(), tup.spec(),
        header=coordinate_header(tup.places), rows=[list(v) for v in elements],
        table_lines=[vector_text(v) for v in elements])


def cmd_genus(args) -> OutputDocument:
    params = _params(args)
    g = params.genus
    return OutputDocument("genus", {"genus": g}, params.as_dict(),
                          header=["genus"], rows=[[g]])


def cmd_gaps(args) -> OutputDocument:
    params = _params(args)
    place = args.place
    if not place.is_infinity and not 1 <= place.index <= params.r:
        raise UsageError(f"place index must lie in [1, {params.r}]")
    gaps = gaps_at(params, place).gaps
    return OutputDocument(
        "gaps", {"place": "inf" if place.is_infinity else place.index, "gaps": list(gaps)},
        params.as_dict(), header=["gap"], rows=[[n] for n in gaps],
        table_lines=[" ".join(str(n) for n in gaps)])


def cmd_gamma(args) -> OutputDocument:
    params = _params(args)
    tup = _tuple(args, params)
    result = gamma(params, tup)
    if isinstance(result, OnePointSemigroup):
        bound = args.bound if args.bound is not None else 2 * params.genus
        elements = [(h,) for h in result.elements(bound)]
        return _vector_doc("gamma", params, tup, elements,
                           {"bound": bound, "gaps": list(result.gaps)})
    assert isinstance(result, GammaSet)
    return _vector_doc("gamma", params, tup, result.elements)


def cmd_semigroup(args) -> OutputDocument:
    params = _params(args)
    tup = _tuple(args, params)
    bound = args.bound if args.bound is not None else 2 * params.genus
    box = semigroup_box(params, tup, bound)
    return _vector_doc("semigroup", params, tup, box.members, {"bound": bound})


def cmd_member(args) -> OutputDocument:
    params = _params(args)
    tup = _tuple(args, params)
    v = tuple(args.vector)
    if len(v) != tup.length:
        raise UsageError(f"vector has {len(v)} coordinates, tuple has {tup.length} places")
    ok = contains(params, tup, v)
    return OutputDocument("member", {"vector": list(v), "member": ok},
                          params.as_dict(), tup.spec(), header=["member"], rows=[[ok]])


def cmd_pure_gaps(args) -> OutputDocument:
    params = _params(args)
    tup = _tuple(args, params)
    if tup.length < 2:
        raise UsageError("pure gaps need at least two places")
    elements = pure_gaps_box(params, tup)
    return _vector_doc("pure-gaps", params, tup, elements,
                       {"bound": max(2 * params.genus - 1, 0)})


def cmd_witness(args) -> OutputDocument:
    params = _params(args)
    tup = _tuple(args, params)
    v = tuple(args.vector)
    if len(v) != tup.length:
        raise UsageError(f"vector has {len(v)} coordinates, tuple has {tup.length} places")
    try:
        mono = witness_function(params, tup, v)
    except NotAGammaElement:
        raise UsageError(f"{vector_text(v)} is not a generating-set element") from None
    div = witness_divisor(params, tup, v)
    places = [INFINITY] + [Place(i) for i in range(1, params.r + 1)]
    rows = [["z", mono.z_exp, ""]]
    rows += [[str(Place(i)), e, ""] for i, e in enumerate(mono.linear_exps, 1)]
    rows += [[str(p), "", div.coefficient(p)] for p in places]
    lines = [f"monomial: {mono}",
             "divisor: " + " ".join(f"{div.coefficient(p)}*{p}" for p in places),
             f"pole part: {vector_text(div.pole_part(tup))}"]
    return OutputDocument(
        "witness",
        {"vector": list(v), "monomial": mono.as_dict(), "divisor": div.as_dict(),
         "pole_part": list(div.pole_part(tup))},
        params.as_dict(), tup.spec(),
        header=["factor", "exponent", "divisor"], rows=rows, table_lines=lines)


def cmd_verify(args) -> tuple[OutputDocument, int]:
    if args.max_r < 3 or args.max_m < 2 or args.max_l < 1 or args.workers < 1:
        raise UsageError("need --max-r >= 3, --max-m >= 2, --max-l >= 1, --workers >= 1")
    results = verify_mod.run_verify(args.max_r, args.max_m, args.lambdas, args.max_l,
                                    workers=args.workers)
    passed = all(res.passed for res in results)
    rows = [[res.r, res.m, res.lam, res.shapes, res.status, ";".join(res.failures)]
            for res in results]
    lines = [f"r={res.r} m={res.m} lambda={res.lam} shapes={res.shapes} {res.status}"
             + (f" [{'; '.join(res.failures)}]" if res.failures else "")
             for res in results]
    lines.append(f"{sum(res.passed for res in results)}/{len(results)} cases passed")
    doc = OutputDocument(
        "verify",
        {"bounds": {"max_r": args.max_r, "max_m": args.max_m,
                    "lambdas": sorted(set(args.lambdas)), "max_l": args.max_l},
         "passed": passed, "cases": [res.as_dict() for res in results]},
        header=["r", "m", "lambda", "shapes", "status", "failures"], rows=rows,
        table_lines=lines)
    return doc, 0 if passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kummer-sg",
        description="Weierstrass semigroups at ramified places of y^m = f(x)^lambda.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, places=False, vector=False, bound=False):
        p.add_argument("-r", type=int, required=True, help="number of roots of f")
        p.add_argument("-m", type=int, required=True, help="Kummer exponent")
        p.add_argument("-l", "--lambda", dest="lam", type=int, default=1,
                       help="exponent of f (default 1)")
        p.add_argument("--characteristic", type=int, default=None,
                       help="field characteristic; only checked against m")
        p.add_argument("--format", choices=FORMATS, default=None)
        if places:
            p.add_argument("--places", required=True,
                           help="comma-separated places, e.g. inf,1,2")
        if vector:
            p.add_argument("--vector", type=_int_list, required=True)
        if bound:
            p.add_argument("--bound", type=int, default=None,
                           help="coordinate bound (default 2g)")
        return p

    common(sub.add_parser("genus", help="genus of the curve")).set_defaults(func=cmd_genus)
    p = common(sub.add_parser("gaps", help="gap set at one place"))
    p.add_argument("--place", type=_place, required=True, help="'inf' or an index")
    p.set_defaults(func=cmd_gaps)
    common(sub.add_parser("gamma", help="minimal generating set"),
           places=True, bound=True).set_defaults(func=cmd_gamma)
    common(sub.add_parser("semigroup", help="semigroup members in a box"),
           places=True, bound=True).set_defaults(func=cmd_semigroup)
    common(sub.add_parser("member", help="semigroup membership"),
           places=True, vector=True).set_defaults(func=cmd_member)
    common(sub.add_parser("pure-gaps", help="pure gaps via the dimension oracle"),
           places=True).set_defaults(func=cmd_pure_gaps)
    common(sub.add_parser("witness", help="monomial realizing a generating-set element"),
           places=True, vector=True).set_defaults(func=cmd_witness)

    p = sub.add_parser("verify", help="compare closed forms with the oracle")
    p.add_argument("--max-r", type=int, default=7)
    p.add_argument("--max-m", type=int, default=7)
    p.add_argument("--lambdas", type=_int_list, default=[1])
    p.add_argument("--max-l", type=int, default=4, help="maximum total tuple length")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--format", choices=FORMATS, default=None)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    fmt = args.format or os.environ.get(FORMAT_ENV) or "table"
    if fmt not in FORMATS:
        print(f"error: {FORMAT_ENV}={fmt!r} is not one of {', '.join(FORMATS)}", file=sys.stderr)
        return 2
    try:
        result = args.func(args)
    except (KummerError, UsageError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    doc, code = result if isinstance(result, tuple) else (result, 0)
    sys.stdout.write(render(doc, fmt))
    return code


if __name__ == "__main__":
    sys.exit(main())
