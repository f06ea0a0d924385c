"""Command-line front end.

Exit codes: 0 = success / everything verified, 1 = a counterexample or
identity failure was found (or an --expect assertion missed), 2 = usage
error (unknown flags, malformed diagonal lists, invalid parameters).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .congruences import Theorem, verify_congruence
from .enumeration import central_census, census_to_json, count_vertex0_outside
from .model import DIAMETER, Dissection, parse_diagonals
from .recursions import (
    central_recursion_rhs,
    dyck_formula,
    fixed_vertex_outside,
    kang_recursion_rhs,
    quad_recursion_rhs,
)
from .sequences import (
    catalan,
    catalan_mod,
    fuss_catalan,
    kangulation_count,
    quadrangulation_count,
)
from .svg import render_svg


def _finish(value, args) -> int:
    print(value)
    if args.expect is not None and str(value) != args.expect:
        print(f"error: expected {args.expect}, got {value}", file=sys.stderr)
        return 1
    return 0


def _cmd_catalan(args) -> int:
    value = catalan_mod(args.n, args.mod) if args.mod is not None else catalan(args.n)
    return _finish(value, args)


def _cmd_fuss(args) -> int:
    return _finish(fuss_catalan(args.n, args.k), args)


def _cmd_kang(args) -> int:
    return _finish(kangulation_count(args.n, args.k), args)


def _cmd_quad(args) -> int:
    return _finish(quadrangulation_count(args.n), args)


def _verify_recursion(args) -> int:
    if args.kind == "central":
        pairs = ((n, central_recursion_rhs(n), catalan(n - 2)) for n in range(3, args.max + 1))
    elif args.kind == "quad":
        pairs = ((n, quad_recursion_rhs(n), quadrangulation_count(n)) for n in range(1, args.max + 1))
    else:
        k = args.k
        pairs = (
            (n, kang_recursion_rhs(n, k), kangulation_count(n, k))
            for n in range(k + (k - 2), args.max + 1, k - 2)
        )
    checked = 0
    for n, rhs, expected in pairs:
        if rhs != expected:
            print(f"n={n} FAIL: recursion gives {rhs}, expected {expected}")
            return 1
        print(f"n={n} OK")
        checked += 1
    print(f"verified {checked} cases")
    return 0


def _verify_congruence(args) -> int:
    theorem = Theorem(args.theorem)
    report = verify_congruence(theorem, args.max, p=args.p, k=args.k)
    if args.json:
        print(json.dumps(report.to_json(), sort_keys=True))
    elif report.passed:
        print(f"{args.theorem}: verified up to n={args.max}")
    else:
        print(f"{args.theorem}: counterexample {report.counterexample}")
    return 0 if report.passed else 1


def _cmd_census(args) -> int:
    entries = central_census(args.n, args.k)
    if args.json:
        print(json.dumps(census_to_json(args.n, args.k, entries), sort_keys=True))
    else:
        for e in entries:
            shape = DIAMETER if e.key == DIAMETER else ",".join(map(str, e.key))
            print(f"{shape}\t{e.count}")
    return 0


def _cmd_fixed_vertex(args) -> int:
    closed = fixed_vertex_outside(args.n)
    values = {"closed-form": closed}
    if args.brute:
        values["brute-force"] = count_vertex0_outside(args.n)
    if args.dyck:
        values["dyck"] = dyck_formula(args.n - 2)
    for name, value in values.items():
        print(f"{name}\t{value}")
    if len(set(values.values())) != 1:
        print("error: counts disagree", file=sys.stderr)
        return 1
    if args.expect is not None and str(closed) != args.expect:
        print(f"error: expected {args.expect}, got {closed}", file=sys.stderr)
        return 1
    return 0


def _cmd_render(args) -> int:
    diags = parse_diagonals(args.diagonals)
    d = Dissection(args.n, diags, args.k)
    svg = render_svg(d, highlight_central=args.highlight_central)
    out = Path(args.out)
    out.write_text(svg, encoding="utf-8")
    print(out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="polycenter",
        description="Exact counts, recursion/congruence verification, censuses "
        "and SVG rendering for polygon dissections.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_expect(sp):
        sp.add_argument(
            "--expect",
            metavar="VALUE",
            help="exit 1 unless the printed value equals VALUE",
        )

    sp = sub.add_parser("catalan", help="Catalan number C(n)")
    sp.add_argument("n", type=int)
    sp.add_argument("--mod", type=int, help="print C(n) modulo this instead")
    add_expect(sp)
    sp.set_defaults(func=_cmd_catalan)

    sp = sub.add_parser("fuss", help="Fuss-Catalan number")
    sp.add_argument("n", type=int)
    sp.add_argument("k", type=int)
    add_expect(sp)
    sp.set_defaults(func=_cmd_fuss)

    sp = sub.add_parser("kang", help="number of k-angulations of an n-gon")
    sp.add_argument("n", type=int)
    sp.add_argument("k", type=int)
    add_expect(sp)
    sp.set_defaults(func=_cmd_kang)

    sp = sub.add_parser("quad", help="number of quadrangulations of a (2n+2)-gon")
    sp.add_argument("n", type=int)
    add_expect(sp)
    sp.set_defaults(func=_cmd_quad)

    sp = sub.add_parser("verify", help="verification sweeps")
    vsub = sp.add_subparsers(dest="what", required=True)

    vr = vsub.add_parser("recursion", help="check a recursion against closed forms")
    vr.add_argument("--kind", choices=["central", "quad", "kang"], required=True)
    vr.add_argument("--k", type=int, default=3, help="cell size for --kind kang")
    vr.add_argument("--max", type=int, required=True)
    vr.set_defaults(func=_verify_recursion)

    vc = vsub.add_parser("congruence", help="check a congruence theorem")
    vc.add_argument("--theorem", choices=[t.value for t in Theorem], required=True)
    vc.add_argument("--p", type=int, help="prime for the mod-p theorems")
    vc.add_argument("--k", type=int, default=3, help="cell size for kangp")
    vc.add_argument("--max", type=int, required=True)
    vc.add_argument("--json", action="store_true")
    vc.set_defaults(func=_verify_congruence)

    sp = sub.add_parser("census", help="brute-force central-component census")
    sp.add_argument("n", type=int)
    sp.add_argument("--k", type=int, default=3)
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=_cmd_census)

    sp = sub.add_parser("fixed-vertex", help="triangulations with vertex 0 outside the central component")
    sp.add_argument("n", type=int)
    sp.add_argument("--brute", action="store_true", help="also brute-force the count")
    sp.add_argument("--dyck", action="store_true", help="also evaluate the ballot-number form")
    add_expect(sp)
    sp.set_defaults(func=_cmd_fixed_vertex)

    sp = sub.add_parser("render", help="render a dissection as SVG")
    sp.add_argument("n", type=int)
    sp.add_argument("--diagonals", default="", help='comma-separated "x-y" list')
    sp.add_argument("--k", type=int, default=3)
    sp.add_argument("--out", required=True)
    sp.add_argument("--highlight-central", action="store_true")
    sp.set_defaults(func=_cmd_render)

    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (ValueError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
