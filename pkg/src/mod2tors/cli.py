"""Command-line interface.

Exit codes: 0 success, 1 usage error, 2 singular or invalid curve,
3 verification failure.  Negative numbers in comma lists need the
``--short=-1,0`` spelling so argparse does not read them as options.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Sequence

from .curvefile import CurveFileError, UnreadableCurveFileError, parse_curve_file
from .curves import LongModel, Model, OffCurveError, ShortModel, SingularCurveError
from .families import (
    d_search,
    e3,
    e3_point,
    e_alt,
    e_n_with_point,
    e_sq3,
    e_sq3_point,
    simplest_cubic,
)
from .fermat import DecompositionError, NotOnSurfaceError, decompose, enumerate_solutions, param_forward
from .report import run_scan, summarize
from .verify import SUITES, verify_suites

EXIT_OK, EXIT_USAGE, EXIT_CURVE, EXIT_VERIFY = 0, 1, 2, 3

HELP_EPILOG = (
    "Integers are exact.  Factoring uses trial division and Pollard rho, "
    "so discriminants far beyond 120 bits can be slow."
)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse would exit with 2, which we reserve
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _ints(text: str, count: int | None = None) -> list[int]:
    try:
        vals = [int(t) for t in text.split(",")]
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from None
    if count is not None and len(vals) != count:
        raise UsageError(f"expected {count} integers, got {len(vals)}")
    return vals


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"expected a rational number, got {text!r}") from None


def _curve(args) -> Model:
    if (args.short is None) == (args.long is None):
        raise UsageError("give exactly one of --short A,B or --long a1,a2,a3,a4,a6")
    if args.short is not None:
        return ShortModel(*_ints(args.short, 2))
    return LongModel(*_ints(args.long, 5))


def _emit(args, data: dict, text: str) -> None:
    print(json.dumps(data, indent=2, sort_keys=True) if args.json else text)


def _curve_text(d: dict) -> str:
    lines = [
        f"model          [{', '.join(d['model']['a'])}]",
        f"short model    Y^2 = X^3 + ({d['short'][0]})X + ({d['short'][1]})",
        f"discriminant   {d['discriminant']}",
        f"square         {'yes, sqrt = ' + d['sqrt_discriminant'] if d['discriminant_is_square'] else 'no'}",
        f"#E(Q)[2]       {d['two_torsion_order']}",
        f"mod-2 image    {d['mod2_image']}",
        f"torsion        {d['torsion']}",
    ]
    for x, y in d["witnesses"]:
        lines.append(f"generator      ({x}, {y})")
    return "\n".join(lines)


# --- subcommands -----------------------------------------------------------


def cmd_classify(args) -> int:
    d = summarize(_curve(args))
    text = _curve_text(d)
    if args.cmd == "classify":
        text = "\n".join(line for line in text.splitlines() if not line.startswith("generator"))
    _emit(args, d, text)
    return EXIT_OK


def cmd_family(args) -> int:
    name = args.family
    point = None
    if name == "e3":
        if args.alpha is None or args.beta is None:
            raise UsageError("e3 needs --alpha and --beta (integers)")
        al, be = int(_rational(args.alpha)), int(_rational(args.beta))
        E, point = e3(al, be), e3_point(al, be)
    elif name in ("e5", "e7", "e9"):
        if args.alpha is None:
            raise UsageError(f"{name} needs --alpha")
        E, point = e_n_with_point(int(name[1]), _rational(args.alpha))
    elif name in ("e1", "e2", "ealt"):
        if args.params is None:
            raise UsageError(f"{name} needs --params a,b,c,d")
        p = tuple(_ints(args.params, 4))
        if name == "ealt":
            E = e_alt(p)
        else:
            E, point = e_sq3(int(name[1]), p), e_sq3_point(int(name[1]), p)
    elif name == "simplest":
        if args.m is None:
            raise UsageError("simplest needs --m")
        E = simplest_cubic(args.m)
    else:  # pragma: no cover - argparse restricts choices
        raise UsageError(name)
    d = summarize(E)
    if point is not None:
        d["family_point"] = [str(point.x), str(point.y)]
    text = _curve_text(d)
    if point is not None:
        text += f"\nfamily point   ({point.x}, {point.y})"
    _emit(args, d, text)
    return EXIT_OK


def cmd_fermat(args) -> int:
    if args.action == "solve":
        z = args.max_z if args.max_z is not None else 10
        sols = [list(map(str, s)) for s in enumerate_solutions(z)]
        _emit(args, {"max_z": z, "solutions": sols}, "\n".join(" ".join(s) for s in sols))
    elif args.action == "param":
        if args.params is None:
            raise UsageError("fermat param needs --params a,b,c,d")
        s = param_forward(tuple(_ints(args.params, 4)))
        _emit(args, {"x": str(s.x), "y": str(s.y), "z": str(s.z)}, f"{s.x} {s.y} {s.z}")
    else:
        if args.xyz is None:
            raise UsageError("fermat decompose needs --xyz x,y,z")
        p = decompose(tuple(_ints(args.xyz, 3)))
        _emit(args, dict(zip("abcd", map(str, p))), " ".join(map(str, p)))
    return EXIT_OK


def cmd_dsearch(args) -> int:
    h = args.height if args.height is not None else 100
    pts = d_search(args.n, h, workers=args.workers)
    data = {"n": args.n, "height": h, "points": [[str(a), str(z)] for a, z in pts]}
    _emit(args, data, "\n".join(f"({a}, {z})" for a, z in pts))
    return EXIT_OK


def cmd_scan(args) -> int:
    if args.input is None:
        raise UsageError("scan needs --input PATH")
    parsed = parse_curve_file(args.input)
    report = run_scan(parsed.records, workers=args.workers, diagnostics=parsed.diagnostics)
    sys.stdout.write(report.to_json() if args.json else report.to_text())
    return EXIT_OK


def cmd_verify(args) -> int:
    report = verify_suites(
        args.suite,
        inputs=[args.input] if args.input else [],
        height=args.height if args.height is not None else 100,
        max_z=args.max_z if args.max_z is not None else 20,
    )
    if args.json:
        print(json.dumps(report.to_dict(), indent=2, sort_keys=True))
    else:
        sys.stdout.write(report.to_text(verbose=args.verbose))
    return EXIT_OK if report.passed else EXIT_VERIFY


# --- parser ----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="mod2tors",
        description="Torsion subgroups and mod-2 Galois images of elliptic curves over Q.",
        epilog=HELP_EPILOG,
    )
    sub = parser.add_subparsers(dest="cmd", required=True, parser_class=_Parser)

    def common(p, curve=False):
        p.add_argument("--json", action="store_true", help="machine-readable output")
        if curve:
            p.add_argument("--short", metavar="A,B", help="Y^2 = X^3 + AX + B")
            p.add_argument("--long", metavar="a1,a2,a3,a4,a6", help="general Weierstrass model")
        return p

    common(sub.add_parser("classify", help="discriminant, 2-torsion and mod-2 image"), curve=True)
    common(sub.add_parser("torsion", help="rational torsion subgroup with generators"), curve=True)

    fam = common(sub.add_parser("family", help="build a member of a parametric family"))
    fam.add_argument("family", choices=["e3", "e5", "e7", "e9", "e1", "e2", "ealt", "simplest"])
    fam.add_argument("--alpha", help="parameter (rational for e5/e7/e9, integer for e3)")
    fam.add_argument("--beta", help="second e3 parameter")
    fam.add_argument("--params", metavar="a,b,c,d", help="parameters for e1, e2, ealt")
    fam.add_argument("--m", type=int, help="parameter of the simplest cubic")

    fer = common(sub.add_parser("fermat", help="solutions of x^2 + 3y^2 = 4z^3"))
    fer.add_argument("action", choices=["solve", "param", "decompose"])
    fer.add_argument("--max-z", type=int, help="bound on z for solve (default 10)")
    fer.add_argument("--params", metavar="a,b,c,d")
    fer.add_argument("--xyz", metavar="x,y,z")

    ds = common(sub.add_parser("dsearch", help="rational points of bounded height on D_n"))
    ds.add_argument("--n", type=int, choices=[5, 7, 9], required=True)
    ds.add_argument("--height", type=int, help="naive height bound (default 100)")
    ds.add_argument("--workers", type=int, default=1)

    sc = common(sub.add_parser("scan", help="tally torsion and squareness over a curve file"))
    sc.add_argument("--input", metavar="PATH")
    sc.add_argument("--workers", type=int, default=1)

    ve = common(sub.add_parser("verify", help="run verification suites"))
    ve.add_argument("--suite", choices=list(SUITES) + ["all"], default="all")
    ve.add_argument("--input", metavar="PATH", help="extra curve file for the table suite")
    ve.add_argument("--height", type=int, help="height bound for the D_n searches (default 100)")
    ve.add_argument("--max-z", type=int, help="z bound for the roundtrip check (default 20)")
    ve.add_argument("-v", "--verbose", action="store_true", help="list passing checks too")
    return parser


COMMANDS = {
    "classify": cmd_classify,
    "torsion": cmd_classify,
    "family": cmd_family,
    "fermat": cmd_fermat,
    "dsearch": cmd_dsearch,
    "scan": cmd_scan,
    "verify": cmd_verify,
}


def main(argv: Sequence[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:  # --help, or a usage error already reported
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return COMMANDS[args.cmd](args)
    except UsageError as exc:
        print(f"mod2tors: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (SingularCurveError, OffCurveError, NotOnSurfaceError, DecompositionError) as exc:
        print(f"mod2tors: {exc}", file=sys.stderr)
        return EXIT_CURVE
    except UnreadableCurveFileError as exc:
        print(f"mod2tors: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (CurveFileError, ValueError) as exc:
        print(f"mod2tors: {exc}", file=sys.stderr)
        return EXIT_CURVE


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
