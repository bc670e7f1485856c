"""Command-line front end.

    torusfill dga -n 3
    torusfill aug -n 3 --sigma 2,3,1
    torusfill table -n 3 --format json
    torusfill classes -n 5
    torusfill verify -n 7
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .classify import MAX_N, enumerate_classes
from .diagram import build_torus_2n
from .disks import differential
from .errors import DiagramError, DomainError, ResourceGuardError, UsageError
from .filling import Permutation, augmentation_by_pinching, closed_form_augmentation
from .suites import verify_all


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="torusfill", description="DGA, augmentations and filling classes "
                     "of the max-tb Legendrian (2,n) torus knot.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p):
        p.add_argument("-n", type=int, required=True)
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--out", help="write here instead of standard output")

    common(sub.add_parser("dga", help="differential of the (2,n) torus knot"))
    p = sub.add_parser("aug", help="augmentation of one filling, computed both ways")
    common(p)
    p.add_argument("--sigma", required=True, help="pinch order, e.g. 2,3,1")
    common(sub.add_parser("table", help="augmentation of every filling class"))
    for name, text in (("classes", "Catalan classification"), ("verify", "run the check suites")):
        p = sub.add_parser(name, help=text)
        common(p)
        p.add_argument("--force", action="store_true", help=f"allow n > {MAX_N}")
    return parser


def _check_n(args) -> None:
    if args.n < 1:
        raise UsageError(f"n must be positive, got {args.n}")
    if args.command in ("classes", "verify") and args.n > MAX_N and not args.force:
        raise ResourceGuardError(f"n > {MAX_N} needs --force")


def _dga(args):
    g = differential(build_torus_2n(args.n))
    if args.format == "json":
        return g.to_json(), 0
    return str(g), 0


def _aug(args):
    sigma = Permutation.parse(args.sigma)
    if sigma.n != args.n:
        raise UsageError(f"--sigma has {sigma.n} entries, expected {args.n}")
    pinched = augmentation_by_pinching(sigma)
    closed = closed_form_augmentation(sigma)
    agree = pinched == closed
    if args.format == "json":
        return {"pinching": pinched.to_json(), "closed_form": closed.to_json(), "agree": agree}, int(not agree)
    lines = [f"sigma = {sigma}", "by pinching:", pinched.render(),
             "closed form:", closed.render(), "agree" if agree else "DISAGREE"]
    return "\n".join(lines), int(not agree)


def _table(args):
    if args.n % 2 == 0:
        raise UsageError("the augmentation table is defined for odd n")
    report = enumerate_classes(args.n)
    if args.format == "json":
        return report.to_json(), int(not report.passed)
    lines = []
    for rec in report.classes:
        lines.append(f"sigma = {rec.rep}  C = ({','.join(map(str, rec.C))})")
        lines.extend("  " + row for row in rec.aug.render().splitlines())
    lines.append(report.summary())
    return "\n".join(lines), int(not report.passed)


def _classes(args):
    report = enumerate_classes(args.n, force=args.force)
    if args.format == "json":
        return report.to_json(), int(not report.passed)
    lines = [report.summary()]
    for rec in report.classes:
        line = f"{rec.rep}  C = ({','.join(map(str, rec.C))})"
        if rec.lifted is not None:
            line += f"  lift {rec.lifted}  C = ({','.join(map(str, rec.lifted_C))})"
        lines.append(line)
    return "\n".join(lines), int(not report.passed)


def _verify(args):
    results = verify_all(args.n, force=args.force)
    ok = all(r.passed for r in results)
    if args.format == "json":
        return {"n": args.n, "passed": ok,
                "suites": [{"name": r.name, "passed": r.passed, "detail": r.detail} for r in results]}, int(not ok)
    lines = [r.line() for r in results] + ["all passed" if ok else "verification FAILED"]
    return "\n".join(lines), int(not ok)


COMMANDS = {"dga": _dga, "aug": _aug, "table": _table, "classes": _classes, "verify": _verify}


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        _check_n(args)
        payload, code = COMMANDS[args.command](args)
    except (UsageError, DomainError, DiagramError) as exc:
        print(f"torusfill: error: {exc}", file=sys.stderr)
        return 2
    text = json.dumps(payload, indent=1) if not isinstance(payload, str) else payload
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return code


def main() -> None:
    sys.exit(run())
