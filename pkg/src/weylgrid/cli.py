"""Command-line front end.

Artifacts go to stdout (or --out); diagnostics go to stderr.
Exit codes: 0 ok, 1 a check failed, 2 bad arguments, 3 a cap was exceeded.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from weylgrid.gridposet import Lambda2, semistandard_poset
from weylgrid.ideallattice import DEFAULT_ELEMENT_CAP, LatticeTooLarge, enumerate_lattice, to_dot
from weylgrid.pipeline import Caps, verdicts_to_jsonl, verify_instance, verify_matrix
from weylgrid.qseries import eq1_rgf, factored_form, general_rgf
from weylgrid.rootsys import RootSystemId
from weylgrid.weylsf import chi

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _lam(text: str) -> Lambda2:
    try:
        return Lambda2.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="weylgrid", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p, lam=True, order=True, fmt=("json",)):
        p.add_argument("--system", required=True, choices=[s.value for s in RootSystemId])
        if lam:
            p.add_argument("--lambda", dest="lam", required=True, type=_lam, metavar="A,B")
        if order:
            p.add_argument("--order", default="ba", choices=["ba", "ab"])
        p.add_argument("--out", type=Path, default=None)
        p.add_argument("--format", default=fmt[0], choices=list(fmt))
        p.add_argument("--max-elements", type=int, default=DEFAULT_ELEMENT_CAP)

    common(sub.add_parser("construct", help="semistandard poset as JSON"))
    common(sub.add_parser("lattice", help="ideal lattice as JSON or DOT"), fmt=("json", "dot"))
    common(sub.add_parser("character", help="Weyl bialternant and its dimension"), order=False,
           fmt=("json", "text"))
    common(sub.add_parser("rgf", help="rank generating function"), order=False, fmt=("json", "text"))
    common(sub.add_parser("verify", help="verify one instance"))
    sw = sub.add_parser("sweep", help="verify all instances up to (max_a, max_b)")
    sw.add_argument("--max-a", type=int, default=3)
    sw.add_argument("--max-b", type=int, default=3)
    sw.add_argument("--jobs", type=int, default=1)
    sw.add_argument("--out", type=Path, default=None)
    sw.add_argument("--max-elements", type=int, default=DEFAULT_ELEMENT_CAP)
    sw.add_argument("--format", default="json", choices=["json"])
    common(sub.add_parser("export", help="Hasse diagram as DOT with colored edges"), fmt=("dot",))
    return parser


def _emit(text: str, out: Path | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        out.write_text(text)


def run(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    cmd = args.command
    try:
        if cmd == "construct":
            p = semistandard_poset(args.system, args.lam, args.order)
            _emit(p.to_json() + "\n", args.out)
        elif cmd in ("lattice", "export"):
            p = semistandard_poset(args.system, args.lam, args.order)
            l = enumerate_lattice(p, cap=args.max_elements)
            if args.format == "dot":
                _emit(to_dot(l, weights=cmd == "export"), args.out)
            else:
                _emit(l.to_json() + "\n", args.out)
        elif cmd == "character":
            res = chi(args.system, args.lam)
            if args.format == "text":
                _emit(f"dimension {res.dimension}\n{res.chi!r}\n", args.out)
            else:
                body = json.loads(res.chi.to_json(args.system))
                _emit(json.dumps({"system": args.system, "lambda": list(args.lam),
                                  "dimension": res.dimension, "chi": body}) + "\n", args.out)
        elif cmd == "rgf":
            poly = eq1_rgf(args.system, args.lam)
            if poly != general_rgf(args.system, args.lam):
                print("closed form and root-system product disagree", file=sys.stderr)
                return EXIT_FAIL
            if args.format == "text":
                _emit(f"{list(poly)}\n{factored_form(args.system, args.lam)}\n", args.out)
            else:
                _emit(json.dumps({"coefficients": list(poly),
                                  "factored": factored_form(args.system, args.lam)}) + "\n",
                      args.out)
        elif cmd == "verify":
            v = verify_instance(args.system, args.lam, args.order,
                                Caps(max_elements=args.max_elements))
            _emit(v.to_json(timings=False) + "\n", args.out)
            for name, c in v.checks.items():
                print(f"{c.status:7s} {name}", file=sys.stderr)
            if v.skipped:
                return EXIT_CAP
            return EXIT_OK if v.passed else EXIT_FAIL
        elif cmd == "sweep":
            vs = verify_matrix(args.max_a, args.max_b, Caps(max_elements=args.max_elements),
                               jobs=args.jobs)
            _emit(verdicts_to_jsonl(vs), args.out)
            failed = [v for v in vs if not v.passed and not v.skipped]
            print(f"{len(vs)} instances, {len(failed)} failed", file=sys.stderr)
            if failed:
                return EXIT_FAIL
            if any(v.skipped for v in vs):
                return EXIT_CAP
    except LatticeTooLarge as exc:
        print(f"cap exceeded: {exc}", file=sys.stderr)
        return EXIT_CAP
    return EXIT_OK


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
