"""Command-line surface. Thin: argument parsing and printing only, all work
happens in the payload layer shared with the HTTP service.

Exit codes: 0 success, 1 usage or validation error, 2 cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import payloads
from .errors import CapExceeded, GIGraphError, TooLarge

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_CAP = 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(f"{self.prog}: {message}")


class _UsageError(Exception):
    pass


def _spec_args(p: argparse.ArgumentParser):
    p.add_argument("n", type=int, help="modulus (>= 3)")
    p.add_argument("steps", type=int, nargs="+", metavar="j", help="step values")


def _emit(text_or_obj, out_path=None):
    if isinstance(text_or_obj, str):
        text = text_or_obj
    else:
        text = json.dumps(text_or_obj, indent=2) + "\n"
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _parse_range(raw: str) -> tuple[int, int]:
    if ".." in raw:
        lo, hi = raw.split("..", 1)
        return int(lo), int(hi)
    return int(raw), int(raw)


def build_parser() -> _Parser:
    parser = _Parser(prog="gigraph", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="construct a graph and export it")
    _spec_args(p)
    p.add_argument("--format", choices=["json", "dot", "edges"], default="json")
    p.add_argument("--out", metavar="PATH")

    p = sub.add_parser("canon", help="standard and canonical forms")
    _spec_args(p)

    p = sub.add_parser("aut", help="automorphism group order and case")
    _spec_args(p)
    p.add_argument("--elements", action="store_true",
                   help="include explicit generators in cycle notation")
    p.add_argument("--verify", action="store_true",
                   help="cross-check the order against the brute-force oracle")

    p = sub.add_parser("classify", help="connectivity, ET/VT/Cayley verdicts")
    _spec_args(p)
    p.add_argument("--oracle", action="store_true",
                   help="attach brute-force orbit and regular-subgroup results")

    p = sub.add_parser("census", help="classify all canonical classes in a range")
    p.add_argument("--n", required=True, metavar="A..B",
                   help="modulus range, e.g. 3..12 or a single value")
    p.add_argument("--t", required=True, type=int, help="layer count")
    p.add_argument("--connected-only", action="store_true")
    p.add_argument("--verify", action="store_true")
    p.add_argument("--findings", action="store_true",
                   help="scan class representatives for missed isomorphisms (JSON only)")
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out", metavar="PATH")

    p = sub.add_parser("layout", help="planar coordinates, stats, SVG")
    _spec_args(p)
    p.add_argument("--svg", metavar="PATH", help="write an SVG drawing")
    p.add_argument("--check-unit", action="store_true",
                   help="print edge-length statistics as JSON")
    p.add_argument("--radii", metavar="r0,r1,...",
                   help="override the per-layer circle radii")

    p = sub.add_parser("oracle", help="brute-force ground truth")
    osub = p.add_subparsers(dest="oracle_command", required=True)
    q = osub.add_parser("aut", help="enumerate the automorphism group")
    _spec_args(q)
    q = osub.add_parser("iso", help="isomorphism test between two specs")
    q.add_argument("n", type=int)
    q.add_argument("-a", type=int, nargs="+", required=True, metavar="j")
    q.add_argument("-b", type=int, nargs="+", required=True, metavar="j")
    q = osub.add_parser("cayley", help="search for a vertex-regular subgroup")
    _spec_args(q)
    q = osub.add_parser("girth", help="girth and 4-cycle presence")
    _spec_args(q)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    return parser


def _run(args) -> int:
    if args.command == "build":
        payload = payloads.build_payload(args.n, args.steps, args.format)
        _emit(payload, args.out)
    elif args.command == "canon":
        _emit(payloads.canon_payload(args.n, args.steps))
    elif args.command == "aut":
        _emit(payloads.aut_payload(args.n, args.steps,
                                   elements=args.elements, verify=args.verify))
    elif args.command == "classify":
        _emit(payloads.classify_payload(args.n, args.steps, use_oracle=args.oracle))
    elif args.command == "census":
        lo, hi = _parse_range(args.n)
        fmt = "json" if args.findings else args.format
        payload, mismatches = payloads.census_payload(
            lo, hi, args.t, connected_only=args.connected_only,
            verify=args.verify, fmt=fmt, jobs=args.jobs, findings=args.findings)
        _emit(payload, args.out)
        if args.verify:
            print(f"mismatches: {mismatches}", file=sys.stderr)
    elif args.command == "layout":
        radii = [float(r) for r in args.radii.split(",")] if args.radii else None
        if args.svg:
            _emit(payloads.layout_payload(args.n, args.steps, radii=radii,
                                          want_svg=True), args.svg)
        if args.check_unit or not args.svg:
            _emit(payloads.layout_payload(args.n, args.steps, radii=radii,
                                          check_unit=args.check_unit))
    elif args.command == "oracle":
        if args.oracle_command == "aut":
            _emit(payloads.oracle_aut_payload(args.n, args.steps))
        elif args.oracle_command == "iso":
            _emit(payloads.oracle_iso_payload(args.n, args.a, args.b))
        elif args.oracle_command == "cayley":
            _emit(payloads.oracle_cayley_payload(args.n, args.steps))
        elif args.oracle_command == "girth":
            _emit(payloads.oracle_girth_payload(args.n, args.steps))
    elif args.command == "serve":
        import uvicorn

        from .service import app
        uvicorn.run(app, host=args.host, port=args.port)
    return EXIT_OK


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return _run(args)
    except _UsageError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_USAGE
    except (CapExceeded, TooLarge) as exc:
        print(f"gigraph: {exc}", file=sys.stderr)
        return EXIT_CAP
    except GIGraphError as exc:
        print(f"gigraph: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"gigraph: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
