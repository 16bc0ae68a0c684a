"""Command-line front end.

Subcommands: strand (winding/bounds/threshold calculators), constants
(full certified report for a surface), survey (word survey on the
thrice punctured sphere), word (single-class query), example (the
small-systole example surfaces).

Exit codes: 0 success, 2 usage error, 3 domain error, 4 assertion
failure (example bullets at k >= 100), 5 search/precision cap hit.
Reports embed their effective configuration; a timestamped metadata
header can be suppressed with --no-meta for byte-comparable output.
"""

import argparse
import json
import sys
from datetime import datetime, timezone

from mpmath import mp

from . import __version__
from .errors import (
    GeoforgeError,
    NoSolutionBelowCap,
    NotHyperbolic,
    NotPrimitive,
    PrecisionExhausted,
    TrivialWord,
)
from .intersect import IntersectionConfig, crossing_oracle, self_intersection
from .numerics import PrecisionContext, default_precision_bits
from .pants import build_example_surface
from .strands import depth_threshold, strand_length_bounds, winding_number
from .surfaces import SurfaceDescription, build_constants_report, surface_y
from .survey import rows_to_csv, run_survey
from .words import CyclicWord, classify_word

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_DOMAIN = 3
EXIT_ASSERTION = 4
EXIT_CAP = 5


def _meta(args):
    return {
        "tool": "geoforge",
        "version": __version__,
        "generated_at": datetime.now(timezone.utc).isoformat(),
        "invocation": sys.argv[1:],
        "precision_bits": args.precision,
    }


def _emit(text, args):
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _emit_json(payload, args):
    if not args.no_meta:
        payload = {"meta": _meta(args), **payload}
    _emit(json.dumps(payload, indent=2) + "\n", args)


def cmd_strand(args):
    ctx = PrecisionContext(args.precision)
    given = [name for name in ("length", "omega", "h0") if getattr(args, name) is not None]
    if len(given) != 1:
        raise UsageError("provide exactly one of --length, --omega, --h0")
    with ctx.workprec():
        args.h = mp.mpf(args.h)
        if args.length is not None:
            args.length = mp.mpf(args.length)
            w = winding_number(args.h, args.length, ctx)
            payload = {
                "operation": "winding_number",
                "formula": "floor((2/h)*sinh(length/2))",
                "h": ctx.str(mp.mpf(args.h)),
                "length": ctx.str(mp.mpf(args.length)),
                "winding": w,
                "self_intersections": w - 1,
            }
        elif args.omega is not None:
            lo, hi = strand_length_bounds(args.h, args.omega, ctx)
            payload = {
                "operation": "strand_length_bounds",
                "formula": "2*asinh(h*(w-1)/2) <= length <= 2*asinh(h*w/2)",
                "h": ctx.str(mp.mpf(args.h)),
                "winding": args.omega,
                "lower": ctx.str(lo),
                "upper": ctx.str(hi),
            }
        else:
            args.h0 = mp.mpf(args.h0)
            t = depth_threshold(args.h, args.h0, ctx)
            payload = {
                "operation": "depth_threshold",
                "formula": "2*acosh(h/h0)",
                "h": ctx.str(mp.mpf(args.h)),
                "h0": ctx.str(mp.mpf(args.h0)),
                "threshold": ctx.str(t),
            }
    _emit_json(payload, args)
    return EXIT_OK


def cmd_constants(args):
    ctx = PrecisionContext(args.precision)
    if args.surface_y:
        surface = surface_y(ctx)
    elif args.g is not None or args.n is not None:
        if args.g is None or args.n is None or args.s is None:
            raise UsageError("topological mode needs --g, --n and --s")
        with ctx.workprec():
            surface = SurfaceDescription.topological(args.g, args.n, mp.mpf(args.s))
    else:
        needed = (args.h_max, args.systole, args.d1, args.d_eps0)
        if any(v is None for v in needed):
            raise UsageError(
                "explicit mode needs --h-max, --systole, --d1 and --d-eps0 "
                "(or use --surface-y / --g --n --s)"
            )
        with ctx.workprec():
            surface = SurfaceDescription.explicit(*(mp.mpf(v) for v in needed))
    report = build_constants_report(surface, ks=args.k or (), ctx=ctx)
    _emit_json({"constants": report.as_dict()}, args)
    return EXIT_OK


def cmd_survey(args):
    ctx = PrecisionContext(args.precision)
    config = IntersectionConfig(start_radius=args.start_radius, max_radius=args.max_radius)
    rows, summaries = run_survey(args.max_len, ks=args.k or (), threads=args.threads,
                                 ctx=ctx, config=config)
    if args.format == "json":
        payload = {
            "max_len": args.max_len,
            "rows": [r.as_dict(ctx) for r in rows],
            "summaries": [s.as_dict(ctx) for s in summaries],
        }
        _emit_json(payload, args)
    else:
        parts = []
        if not args.no_meta:
            parts.append("# " + json.dumps(_meta(args)) + "\n")
        parts.append(rows_to_csv(rows, ctx))
        for s in summaries:
            parts.append("# summary " + json.dumps(s.as_dict(ctx)) + "\n")
        _emit("".join(parts), args)
    return EXIT_OK


def cmd_word(args):
    ctx = PrecisionContext(args.precision)
    word = CyclicWord(args.word)
    cls = classify_word(word, ctx)
    payload = {
        "input": args.word,
        "canonical": word.letters,
        "kind": cls.kind,
        "primitive": cls.primitive,
        "trace": str(cls.trace),
        "length": None if cls.length is None else ctx.str(cls.length),
        "bacK": None if cls.bacK_shape is None else
                {"cusp_class": cls.bacK_shape[0], "k": cls.bacK_shape[1]},
    }
    if cls.kind != "hyperbolic":
        payload["self_intersections"] = None
        payload["note"] = "peripheral class: no closed geodesic, intersection skipped"
    elif not cls.primitive:
        payload["self_intersections"] = None
        payload["note"] = "non-primitive class: intersection skipped"
    else:
        config = IntersectionConfig(start_radius=args.start_radius,
                                    max_radius=args.max_radius)
        res = self_intersection(word, config)
        payload["self_intersections"] = res.count
        payload["certified"] = res.certified
        payload["radius_used"] = res.radius_used
        if args.oracle:
            payload["oracle_count"] = crossing_oracle(word, ctx)
    _emit_json(payload, args)
    return EXIT_OK


def cmd_example(args):
    ctx = PrecisionContext(args.precision)
    reports = []
    failed = False
    for k in args.k:
        rep = build_example_surface(k, ctx, sqrt_scale=args.sqrt_scale,
                                    precision_cap=args.precision_cap)
        reports.append(rep.as_dict())
        if rep.asserted and not (rep.bullet1 and rep.bullet2):
            failed = True
    _emit_json({"examples": reports}, args)
    return EXIT_ASSERTION if failed else EXIT_OK


class UsageError(Exception):
    pass


def build_parser():
    parser = argparse.ArgumentParser(
        prog="geoforge",
        description="Strand calculus, certified constants and geodesic "
                    "self-intersection surveys for cusped hyperbolic surfaces.",
    )
    parser.add_argument("--precision", type=int, default=default_precision_bits(),
                        help="working precision in bits (default: %(default)s, "
                             "or GEOFORGE_PRECISION_BITS)")
    parser.add_argument("--no-meta", action="store_true",
                        help="suppress the timestamped metadata header")
    parser.add_argument("--out", help="write output to this file instead of stdout")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("strand", help="winding numbers, length windows, depth thresholds")
    p.add_argument("--h", type=str, required=True, help="horocycle level")
    p.add_argument("--length", type=str, help="strand length (computes winding)")
    p.add_argument("--omega", type=int, help="winding number (computes length window)")
    p.add_argument("--h0", type=str, help="deeper level (computes depth threshold)")
    p.set_defaults(func=cmd_strand)

    p = sub.add_parser("constants", help="certified constants report for a surface")
    p.add_argument("--surface-y", action="store_true",
                   help="thrice punctured sphere preset")
    p.add_argument("--g", type=int, help="genus (topological mode)")
    p.add_argument("--n", type=int, help="punctures (topological mode)")
    p.add_argument("--s", type=str, help="systole floor (topological mode)")
    p.add_argument("--h-max", type=str, help="longest embedded horocycle (explicit)")
    p.add_argument("--systole", type=str, help="systole length (explicit)")
    p.add_argument("--d1", type=str, help="level-1 horocycle self-distance (explicit)")
    p.add_argument("--d-eps0", type=str, help="thin-boundary self-distance (explicit)")
    p.add_argument("--k", type=int, action="append", help="report C(k); repeatable")
    p.set_defaults(func=cmd_constants)

    p = sub.add_parser("survey", help="survey all classes up to a word length")
    p.add_argument("--max-len", type=int, required=True)
    p.add_argument("--k", type=int, action="append",
                   help="summarize shortest class with >= k intersections; repeatable")
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--start-radius", type=int, default=None)
    p.add_argument("--max-radius", type=int, default=None)
    p.set_defaults(func=cmd_survey)

    p = sub.add_parser("word", help="classify one word and count its intersections")
    p.add_argument("word", help="letters a, b, A, B (A = a inverse)")
    p.add_argument("--oracle", action="store_true",
                   help="also run the fundamental-domain validator")
    p.add_argument("--start-radius", type=int, default=None)
    p.add_argument("--max-radius", type=int, default=None)
    p.set_defaults(func=cmd_word)

    p = sub.add_parser("example", help="small-systole example surfaces")
    p.add_argument("--k", type=int, action="append", required=True)
    p.add_argument("--sqrt-scale", action="store_true",
                   help="use the x = y/sqrt(2k+1) boundary scaling variant")
    p.add_argument("--precision-cap", type=int, default=1024)
    p.set_defaults(func=cmd_example)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        parser.error(str(exc))  # exits 2
    except (NoSolutionBelowCap, PrecisionExhausted) as exc:
        print(f"geoforge: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (TrivialWord, NotHyperbolic, NotPrimitive, GeoforgeError, ValueError) as exc:
        print(f"geoforge: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
