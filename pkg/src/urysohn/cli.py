"""Command-line surface.

Structured results go to stdout as JSON; human-readable summaries go to
stderr.  Exit codes: 0 success, 1 validation found violations, 2 parse
failure, 3 precondition violation, 4 internal assertion failure (a bug).
"""

from __future__ import annotations

import argparse
import json
import sys

from .errors import InternalCheckError, ParseError, PreconditionError, StructureError
from .spaces import validate_ultrametric
from .embedding import embed_space, extend_one_point
from .hyperspace import hausdorff_ballmin, hausdorff_supinf
from .model import delta
from .petals import distance_to_petal, generate_heirs
from .products import INF, lp_counterexample
from . import serialization as ser
from . import verify


def _load_json(path: str):
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise ParseError(f"{path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}:{exc.lineno}:{exc.colno}: {exc.msg}") from exc


def _parse_inline_json(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"inline JSON: {exc.msg}") from exc


def _emit(doc) -> None:
    json.dump(doc, sys.stdout, indent=2, sort_keys=True)
    sys.stdout.write("\n")


def _say(text: str) -> None:
    print(text, file=sys.stderr)


def cmd_validate(args) -> int:
    space = ser.space_from_json(_load_json(args.space))
    report = validate_ultrametric(space)
    _emit(
        {
            "ok": report.ok,
            "violations": [
                {"kind": v.kind, "where": list(v.where)}
                for v in report.violations
            ],
        }
    )
    _say("valid" if report.ok else f"{len(report.violations)} violation(s)")
    return 0 if report.ok else 1


def cmd_embed(args) -> int:
    space = ser.space_from_json(_load_json(args.space))
    images = embed_space(space)
    _emit({label: ser.point_to_json(p) for label, p in images.items()})
    _say(f"embedded {len(images)} point(s)")
    return 0


def cmd_extend(args) -> int:
    problem = ser.extension_problem_from_json(_load_json(args.problem))
    point = extend_one_point(problem)
    _emit(ser.point_to_json(point))
    _say(f"extension point for {problem.theta!r}")
    return 0


def cmd_hausdorff(args) -> int:
    e = ser.subset_from_json(_load_json(args.left))
    f = ser.subset_from_json(_load_json(args.right))
    ballmin = hausdorff_ballmin(e, f)
    supinf = hausdorff_supinf(e, f)
    if ballmin != supinf:
        raise InternalCheckError("the two Hausdorff algorithms disagree")
    _emit(
        {
            "ballmin": ser.format_rational(ballmin),
            "supinf": ser.format_rational(supinf),
        }
    )
    _say(f"hausdorff distance {ser.format_rational(ballmin)}")
    return 0


def cmd_heirs(args) -> int:
    s = ser.range_set_from_json(_parse_inline_json(args.range))
    tree = generate_heirs(s, args.depth, args.branching)
    _emit(ser.heir_tree_to_json(tree))
    _say(f"{len(tree.nodes)} node(s)")
    return 0


def cmd_certify_lp(args) -> int:
    raw = args.p
    if raw == "inf":
        p = INF
    else:
        p_frac = ser.parse_rational(raw)
        if p_frac.denominator != 1 or p_frac < 1:
            raise PreconditionError("p must be a positive integer or 'inf'")
        p = int(p_frac)
    cert = lp_counterexample(p)
    _emit(
        {
            "p": "inf" if p == INF else p,
            "target": [ser.format_rational(t) for t in cert.target],
            "defect": None if cert.defect is None else ser.format_rational(cert.defect),
            "reason": cert.reason,
        }
    )
    _say(f"unsolvable target for p={raw}")
    return 0


def cmd_check(args) -> int:
    results = verify.run_all(seed=args.seed, scale=args.scale)
    for res in results:
        _say(res.line())
    _emit(
        {
            "seed": args.seed,
            "ok": all(r.ok for r in results),
            "criteria": [
                {
                    "number": r.number,
                    "name": r.name,
                    "ok": r.ok,
                    "checked": r.checked,
                    "detail": r.detail,
                    "seconds": round(r.seconds, 3),
                }
                for r in results
            ],
        }
    )
    return 0 if all(r.ok for r in results) else 1


def cmd_petal_distance(args) -> int:
    point = ser.point_from_json(_load_json(args.point))
    s = ser.range_set_from_json(_parse_inline_json(args.range))
    dist, nearest = distance_to_petal(point, s)
    if delta(point, nearest) != dist:
        raise InternalCheckError("nearest point does not realize the distance")
    _emit(
        {
            "distance": ser.format_rational(dist),
            "nearest": ser.point_to_json(nearest),
        }
    )
    _say(f"distance {ser.format_rational(dist)}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="urysohn",
        description="Exact arithmetic for the universal ultrametric space.",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("validate", help="check a space file for metric violations")
    p.add_argument("space", help="space JSON file")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("embed", help="isometrically embed a space file")
    p.add_argument("space", help="space JSON file")
    p.set_defaults(func=cmd_embed)

    p = sub.add_parser("extend", help="solve a one-point extension problem")
    p.add_argument("problem", help="extension problem JSON file")
    p.set_defaults(func=cmd_extend)

    p = sub.add_parser("hausdorff", help="Hausdorff distance of two subset files")
    p.add_argument("left", help="subset JSON file")
    p.add_argument("right", help="subset JSON file")
    p.set_defaults(func=cmd_hausdorff)

    p = sub.add_parser("heirs", help="generate a truncated heir tree")
    p.add_argument("--range", required=True, help='range set JSON, e.g. \'["0","1/2","1"]\'')
    p.add_argument("--depth", type=int, default=2)
    p.add_argument("--branching", type=int, default=2)
    p.set_defaults(func=cmd_heirs)

    p = sub.add_parser("certify-lp", help="unsolvable prescribed-distance certificate")
    p.add_argument("--p", required=True, help="positive integer or 'inf'")
    p.set_defaults(func=cmd_certify_lp)

    p = sub.add_parser("check", help="run the verification suites")
    p.add_argument("--seed", type=int, default=verify.DEFAULT_SEED)
    p.add_argument(
        "--scale",
        type=float,
        default=1.0,
        help="shrink factor for the randomized batteries (1.0 = full size)",
    )
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("petal-distance", help="distance of a point to a piece")
    p.add_argument("point", help="point JSON file")
    p.add_argument("--range", required=True, help="range set JSON for the piece")
    p.set_defaults(func=cmd_petal_distance)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        _say(f"parse error: {exc}")
        return 2
    except (PreconditionError, StructureError) as exc:
        _say(f"precondition violated: {exc}")
        return 3
    except InternalCheckError as exc:
        _say(f"internal check failed (this is a bug): {exc}")
        return 4


if __name__ == "__main__":
    sys.exit(main())
