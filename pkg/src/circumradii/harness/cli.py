"""Command-line entry point: ``circumradii <command> ...``.

Exit codes: 0 success, 1 an experiment assertion failed (failing records
are quarantined and the file path printed), 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from .. import bounds
from ..exact_core import DuplicatePoint, Mode, is_general_position
from ..locus_curves import (
    DegeneratePair,
    SamePair,
    circle_poly,
    count_common_points,
    radius_locus,
)
from ..polynomials import BivariatePoly
from ..radius_subsets import (
    NoCoincidence,
    NotGeneralPosition,
    SubsetCertificate,
    TripleRadiusTable,
    all_distinct,
    classify_excluded_point,
    greedy_maximal_subset,
    max_distinct_subset,
)
from .experiments import EXPERIMENTS, quarantine
from .generate import GenerationTimeout
from .pointset_io import PointSetFormatError, format_pointset, format_rational, load_pointset
from .search import search_extremal


class UsageError(Exception):
    pass


def _emit(obj) -> None:
    print(json.dumps(obj, sort_keys=True))


def _index_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise UsageError(f"expected comma-separated indices, got {text!r}") from None


def _pair_pairs(text: str) -> tuple[list[int], list[int]]:
    parts = text.split(":")
    if len(parts) != 2:
        raise UsageError(f"expected a,b:c,d, got {text!r}")
    ab, cd = _index_list(parts[0]), _index_list(parts[1])
    if len(ab) != 2 or len(cd) != 2:
        raise UsageError(f"expected a,b:c,d, got {text!r}")
    return ab, cd


def _pick(points, idx):
    try:
        return [points[i] for i in idx]
    except IndexError:
        raise UsageError(f"index out of range in {idx} (have {len(points)} points)") from None


def _locus_from(points, pairs_text: str) -> BivariatePoly:
    ab, cd = _pair_pairs(pairs_text)
    return radius_locus(*_pick(points, ab), *_pick(points, cd))


def parse_curve(spec: str) -> BivariatePoly:
    """Curve operand for ``intersect``.

    ``circle:CX,CY,R2``, ``locus:FILE:a,b:c,d``, or a path to the JSON written
    by ``locus --emit-coeffs``.
    """
    if spec.startswith("circle:"):
        parts = spec[len("circle:"):].split(",")
        if len(parts) != 3:
            raise UsageError(f"expected circle:CX,CY,R2, got {spec!r}")
        try:
            cx, cy, r2 = (Fraction(p) for p in parts)
        except (ValueError, ZeroDivisionError):
            raise UsageError(f"bad rational in {spec!r}") from None
        return circle_poly((cx, cy), r2)
    if spec.startswith("locus:"):
        rest = spec[len("locus:"):]
        path, _, pairs = rest.partition(":")
        return _locus_from(load_pointset(path), pairs)
    try:
        data = json.loads(Path(spec).read_text())
        return BivariatePoly.from_records(data["coeffs"])
    except (OSError, ValueError, KeyError, TypeError):
        raise UsageError(f"cannot read curve {spec!r}") from None


def cmd_check_gp(args) -> int:
    rep = is_general_position(load_pointset(args.file), Mode(args.mode))
    _emit({"ok": rep.ok, "witness": list(rep.witness) if rep.witness else None, "mode": rep.mode.value})
    return 0


def cmd_max_subset(args) -> int:
    _emit(max_distinct_subset(load_pointset(args.file)).to_json())
    return 0


def cmd_greedy(args) -> int:
    order = _index_list(args.order) if args.order else None
    _emit(greedy_maximal_subset(load_pointset(args.file), order).to_json())
    return 0


def cmd_classify(args) -> int:
    points = load_pointset(args.file)
    subset = sorted(set(_index_list(args.subset)))
    _pick(points, subset)
    table = TripleRadiusTable(points)
    cert = SubsetCertificate(subset, all_distinct(table, subset), True, False)
    out = []
    for x in range(len(points)):
        if x in subset:
            continue
        try:
            out.append(classify_excluded_point(table, cert, x).to_json())
        except NoCoincidence:
            out.append({"x": x, "case": None, "addable": True})
    _emit({"subset": subset, "distinct_ok": cert.distinct_ok, "exclusions": out})
    return 0


def cmd_locus(args) -> int:
    poly = _locus_from(load_pointset(args.file), args.pairs)
    out = {"degree": poly.degree, "terms": len(poly.terms)}
    if args.emit_coeffs:
        out["coeffs"] = poly.to_records()
    _emit(out)
    return 0


def cmd_intersect(args) -> int:
    rep = count_common_points(parse_curve(args.lhs), parse_curve(args.rhs), args.shear_seed)
    _emit(
        {
            "status": rep.status.value,
            "x_root_count": rep.x_root_count,
            "resultant_degree": rep.resultant_degree,
            "bezout_bound": rep.bezout_bound,
            "shear": format_rational(rep.shear_used),
        }
    )
    return 0


def cmd_bounds(args) -> int:
    _emit(bounds.bound_row(args.k).to_json())
    return 0


def _write_lines(records, out) -> None:
    text = "".join(r.to_json_line() + "\n" for r in records)
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def cmd_experiment(args) -> int:
    run = EXPERIMENTS[args.name]
    records = run(args.trials, args.seed, n=args.n, grid=args.grid, mode=Mode(args.mode), workers=args.workers)
    _write_lines(records, args.out)
    path = quarantine(records, args.quarantine_dir, args.name, args.seed)
    if path is not None:
        print(f"assertion failed; quarantined {sum(not r.passed for r in records)} record(s) to {path}", file=sys.stderr)
        return 1
    return 0


def cmd_search(args) -> int:
    best, record = search_extremal(args.k, args.n, args.iters, args.seed, grid=args.grid, mode=Mode(args.mode))
    if args.out:
        Path(args.out).write_text(
            format_pointset(best, comment=f"search k={args.k} n={args.n} seed={args.seed}")
        )
    _write_lines([record], None)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="circumradii", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    modes = [m.value for m in Mode]

    p = sub.add_parser("check-gp", help="check general position of a point file")
    p.add_argument("file")
    p.add_argument("--mode", choices=modes, default="paper")
    p.set_defaults(func=cmd_check_gp)

    p = sub.add_parser("max-subset", help="maximum subset with distinct triple radii")
    p.add_argument("file")
    p.set_defaults(func=cmd_max_subset)

    p = sub.add_parser("greedy", help="greedy maximal subset")
    p.add_argument("file")
    p.add_argument("--order", help="comma-separated permutation of point indices")
    p.set_defaults(func=cmd_greedy)

    p = sub.add_parser("classify", help="classify points excluded by a subset")
    p.add_argument("file")
    p.add_argument("--subset", required=True, help="comma-separated indices, e.g. 0,1,2")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("locus", help="build the curve R(abX) = R(cdX)")
    p.add_argument("file")
    p.add_argument("--pairs", required=True, help="a,b:c,d")
    p.add_argument("--emit-coeffs", action="store_true")
    p.set_defaults(func=cmd_locus)

    p = sub.add_parser("intersect", help="count common points of two curves")
    p.add_argument("--lhs", required=True, help="circle:CX,CY,R2 | locus:FILE:a,b:c,d | coeffs.json")
    p.add_argument("--rhs", required=True)
    p.add_argument("--shear-seed", type=int, default=None)
    p.set_defaults(func=cmd_intersect)

    p = sub.add_parser("bounds", help="bound formulas at k")
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("experiment", help="run a seeded experiment, JSON lines out")
    p.add_argument("name", choices=sorted(EXPERIMENTS))
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--grid", type=int, default=None)
    p.add_argument("--mode", choices=modes, default="paper")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--out", default=None, help="write records here instead of stdout")
    p.add_argument("--quarantine-dir", default=".")
    p.set_defaults(func=cmd_experiment)

    p = sub.add_parser("search", help="local search for small maximum subsets")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--iters", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--grid", type=int, default=None)
    p.add_argument("--mode", choices=modes, default="paper")
    p.add_argument("--out", default=None, help="write the best point set here")
    p.set_defaults(func=cmd_search)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (
        UsageError,
        PointSetFormatError,
        OSError,
        DuplicatePoint,
        NotGeneralPosition,
        DegeneratePair,
        SamePair,
        GenerationTimeout,
        bounds.KTooSmall,
        ValueError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
