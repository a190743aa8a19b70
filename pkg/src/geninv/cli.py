"""Command-line front end.

Exit codes: 0 success, 2 usage/parse/validation errors, 3 when a check ran
and found violations or mismatches.  GENINV_SEED overrides the default seed
where --seed is not given.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from .compose import predict_T_after_inv, predict_inv_after_T, predict_one_sided
from .errors import GeninvError
from .inverse import invert_minus, invert_plus
from .properties import GeneratorConfig, run_property, run_suite
from .sampling import ecdf, ks_distance, sample, validate_cdf
from .scalars import as_rational
from .serialize import (
    ext_function_to_obj,
    ext_token,
    function_to_obj,
    parse_function_obj,
    rational_token,
)

DEFAULT_SEED = 42


def _resolve_seed(value) -> int:
    if value is not None:
        return value
    env = os.environ.get("GENINV_SEED")
    if env is not None:
        try:
            return int(env)
        except ValueError as exc:
            raise GeninvError(f"GENINV_SEED must be an integer, got {env!r}") from exc
    return DEFAULT_SEED


def _load_function(path):
    with open(path, encoding="utf-8") as handle:
        try:
            obj = json.load(handle)
        except json.JSONDecodeError as exc:
            raise GeninvError(f"{path}: invalid JSON: {exc}") from exc
    return parse_function_obj(obj)


def _emit(obj):
    print(json.dumps(obj, indent=2))


def _report_obj(report) -> dict:
    return {
        "label": report.label,
        "ok": report.ok,
        "mismatches": [
            {
                "at": rational_token(m.point),
                "predicted": ext_token(m.predicted),
                "actual": ext_token(m.actual),
            }
            for m in report.mismatches
        ],
        "excluded_points": [
            {"at": rational_token(e.x), "actual": ext_token(e.actual)}
            for e in report.excluded_points
        ],
        "excluded_regions": [
            [ext_token(lo), ext_token(hi)] for lo, hi in report.excluded_regions
        ],
    }


def cmd_validate(args) -> int:
    _emit(function_to_obj(_load_function(args.path)))
    return 0


def cmd_invert(args) -> int:
    f = _load_function(args.path)
    inv = invert_plus(f) if args.plus else invert_minus(f)
    _emit(ext_function_to_obj(inv))
    return 0


def cmd_eval(args) -> int:
    f = _load_function(args.path)
    at = as_rational(args.at)
    if args.left:
        value = f.left_limit(at)
    elif args.right:
        value = f.right_limit(at)
    else:
        value = f.eval(at)
    print(rational_token(value))
    return 0


def cmd_compose(args) -> int:
    f = _load_function(args.path)
    if args.check_lemma4:
        reports = [
            predict_T_after_inv(f, "plus"),
            predict_T_after_inv(f, "minus"),
            predict_inv_after_T(f, "plus"),
            predict_inv_after_T(f, "minus"),
        ]
    else:
        reports = list(predict_one_sided(f, args.check_lemma5))
    ok = all(r.ok for r in reports)
    _emit({"checks": [_report_obj(r) for r in reports], "ok": ok})
    return 0 if ok else 3


def _violation_obj(violation) -> dict:
    return {
        "case_index": violation.case_index,
        "generator_seed": violation.generator_seed,
        "witness": [str(w) for w in violation.witness],
        "expected": violation.expected,
        "got": violation.got,
        "function": function_to_obj(violation.function),
    }


def cmd_check(args) -> int:
    config = GeneratorConfig(seed=_resolve_seed(args.seed))
    if args.only:
        results = [run_property(args.only, config, args.cases)]
    else:
        results = run_suite(config, args.cases)
    ok = all(r.passed for r in results)
    _emit(
        {
            "seed": config.seed,
            "cases": args.cases,
            "ok": ok,
            "results": [
                {
                    "id": r.property_id,
                    "description": r.description,
                    "cases_run": r.cases_run,
                    "hypothesis_hits": r.hypothesis_hits,
                    "skips": r.skips,
                    "pass": r.passed,
                    "violations": [_violation_obj(v) for v in r.violations],
                }
                for r in results
            ],
        }
    )
    return 0 if ok else 3


def cmd_sample(args) -> int:
    cdf = validate_cdf(_load_function(args.path))
    for value in sample(cdf, args.n, _resolve_seed(args.seed)):
        print(rational_token(value))
    return 0


def cmd_ecdf(args) -> int:
    with open(args.path, encoding="utf-8") as handle:
        data = [as_rational(line.strip()) for line in handle if line.strip()]
    spec = ecdf(data)
    _emit(function_to_obj(spec.f))
    return 0


def cmd_ks(args) -> int:
    a = validate_cdf(_load_function(args.path_a))
    b = validate_cdf(_load_function(args.path_b))
    print(rational_token(ks_distance(a, b)))
    return 0


def cmd_plotdata(args) -> int:
    f = _load_function(args.path)
    xmin = as_rational(args.xmin)
    xmax = as_rational(args.xmax)
    if xmax < xmin:
        raise GeninvError(f"empty range: xmin = {xmin} > xmax = {xmax}")
    if args.points < 1:
        raise GeninvError("need at least one point")
    grid = {xmin}
    if args.points > 1:
        step = (xmax - xmin) / (args.points - 1)
        grid.update(xmin + k * step for k in range(args.points))
    grid.update(x for x, _ in f.breakpoints if xmin <= x <= xmax)
    for x in sorted(grid):
        row = (x, f.eval(x), f.left_limit(x), f.right_limit(x))
        print("\t".join(str(float(v)) for v in row))
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="geninv",
        description=(
            "Exact calculus for nondecreasing piecewise-affine functions: "
            "generalized inverses, composition checks, and inverse-transform sampling."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check a function file, print its canonical form")
    p.add_argument("path")
    p.set_defaults(handler=cmd_validate)

    p = sub.add_parser("invert", help="emit a generalized inverse as a function file")
    p.add_argument("path")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--plus", action="store_true", help="right-continuous inverse")
    group.add_argument("--minus", action="store_true", help="left-continuous inverse")
    p.set_defaults(handler=cmd_invert)

    p = sub.add_parser("eval", help="evaluate a function or a one-sided limit")
    p.add_argument("path")
    p.add_argument("--at", required=True, metavar="Y")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--left", action="store_true")
    group.add_argument("--right", action="store_true")
    p.set_defaults(handler=cmd_eval)

    p = sub.add_parser("compose", help="check composition laws against exact composition")
    p.add_argument("path")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument(
        "--check-lemma4",
        action="store_true",
        help="jump-band and plateau composition laws with excluded edges",
    )
    group.add_argument(
        "--check-lemma5",
        choices=("right", "left"),
        help="gap-free laws for a globally one-sided-continuous function",
    )
    p.set_defaults(handler=cmd_compose)

    p = sub.add_parser("check", help="run the property suite")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--cases", type=int, default=200)
    p.add_argument("--only", metavar="ID", help="run a single property id")
    p.set_defaults(handler=cmd_check)

    p = sub.add_parser("sample", help="inverse-transform samples from a CDF file")
    p.add_argument("path")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, default=None)
    p.set_defaults(handler=cmd_sample)

    p = sub.add_parser("ecdf", help="empirical CDF of a one-value-per-line data file")
    p.add_argument("path")
    p.set_defaults(handler=cmd_ecdf)

    p = sub.add_parser("ks", help="exact sup-distance between two CDF files")
    p.add_argument("path_a")
    p.add_argument("path_b")
    p.set_defaults(handler=cmd_ks)

    p = sub.add_parser("plotdata", help="TSV of (x, value, left, right) rows")
    p.add_argument("path")
    p.add_argument("--xmin", required=True)
    p.add_argument("--xmax", required=True)
    p.add_argument("--points", type=int, default=101)
    p.set_defaults(handler=cmd_plotdata)

    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except GeninvError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
