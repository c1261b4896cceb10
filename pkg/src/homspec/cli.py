"""``homspec`` command line: bound curves, exact comparisons, heat bounds, eigenvalue lower bounds.

Exit codes: 0 success, 2 usage or input error, 3 numerical failure,
4 invariant violation (a bound below an exact value).
"""

from __future__ import annotations

import argparse
import json
import math
import sys

from .bounds import (
    CompactSpaceData,
    compact_data,
    counting_bound_alpha,
    li_bound,
    li_improved_bound,
    local_counting_bound,
    optimal_alpha_bound,
    optimal_eigenvalue_lower_bound,
    polynomial_counting_bound,
    sphere_gap_bound,
)
from .curves import CurveTable, sample_grid, to_svg
from .errors import BracketError, DomainError, InvariantViolation, NonConvergence, SingularLimit
from .heat import heat_bound_compact_gap, heat_bound_exponential, heat_bound_polynomial
from .spaces import parse_space
from .specialfns import DEFAULT_CONFIG

EXIT_OK, EXIT_USAGE, EXIT_NUMERIC, EXIT_INVARIANT = 0, 2, 3, 4
COMPARE_TOLERANCE = -1e-9


class _Failure(Exception):
    def __init__(self, code, message):
        super().__init__(message)
        self.code = code


def _positive(text):
    value = float(text)
    if not (value > 0 and math.isfinite(value)):
        raise argparse.ArgumentTypeError(f"expected a positive number, got {text}")
    return value


def _count(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _cfg(args):
    return DEFAULT_CONFIG if args.tol is None else DEFAULT_CONFIG.with_tol(args.tol, args.tol)


def _space(args):
    try:
        return parse_space(args.space)
    except DomainError as exc:
        raise _Failure(EXIT_USAGE, str(exc)) from None


def _grid(args, lo, hi):
    try:
        return sample_grid(lo, hi, args.points, args.log)
    except DomainError as exc:
        raise _Failure(EXIT_USAGE, str(exc)) from None


def _emit(table, args, title):
    text = table.to_csv()
    if args.csv:
        with open(args.csv, "w", newline="", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if args.svg:
        with open(args.svg, "w", encoding="utf-8") as fh:
            fh.write(to_svg(table, title=title))


def _bound_values(named, lams, args, cfg):
    method = args.method
    if method == "integral":
        return [named.bound(lam, cfg).value for lam in lams]
    if method == "alpha":
        if named.compact:
            data = compact_data(named.profile)
            at = lambda lam: (lambda a: counting_bound_alpha(data, lam, a))  # noqa: E731
        else:
            at = lambda lam: (lambda a: local_counting_bound(named.profile, lam, alpha=a))  # noqa: E731
        if args.alpha is not None:
            return [at(lam)(args.alpha).value for lam in lams]
        return [optimal_alpha_bound(at(lam)).value for lam in lams]
    hyp = named.poly_hypothesis()
    c = hyp.c if args.c is None else args.c
    r0 = args.r0 if args.r0 is not None else hyp.D
    numerator = named.space.total_volume if named.compact else "local"
    out = []
    for lam in lams:
        res = polynomial_counting_bound(numerator, c, named.space.real_dim, r0, lam, cfg)
        out.append(res.value if res.is_valid_at(lam) else None)
    return out


def cmd_bound(args):
    named = _space(args)
    cfg = _cfg(args)
    lams = _grid(args, args.lmin, args.lmax)
    table = CurveTable("lambda", lams)
    table.add_column("bound", _run("counting bound", lambda: _bound_values(named, lams, args, cfg)))
    _emit(table, args, f"{named.name}: counting bound ({args.method})")
    return EXIT_OK


def cmd_compare(args):
    named = _space(args)
    if named.exact is None:
        raise _Failure(EXIT_USAGE, f"no exact counting function available for {named.name}")
    cfg = _cfg(args)
    lams = _grid(args, args.lmin, args.lmax)
    table = CurveTable("lambda", lams)
    table.add_column("exact", _run("exact counting function", lambda: [float(named.exact(x)) for x in lams]))
    table.add_column("bound", _run("counting bound", lambda: [named.bound(x, cfg).value for x in lams]))
    _emit(table, args, f"{named.name}: exact counting function and bound")
    gap = min(b - e for b, e in zip(table.columns["bound"], table.columns["exact"]))
    print(f"{named.name}: min(bound - exact) = {gap:.17g} over {len(lams)} points", file=sys.stderr)
    if gap < COMPARE_TOLERANCE:
        raise _Failure(EXIT_INVARIANT, f"bound falls below the exact counting function by {-gap:.3g}")
    return EXIT_OK


def _heat_columns(named, ts, cfg):
    cols = {}
    exact = [named.heat_diagonal(t) for t in ts]
    if all(v is not None for v in exact):
        cols["exact"] = exact
    poly = named.poly_hypothesis()
    cols["poly"] = [heat_bound_polynomial(poly, t, cfg).value for t in ts]
    exp_h = named.exp_hypothesis()
    if exp_h is not None:
        pairs = [heat_bound_exponential(exp_h, t) for t in ts]
        cols["exp"] = [first.value for first, _ in pairs]
        cols["gap"] = [second.value for _, second in pairs]
    elif named.compact:
        lam1 = named.kth_eigenvalue(1)
        cols["gap"] = [heat_bound_compact_gap(named.space.total_volume, poly.c, poly.beta, lam1, t, cfg).value
                       for t in ts]
    return cols


def cmd_heat(args):
    named = _space(args)
    cfg = _cfg(args)
    ts = _grid(args, args.tmin, args.tmax)
    table = CurveTable("t", ts)
    for name, col in _run("heat kernel bounds", lambda: _heat_columns(named, ts, cfg)).items():
        table.add_column(name, col)
    _emit(table, args, f"{named.name}: heat kernel diagonal and bounds")
    if "exact" in table.columns:
        exact = table.columns["exact"]
        for name, col in table.columns.items():
            if name == "exact":
                continue
            gap = min((b - e) / e for b, e in zip(col, exact))
            if gap < COMPARE_TOLERANCE:
                raise _Failure(EXIT_INVARIANT, f"heat bound {name!r} falls below the exact diagonal")
    return EXIT_OK


def cmd_eigmin(args):
    named = _space(args)
    if not named.compact:
        raise _Failure(EXIT_USAGE, f"{named.name} is not compact; eigenvalue lower bounds need vol and diameter")
    profile = named.profile
    D = named.space.diameter if args.diameter is None else args.diameter
    vol = named.space.total_volume if args.volume is None else args.volume
    try:
        data = CompactSpaceData(profile, vol, D)
    except (InvariantViolation, DomainError) as exc:
        raise _Failure(EXIT_USAGE, f"inconsistent space data: {exc}") from None

    report = {"space": named.name, "diameter": D, "volume": vol}
    report["li"] = li_bound(D)
    report["li_improved"] = _run("improved Li bound", lambda: li_improved_bound(data))
    if named.space.family in ("sphere", "circle"):
        report["sphere"] = sphere_gap_bound(D)
    truth = named.kth_eigenvalue(1)
    if truth is not None:
        report["true_sqrt_lambda_1"] = math.sqrt(truth)
    if args.k is not None:
        alpha, value = _run("eigenvalue lower bound", lambda: optimal_eigenvalue_lower_bound(data, args.k))
        report["k"] = args.k
        report["alpha"] = alpha
        report["lower_bound_k"] = value
        truth_k = named.kth_eigenvalue(args.k)
        if truth_k is not None:
            report["true_sqrt_lambda_k"] = math.sqrt(truth_k)

    if args.json:
        print(json.dumps(report, indent=2))
    else:
        for key, value in report.items():
            print(f"{key}: {value}")
    return EXIT_OK


def _run(operation, thunk):
    try:
        return thunk()
    except (NonConvergence, SingularLimit) as exc:
        raise _Failure(EXIT_NUMERIC, f"numerical failure in {operation}: {exc}") from None
    except BracketError as exc:
        raise _Failure(EXIT_NUMERIC, f"numerical failure in {operation}: {exc}") from None
    except DomainError as exc:
        raise _Failure(EXIT_USAGE, f"invalid input for {operation}: {exc}") from None


def build_parser():
    parser = argparse.ArgumentParser(prog="homspec", description="Spectral and heat-kernel bounds on homogeneous spaces.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, abscissa):
        p.add_argument("--space", required=True, help="circle, sN, hN, chN or euclidean-N")
        lo, hi = ("--lmin", "--lmax") if abscissa == "lambda" else ("--tmin", "--tmax")
        p.add_argument(lo, type=_positive, required=True)
        p.add_argument(hi, type=_positive, required=True)
        p.add_argument("--points", type=_count, default=200)
        p.add_argument("--log", action="store_true", help="logarithmic sampling")
        p.add_argument("--csv", help="output CSV path (default: stdout)")
        p.add_argument("--svg", help="optional SVG plot path")
        p.add_argument("--tol", type=_positive, help="quadrature tolerance (absolute and relative)")

    p = sub.add_parser("bound", help="sample a counting-function bound")
    common(p, "lambda")
    p.add_argument("--method", choices=("integral", "alpha", "poly"), default="integral")
    p.add_argument("--alpha", type=float, help="fixed alpha for --method alpha (default: optimised)")
    p.add_argument("--c", type=_positive, help="volume-growth constant for --method poly")
    p.add_argument("--r0", type=_positive, help="growth radius for --method poly")
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("compare", help="exact counting function against its bound")
    common(p, "lambda")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("heat", help="heat kernel diagonal and its bounds")
    common(p, "t")
    p.set_defaults(func=cmd_heat)

    p = sub.add_parser("eigmin", help="lower bounds on sqrt(lambda_1) and sqrt(lambda_k)")
    p.add_argument("--space", required=True)
    p.add_argument("--diameter", type=_positive)
    p.add_argument("--volume", type=_positive)
    p.add_argument("--k", type=int)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_eigmin)
    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    lo = getattr(args, "lmin", getattr(args, "tmin", None))
    hi = getattr(args, "lmax", getattr(args, "tmax", None))
    if lo is not None and hi < lo:
        print(f"homspec: empty range [{lo}, {hi}]", file=sys.stderr)
        return EXIT_USAGE
    if getattr(args, "k", None) is not None and args.k < 0:
        print("homspec: --k must be nonnegative", file=sys.stderr)
        return EXIT_USAGE
    if getattr(args, "alpha", None) is not None and not 0 < args.alpha < math.pi / 2:
        print("homspec: --alpha must lie in (0, pi/2)", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except _Failure as exc:
        print(f"homspec: {exc}", file=sys.stderr)
        return exc.code
    except InvariantViolation as exc:
        print(f"homspec: invariant violation: {exc}", file=sys.stderr)
        return EXIT_INVARIANT


if __name__ == "__main__":
    sys.exit(main())
