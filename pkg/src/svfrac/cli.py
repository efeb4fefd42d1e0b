"""Command-line front end.

Exit codes: 0 ok, 1 verification failure, 2 input error, 3 parameter error,
4 non-convergence. No computation result is written on exit codes 2-3.
"""

from __future__ import annotations

import argparse
import json
import sys

from .gridmap import GridMap
from .inclusion import CaputoProblem, NonConvergenceError, funnel_to_csv, solution_funnel, solve_with_policy
from .regularity import bound_l0, bound_sup
from .rl import rl_setvalued
from .selections import certify_extremals, certify_midpoint
from .verify import DEFAULT_RHOS, run_verification

EXIT_OK = 0
EXIT_VERIFY_FAIL = 1
EXIT_INPUT = 2
EXIT_PARAM = 3
EXIT_NO_CONVERGENCE = 4


class ParameterError(ValueError):
    pass


def _load_json(path: str) -> dict:
    try:
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read JSON from {path}: {exc}") from exc


class InputError(ValueError):
    pass


def _load_map(args) -> GridMap:
    if args.input:
        obj = _load_json(args.input)
        try:
            return GridMap.from_json(obj)
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError(f"malformed map spec: {exc}") from exc
    try:
        return GridMap.from_builtin(args.builtin, args.a, args.b, args.grid)
    except ValueError as exc:
        raise ParameterError(str(exc)) from exc


def _write(path: str | None, text: str) -> None:
    if path:
        with open(path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_integrate(args) -> int:
    if args.rho <= 0:
        raise ParameterError(f"fractional order rho must be > 0, got {args.rho}")
    f = _load_map(args)
    g = rl_setvalued(f, args.rho)
    if args.format == "json":
        _write(args.output, json.dumps(g.to_json(), sort_keys=True) + "\n")
    else:
        _write(args.output, g.to_csv())
    return EXIT_OK


def cmd_verify(args) -> int:
    rhos = tuple(args.rho) if args.rho else DEFAULT_RHOS
    if any(r <= 0 for r in rhos):
        raise ParameterError("fractional orders must be > 0")
    fixtures = None
    if args.input:
        obj = _load_json(args.input)
        try:
            fixtures = {name: GridMap.from_json(spec) for name, spec in obj.items()}
        except (AttributeError, KeyError, TypeError, ValueError) as exc:
            raise InputError(f"malformed fixture file: {exc}") from exc
    reports = run_verification(rhos=rhos, fixtures=fixtures, seed=args.seed, n_segments=args.grid)
    text = json.dumps([r.to_json() for r in reports], sort_keys=True, indent=1) + "\n"
    _write(args.output, text)
    failed = [r for r in reports if not r.passed]
    for r in failed:
        print(
            f"FAIL theorem {r.theorem} fixture {r.fixture} rho {r.rho:g}: "
            f"measured {r.measured:.12g} bound {r.bound:.12g}",
            file=sys.stderr,
        )
    return EXIT_VERIFY_FAIL if failed else EXIT_OK


def cmd_selections(args) -> int:
    if args.rho <= 0:
        raise ParameterError(f"fractional order rho must be > 0, got {args.rho}")
    f = _load_map(args)
    g = rl_setvalued(f, args.rho)
    lo_cert, hi_cert = certify_extremals(g)
    mid_cert = certify_midpoint(g)
    text = json.dumps(
        [c.to_json() for c in (lo_cert, hi_cert, mid_cert)], sort_keys=True, indent=1
    ) + "\n"
    _write(args.output, text)
    return EXIT_OK


def cmd_bounds(args) -> int:
    try:
        out = {"bound_sup": bound_sup(args.rho, args.M, args.a, args.b)}
        if args.rho > 1:
            out["bound_L0"] = bound_l0(args.rho, args.M, args.a, args.b)
    except ValueError as exc:
        raise ParameterError(str(exc)) from exc
    _write(args.output, json.dumps(out, sort_keys=True) + "\n")
    return EXIT_OK


def cmd_inclusion(args) -> int:
    if args.alpha is not None and not 1.0 < args.alpha < 2.0:
        raise ParameterError(f"order alpha must lie in (1, 2), got {args.alpha}")
    if not args.input:
        raise InputError("inclusion requires --input with a problem JSON")
    obj = _load_json(args.input)
    if args.alpha is not None:
        obj["alpha"] = args.alpha
    try:
        problem = CaputoProblem.from_json(obj)
    except KeyError as exc:
        raise InputError(f"malformed problem spec: missing {exc}") from exc
    except ValueError as exc:
        raise ParameterError(str(exc)) from exc
    try:
        if args.funnel:
            g = solution_funnel(problem, n=args.grid, max_iter=args.max_iter, tol=args.tol)
            _write(args.output, funnel_to_csv(g))
        else:
            traj = solve_with_policy(
                problem, policy=args.policy, n=args.grid, max_iter=args.max_iter, tol=args.tol
            )
            _write(args.output, traj.to_csv())
            print(
                f"iterations_used={traj.iterations_used} residual={traj.residual:.12g}",
                file=sys.stderr,
            )
    except NonConvergenceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NO_CONVERGENCE
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="svfrac",
        description="Fractional integration of interval-valued maps, regularity "
        "verification, and Caputo inclusion solving.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, output=True):
        sp.add_argument("--input", help="input JSON path")
        sp.add_argument("--output", help="output path (default: stdout)")
        sp.add_argument("--grid", type=int, default=256)
        sp.add_argument("--seed", type=int, default=42)

    sp = sub.add_parser("integrate", help="set-valued RL integral of a map, CSV/JSON out")
    common(sp)
    sp.add_argument("--builtin", default="sym_linear", help="builtin map when no --input")
    sp.add_argument("--a", type=float, default=0.0)
    sp.add_argument("--b", type=float, default=1.0)
    sp.add_argument("--rho", type=float, required=True)
    sp.add_argument("--format", choices=("csv", "json"), default="csv")
    sp.set_defaults(func=cmd_integrate)

    sp = sub.add_parser("verify", help="run the theorem verification suite, JSON report out")
    common(sp)
    sp.add_argument("--rho", type=float, action="append", help="restrict to these orders")
    sp.set_defaults(func=cmd_verify, grid=64)

    sp = sub.add_parser("selections", help="selection certificates of the integral map")
    common(sp)
    sp.add_argument("--builtin", default="sym_linear")
    sp.add_argument("--a", type=float, default=0.0)
    sp.add_argument("--b", type=float, default=1.0)
    sp.add_argument("--rho", type=float, required=True)
    sp.set_defaults(func=cmd_selections)

    sp = sub.add_parser("bounds", help="analytic sup/Lipschitz bounds for given parameters")
    sp.add_argument("--rho", type=float, required=True)
    sp.add_argument("--M", type=float, required=True)
    sp.add_argument("--a", type=float, default=0.0)
    sp.add_argument("--b", type=float, default=1.0)
    sp.add_argument("--output")
    sp.set_defaults(func=cmd_bounds)

    sp = sub.add_parser("inclusion", help="solve a Caputo inclusion by selection policy")
    common(sp)
    sp.add_argument("--alpha", type=float, help="override problem order")
    sp.add_argument("--policy", choices=("lower", "upper", "midpoint"), default="midpoint")
    sp.add_argument("--funnel", action="store_true", help="emit lower/upper envelope CSV")
    sp.add_argument("--max-iter", type=int, default=50)
    sp.add_argument("--tol", type=float, default=1e-10)
    sp.set_defaults(func=cmd_inclusion)

    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ParameterError as exc:
        print(f"parameter error: {exc}", file=sys.stderr)
        return EXIT_PARAM
    except ValueError as exc:
        print(f"parameter error: {exc}", file=sys.stderr)
        return EXIT_PARAM


def console_main() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    raise SystemExit(main())
