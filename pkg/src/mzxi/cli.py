"""Command-line front end.

Exit codes: 0 success, 1 a verified identity or cross-check failed,
2 invalid input, 3 tolerance not met (value still printed).
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .core import Composition, EvalResult, NumericConfig
from .finite_mzv import zeta_finite, zeta_star_finite
from .stuffle import stuffle_product
from .verify import run_suite
from .xi import cross_check, xi_integral, xi_series, xi_stuffle_route

EXIT_OK, EXIT_FAILED, EXIT_INVALID, EXIT_TOLERANCE = 0, 1, 2, 3

ROUTES = {"integral": xi_integral, "series": xi_series, "stuffle": xi_stuffle_route}


class InvalidInput(Exception):
    pass


def _composition(text: str) -> Composition:
    try:
        return Composition.parse(text)
    except ValueError as exc:
        raise InvalidInput(str(exc)) from None


def _fraction(x) -> str:
    return f"{x.numerator}/{x.denominator}" if x.denominator != 1 else str(x.numerator)


def _emit(record: dict, as_json: bool, text: str) -> None:
    if as_json:
        print(json.dumps(record, sort_keys=True))
    else:
        print(text)


def _numeric_config(tol: float) -> NumericConfig:
    max_terms = os.environ.get("MZV_MAX_TERMS")
    try:
        if max_terms:
            return NumericConfig(tol=tol, max_terms=int(max_terms))
        return NumericConfig(tol=tol)
    except ValueError as exc:
        raise InvalidInput(str(exc)) from None


def cmd_finite_zeta(args) -> int:
    c = _composition(args.index)
    if args.upper < 0:
        raise InvalidInput("--upper must be >= 0")
    value = zeta_star_finite(args.upper, c) if args.star else zeta_finite(args.upper, c)
    record = {
        "query": {"command": "finite-zeta", "index": str(c), "upper": str(args.upper), "star": args.star},
        "value": _fraction(value),
        "error_bound": "0",
        "status": "ok",
    }
    _emit(record, args.json, record["value"])
    return EXIT_OK


def cmd_stuffle(args) -> int:
    left, right = _composition(args.left), _composition(args.right)
    terms = stuffle_product(left, right).records()
    record = {
        "query": {"command": "stuffle", "left": str(left), "right": str(right)},
        "terms": terms,
        "status": "ok",
    }
    print(json.dumps(record if args.json else terms, sort_keys=True))
    return EXIT_OK


def _result_record(route: str, result: EvalResult, tol: float) -> dict:
    met = result.error_bound <= tol
    return {
        "route": route,
        "value": repr(result.value),
        "error_bound": repr(result.error_bound),
        "terms": str(result.terms),
        "status": "ok" if met else "tolerance-not-met",
    }


def cmd_xi(args) -> int:
    c = _composition(args.index)
    if not c:
        raise InvalidInput("--index must be a nonempty composition")
    if args.n < 1:
        raise InvalidInput(f"--n must be a positive integer, got {args.n}")
    config = _numeric_config(args.tol)
    query = {"command": "xi", "index": str(c), "n": str(args.n), "route": args.route, "tol": repr(args.tol)}

    if args.route != "all":
        result = ROUTES[args.route](c, args.n, config)
        record = {"query": query, **_result_record(args.route, result, args.tol)}
        _emit(record, args.json, f"{args.route}: {result.value!r} +- {result.error_bound:.3g} [{record['status']}]")
        return EXIT_OK if record["status"] == "ok" else EXIT_TOLERANCE

    report = cross_check(c, args.n, config)
    routes = [_result_record(name, res, args.tol) for name, res in report.routes.items()]
    comparisons = [
        {"pair": f"{cmp.left}-{cmp.right}", "difference": repr(cmp.difference),
         "allowed": repr(cmp.allowed), "ok": cmp.ok}
        for cmp in report.comparisons
    ]
    tolerance_met = all(r["status"] == "ok" for r in routes)
    status = "ok" if report.ok and tolerance_met else ("failed" if not report.ok else "tolerance-not-met")
    record = {"query": query, "routes": routes, "comparisons": comparisons, "status": status}
    lines = [f"{r['route']:>9}: {r['value']} +- {float(r['error_bound']):.3g} [{r['status']}]" for r in routes]
    lines += [f"{cmp['pair']:>18}: |diff|={float(cmp['difference']):.3g} allowed={float(cmp['allowed']):.3g} "
              f"{'pass' if cmp['ok'] else 'FAIL'}" for cmp in comparisons]
    _emit(record, args.json, "\n".join(lines))
    if not report.ok:
        return EXIT_FAILED
    return EXIT_OK if tolerance_met else EXIT_TOLERANCE


def cmd_verify(args) -> int:
    if args.max_weight < 0 or args.max_upper < 0:
        raise InvalidInput("--max-weight and --max-upper must be >= 0")
    cases = run_suite(args.suite, args.max_weight, args.max_upper)
    cases.sort(key=lambda case: (case.suite, case.key))
    failures = [case for case in cases if not case.ok]
    summary: dict = {}
    for case in cases:
        passed, total = summary.get(case.suite, (0, 0))
        summary[case.suite] = (passed + case.ok, total + 1)
    record = {
        "query": {"command": "verify", "suite": args.suite, "max_weight": str(args.max_weight),
                  "max_upper": str(args.max_upper)},
        "summary": {name: {"passed": str(p), "total": str(t)} for name, (p, t) in sorted(summary.items())},
        "failures": [{"suite": f.suite, "case": f.key, "detail": f.detail} for f in failures],
        "status": "ok" if not failures else "failed",
    }
    lines = [f"{name}: {p}/{t} passed" for name, (p, t) in sorted(summary.items())]
    lines += [f"FAIL {f.suite} {f.key}: {f.detail}" for f in failures]
    _emit(record, args.json, "\n".join(lines))
    return EXIT_OK if not failures else EXIT_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="mzxi", description="Multiple zeta values, stuffle products and xi_k(n).")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("finite-zeta", help="exact Z_N(c) or Z*_N(c)")
    p.add_argument("--index", required=True, help='composition such as "2,1"; "" is the empty one')
    p.add_argument("--upper", type=int, required=True, help="upper summation limit N")
    p.add_argument("--star", action="store_true", help="non-strict (star) sum")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_finite_zeta)

    p = sub.add_parser("stuffle", help="stuffle product as a JSON list of {parts, mult}")
    p.add_argument("--left", required=True)
    p.add_argument("--right", required=True)
    p.add_argument("--json", action="store_true", help="wrap the terms in a full output record")
    p.set_defaults(func=cmd_stuffle)

    p = sub.add_parser("xi", help="xi_c(n) by one or all routes")
    p.add_argument("--index", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--route", choices=("integral", "series", "stuffle", "all"), default="series")
    p.add_argument("--tol", type=float, default=1e-6)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_xi)

    p = sub.add_parser("verify", help="run identity suites")
    p.add_argument("--suite", choices=("stuffle", "star", "reduce", "binomial", "xi", "all"), default="all")
    p.add_argument("--max-weight", type=int, default=7,
                   help="total weight for stuffle pairs; also caps depth (<= 5) for star/reduce")
    p.add_argument("--max-upper", type=int, default=20)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (InvalidInput, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
