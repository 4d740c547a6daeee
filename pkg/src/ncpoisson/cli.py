"""Command-line front end.

Exit status: 0 on success, 1 when a verification finds a failing identity,
2 on usage, file or expression errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Callable

from . import expr as E
from .evaluate import EvaluationError, FreeEvaluator, SPACES, evaluate, h_expansion
from .files import AlgebraFileError, parse_algebra_file
from .linear import format_rational, format_term, join_terms
from .lm import (
    check_induced_dual_prepoisson,
    check_lie_object,
    check_poisson_object,
    liezation_object,
    poissonization_object,
)
from .loday import AlgebraError, InternalConsistency, LodayAlgebra, check_leibniz, check_liezation, format_vector, liezation
from .poisson import (
    check_dual_prepoisson,
    check_graded_dual_prepoisson,
    check_poissonization_hom,
    check_subalgebra,
)
from .quantization import (
    check_dialgebra_axioms,
    check_generator_commutator,
    check_pbw_associativity,
    check_star_associativity,
    check_symbol_roundtrip,
    classical_limit_check,
)
from .report import GuardExceeded, Report

OK, FAILED, USAGE = 0, 1, 2
SUITES = ("loday", "dualprepoisson", "lieobject", "dialgebra", "limits")
MAX_DEGREE_CAP = 3


class UsageError(Exception):
    pass


def _suite_runners(max_degree: int) -> dict[str, list[Callable]]:
    d = max_degree
    return {
        "loday": [check_liezation],
        "dualprepoisson": [
            lambda L: check_dual_prepoisson(L, d),
            lambda L: check_poissonization_hom(L, d),
            lambda L: check_graded_dual_prepoisson(L, min(d, 2)),
            check_subalgebra,
        ],
        "lieobject": [
            lambda L: check_lie_object(*liezation_object(L)),
            lambda L: check_poisson_object(*poissonization_object(L, d), d),
            lambda L: check_induced_dual_prepoisson(L, d),
        ],
        "dialgebra": [
            lambda L: check_dialgebra_axioms(L, d),
            check_generator_commutator,
            lambda L: check_pbw_associativity(L, d),
            lambda L: check_symbol_roundtrip(L, d + 1),
            lambda L: check_star_associativity(L, d),
        ],
        "limits": [lambda L: classical_limit_check(L, d)],
    }


def _merge(name: str, reports: list[Report]) -> Report:
    out = Report(name)
    for r in reports:
        out.extend(r)
    return out


def run_verify(A: LodayAlgebra, suite: str, max_degree: int) -> tuple[Report, list[Report]]:
    if max_degree > MAX_DEGREE_CAP:
        raise GuardExceeded(f"max_degree={max_degree} exceeds the cap {MAX_DEGREE_CAP}")
    if max_degree < 0:
        raise UsageError("--max-degree must be non-negative")
    names = SUITES if suite == "all" else (suite,)
    leib = check_leibniz(A)
    if not leib.ok:
        # nothing downstream is defined without the Leibniz identity
        return _merge(suite, [leib]), [leib]
    try:
        L = liezation(A)
    except InternalConsistency as exc:
        r = Report("liezation")
        r.record("liezation is consistent", (), str(exc), "")
        return _merge(suite, [r]), [r]
    runners = _suite_runners(max_degree)
    parts = []
    for name in names:
        reports = [fn(L) for fn in runners[name]]
        if name == "loday":
            reports.insert(0, leib)
        parts.append(_merge(name, reports))
    return _merge(suite, parts), parts


# -- output ----------------------------------------------------------------------------

def emit(args, payload: dict, text: str) -> None:
    if args.format == "json":
        print(json.dumps(payload, indent=2, sort_keys=False))
    else:
        print(text)


def report_text(total: Report, parts: list[Report]) -> str:
    lines = [p.summary() for p in parts]
    for p in parts:
        for f in p.failures[:10]:
            lines.append(f"  {p.suite}: {f.identity} at ({', '.join(f.witness)})")
            lines.append(f"    lhs = {f.lhs}")
            lines.append(f"    rhs = {f.rhs}")
    if len(parts) > 1:
        lines.append(total.summary())
    return "\n".join(lines)


def report_json(total: Report) -> dict:
    return total.to_dict()


# -- commands ----------------------------------------------------------------------------

def load(path: str, validate: bool = True) -> LodayAlgebra:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    return parse_algebra_file(text).to_algebra(validate=validate)


def cmd_verify(args) -> int:
    A = load(args.file, validate=False)
    total, parts = run_verify(A, args.suite, args.max_degree)
    payload = {"command": "verify", "algebra": A.name,
               "report": report_json(total),
               "suites": [{"suite": p.suite, "checked": p.checked, "failed": len(p.failures),
                           "passed": p.ok} for p in parts]}
    emit(args, payload, report_text(total, parts))
    return OK if total.ok else FAILED


def cmd_liezation(args) -> int:
    A = load(args.file)
    L = liezation(A)
    qn = L.quotient_names
    brackets, lines = {}, []
    for (a, b), v in sorted(L.quotient_brackets().items()):
        if v:
            brackets[f"{qn[a]},{qn[b]}"] = {qn[k]: format_rational(c) for k, c in sorted(v.items())}
            lines.append(f"[{qn[a]},{qn[b]}] = " + join_terms(format_term(c, [qn[k]]) for k, c in sorted(v.items())))
    result = {
        "ann_basis": [format_vector(v, A.names) for v in L.ann.basis],
        "quotient_dim": L.quotient_dim,
        "quotient_basis": list(qn),
        "quotient_brackets": brackets,
    }
    ann = f"span{{{', '.join(result['ann_basis'])}}}" if result["ann_basis"] else "0"
    text = [f"ann = {ann}",
            f"quotient dimension {L.quotient_dim}, basis {', '.join(qn) or '(none)'}"]
    text += lines
    emit(args, {"command": "liezation", "algebra": A.name, "result": result}, "\n".join(text))
    return OK


def cmd_eval(args) -> int:
    A = load(args.file)
    ev, value = evaluate(A, args.space, args.expr)
    out = ev.format(value)
    payload = {"command": "eval", "algebra": A.name, "space": args.space,
               "expression": args.expr, "result": out}
    emit(args, payload, out)
    return OK


def cmd_quantize(args) -> int:
    A = load(args.file)
    ev, value = evaluate(A, "star", args.expr)
    out = ev.format(value)
    expansion = h_expansion(ev, value)
    payload = {"command": "quantize", "algebra": A.name, "expression": args.expr,
               "result": out, "classical": expansion.get(0, "0"),
               "h_expansion": {str(k): v for k, v in expansion.items()}}
    text = [out, f"h^0: {expansion.get(0, '0')}"]
    text += [f"h^{k}: {v}" for k, v in expansion.items() if k]
    emit(args, payload, "\n".join(text))
    return OK


def cmd_free_loday(args) -> int:
    names = [n.strip() for n in args.generators.split(",") if n.strip()]
    if not names or len(set(names)) != len(names):
        raise UsageError("--generators needs distinct comma-separated names")
    for n in names:
        if n == "h" or not n.isidentifier():
            raise UsageError(f"invalid generator name {n!r}")
    ev = FreeEvaluator(names)
    result = ev.format(ev.run(E.parse_expression(args.expr)))
    emit(args, {"command": "free-loday", "generators": names, "expression": args.expr,
                "result": result}, result)
    return OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    parser = argparse.ArgumentParser(
        prog="ncpoisson",
        description="Loday algebras, Loday-Poisson algebras and their quantization.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", parents=[common], help="run exhaustive identity checks")
    p.add_argument("file")
    p.add_argument("--suite", choices=SUITES + ("all",), default="all")
    p.add_argument("--max-degree", type=int, default=2)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("liezation", parents=[common], help="show g^ann and g_Lie")
    p.add_argument("file")
    p.set_defaults(func=cmd_liezation)

    p = sub.add_parser("eval", parents=[common], help="evaluate an expression")
    p.add_argument("file")
    p.add_argument("--space", choices=SPACES, default="poly")
    p.add_argument("--expr", required=True)
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("quantize", parents=[common], help="evaluate in Poly_star with its h-expansion")
    p.add_argument("file")
    p.add_argument("--expr", required=True)
    p.set_defaults(func=cmd_quantize)

    p = sub.add_parser("free-loday", parents=[common], help="compute in the free Loday algebra")
    p.add_argument("--generators", required=True)
    p.add_argument("--expr", required=True)
    p.set_defaults(func=cmd_free_loday)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (AlgebraFileError, E.ExpressionSyntaxError) as exc:
        print(f"error: {exc}", file=sys.stderr)
    except (AlgebraError, EvaluationError, GuardExceeded, UsageError) as exc:
        print(f"error: {exc}", file=sys.stderr)
    return USAGE


if __name__ == "__main__":
    sys.exit(main())
