"""Command-line front end.

Verbs: nu, threshold, closure, frac-power, rees, multiplicity, test-ideal,
jumping, verify.  Input ideals are IdealSpec JSON files; all numeric output
is exact rationals rendered as strings.  Exit codes: 0 success / verifier
pass, 1 verifier fail (report details the counterexample), 2 usage, parse,
or guard errors with a one-line diagnostic on stderr.

Output is byte-identical across runs and across --jobs settings: the library
is pure and every collection is sorted before emission, so --jobs is accepted
and validated but changes nothing observable.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from pathlib import Path

from . import corpus
from .groebner import BasisSizeExceeded
from .monomial import MonomialIdeal, ideal_from_polynomials
from .newton import (
    LatticeScanExceeded,
    NP_DIM_MAX,
    VOLUME_DIM_MAX,
    fractional_power,
    integral_closure,
    multiplicity,
    rees_valuations,
)
from .polycore import ParsedIdeal, SpecError, format_rational, parse_ideal_spec, parse_rational
from .serialize import ideal_to_spec, report_to_csv, report_to_json
from .simplex import SimplexSizeExceeded
from .testideal import crosscheck_thresholds_equal_jumps, jumping_numbers, test_ideal
from .thresholds import (
    GuardExceeded,
    INFINITE,
    NotInRadical,
    check_briancon_skoda,
    check_finiteness_bound,
    check_multiplicity_bound,
    check_parameter_lemma,
    check_theorem_c,
    monomial_threshold_exact,
    nu,
    smallest_power_inside,
    threshold,
)

E_GUARD = 10 ** 6  # cap on p^e for nu/threshold commands

VERIFY_TARGETS = (
    "parameter-lemma",
    "theorem-c",
    "briancon-skoda",
    "finiteness",
    "multiplicity",
    "thresholds-jumps",
)


class CliError(Exception):
    """One-line diagnostic, exit code 2."""


def _load_ideal(path: str) -> ParsedIdeal:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc.strerror or exc}") from None
    try:
        return parse_ideal_spec(text)
    except SpecError as exc:
        raise CliError(f"{path}: {exc}") from None


def _same_ring(*ideals: ParsedIdeal) -> None:
    first = ideals[0]
    for other in ideals[1:]:
        if other.p != first.p or other.variables != first.variables:
            raise CliError("input ideals must share the same p and variable list")


def _monomial(parsed: ParsedIdeal, flag: str) -> MonomialIdeal:
    try:
        return ideal_from_polynomials(parsed.polynomials)
    except ValueError:
        raise CliError(f"{flag}: generators must be nonzero monomials for this command") from None


def _emit(report, fmt: str) -> None:
    if fmt == "csv":
        sys.stdout.write(report_to_csv(report))
    else:
        sys.stdout.write(report_to_json(report))


def _sequence_lines(rows) -> str:
    out = ["e,nu,ratio"]
    for e, value, ratio in rows:
        out.append(f"{e},{value},{format_rational(ratio)}")
    return "\n".join(out) + "\n"


# ---------------------------------------------------------------------------
# verb handlers
# ---------------------------------------------------------------------------


def _cmd_nu(args) -> int:
    a = _load_ideal(args.a)
    j = _load_ideal(args.j)
    _same_ring(a, j)
    if a.p ** args.e > E_GUARD:
        raise CliError(f"p^e = {a.p}^{args.e} exceeds the guard {E_GUARD}")
    value = nu(a.polynomials, j.polynomials, a.p, args.e)
    if value == INFINITE:
        report = {"e": args.e, "nu": INFINITE, "ratio": INFINITE}
    else:
        report = {"e": args.e, "nu": value, "ratio": Fraction(value, a.p ** args.e)}
    _emit(report, args.format)
    return 0


def _cmd_threshold(args) -> int:
    a = _load_ideal(args.a)
    j = _load_ideal(args.j)
    _same_ring(a, j)
    if a.p ** args.e_max > E_GUARD:
        raise CliError(f"p^e_max = {a.p}^{args.e_max} exceeds the guard {E_GUARD}")
    try:
        estimate = threshold(a.polynomials, j.polynomials, a.p, args.e_max)
    except NotInRadical as exc:
        raise CliError(f"threshold undefined: {exc}") from None
    if args.emit_sequence:
        sys.stdout.write(_sequence_lines(estimate.sequence))
        return 0
    report = {
        "exact": estimate.exact,
        "lower": estimate.lower,
        "upper": estimate.upper,
        "sequence": [[e, v, r] for e, v, r in estimate.sequence],
        "method": estimate.method,
    }
    _emit(report, args.format)
    return 0


def _ideal_report(parsed: ParsedIdeal, result: MonomialIdeal) -> dict:
    return ideal_to_spec(result, parsed.variables, parsed.p)


def _cmd_closure(args) -> int:
    parsed = _load_ideal(args.ideal)
    ideal = _monomial(parsed, "--ideal")
    _emit(_ideal_report(parsed, integral_closure(ideal)), args.format)
    return 0


def _cmd_frac_power(args) -> int:
    parsed = _load_ideal(args.ideal)
    ideal = _monomial(parsed, "--ideal")
    t = _parse_rat(args.t)
    if t < 0:
        raise CliError("--t must be nonnegative")
    result = fractional_power(ideal, t, bool(args.strict))
    _emit(_ideal_report(parsed, result), args.format)
    return 0


def _cmd_rees(args) -> int:
    parsed = _load_ideal(args.ideal)
    ideal = _monomial(parsed, "--ideal")
    report = {
        "facets": [
            {"normal": list(v), "value": format_rational(c)}
            for v, c in rees_valuations(ideal)
        ]
    }
    _emit(report, args.format)
    return 0


def _cmd_multiplicity(args) -> int:
    parsed = _load_ideal(args.ideal)
    ideal = _monomial(parsed, "--ideal")
    try:
        value = multiplicity(ideal)
    except ValueError as exc:
        raise CliError(str(exc)) from None
    _emit({"multiplicity": value}, args.format)
    return 0


def _cmd_test_ideal(args) -> int:
    parsed = _load_ideal(args.ideal)
    ideal = _monomial(parsed, "--ideal")
    t = _parse_rat(args.t)
    if t < 0:
        raise CliError("--t must be nonnegative")
    _emit(_ideal_report(parsed, test_ideal(ideal, t)), args.format)
    return 0


def _cmd_jumping(args) -> int:
    parsed = _load_ideal(args.ideal)
    ideal = _monomial(parsed, "--ideal")
    bound = _parse_rat(args.bound) if args.bound else Fraction(ideal.dim + 2)
    if bound <= 0:
        raise CliError("--bound must be positive")
    spectrum = jumping_numbers(ideal, bound)
    report = {
        "bound": bound,
        "jumps": [format_rational(t) for t in spectrum.jumps],
        "ideals": {
            format_rational(t): _ideal_report(parsed, spectrum.ideals[t])["generators"]
            for t in spectrum.jumps
        },
    }
    _emit(report, args.format)
    return 0


def _parse_rat(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except SpecError as exc:
        raise CliError(str(exc)) from None


# ---------------------------------------------------------------------------
# verify suites
# ---------------------------------------------------------------------------


def _verify_parameter_lemma(args) -> dict:
    reports = [
        check_parameter_lemma(exps, dim)
        for exps, dim in corpus.all_parameter_cases(max_dim=3, max_exp=4)
    ]
    failures = [r for r in reports if r["verdict"] != "pass"]
    return {
        "check": "parameter-lemma",
        "verdict": "pass" if not failures else "fail",
        "cases": len(reports),
        "details": {"failures": failures},
    }


def _verify_theorem_c(args) -> dict:
    if args.i or args.j:
        if not (args.i and args.j):
            raise CliError("verify theorem-c needs both --i and --j (or neither)")
        i_parsed = _load_ideal(args.i)
        j_parsed = _load_ideal(args.j)
        _same_ring(i_parsed, j_parsed)
        I = _monomial(i_parsed, "--i")
        J = _monomial(j_parsed, "--j")
        exps = _parameter_exponents(J)
        try:
            report = check_theorem_c(I, exps)
        except ValueError as exc:
            raise CliError(str(exc)) from None
        return report
    pairs = corpus.theorem_c_pairs(count=200)
    failures = []
    for I, exps, dim in pairs:
        report = check_theorem_c(I, exps)
        if report["verdict"] != "pass":
            failures.append({"I": I, "exponents": list(exps), "report": report})
    return {
        "check": "theorem-c",
        "verdict": "pass" if not failures else "fail",
        "cases": len(pairs),
        "details": {"failures": failures},
    }


def _parameter_exponents(J: MonomialIdeal) -> tuple[int, ...]:
    exps = []
    for g in J.generators:
        support = [(i, e) for i, e in enumerate(g) if e]
        if len(support) != 1:
            raise CliError("--j must be a parameter ideal (pure variable powers)")
        exps.append(support[0])
    exps.sort()
    if [i for i, _ in exps] != list(range(len(exps))):
        raise CliError("--j must use the leading variables x1..xn")
    return tuple(e for _, e in exps)


def _verify_briancon_skoda(args) -> dict:
    n_max = args.n_max or 3
    if args.j:
        J = _monomial(_load_ideal(args.j), "--j")
        return check_briancon_skoda(J, n_max)
    ideals = corpus.briancon_skoda_ideals(count=100)
    failures = []
    for J in ideals:
        report = check_briancon_skoda(J, n_max)
        if report["verdict"] != "pass":
            failures.append({"J": J, "report": report})
    return {
        "check": "briancon-skoda",
        "verdict": "pass" if not failures else "fail",
        "cases": len(ideals),
        "details": {"failures": failures},
    }


def _verify_finiteness(args) -> dict:
    if args.a or args.j:
        if not (args.a and args.j):
            raise CliError("verify finiteness needs both --a and --j (or neither)")
        a_parsed = _load_ideal(args.a)
        j_parsed = _load_ideal(args.j)
        _same_ring(a_parsed, j_parsed)
        a = _monomial(a_parsed, "--a")
        J = _monomial(j_parsed, "--j")
        try:
            return check_finiteness_bound(a, J)
        except NotInRadical as exc:
            raise CliError(str(exc)) from None
    pairs = corpus.finiteness_pairs(count=60)
    failures = []
    for a, J in pairs:
        report = check_finiteness_bound(a, J)
        if report["verdict"] != "pass":
            failures.append({"a": a, "J": J, "report": report})
    return {
        "check": "finiteness-bound",
        "verdict": "pass" if not failures else "fail",
        "cases": len(pairs),
        "details": {"failures": failures},
    }


def _verify_multiplicity(args) -> dict:
    if args.a or args.j:
        if not (args.a and args.j):
            raise CliError("verify multiplicity needs both --a and --j (or neither)")
        a_parsed = _load_ideal(args.a)
        j_parsed = _load_ideal(args.j)
        _same_ring(a_parsed, j_parsed)
        a = _monomial(a_parsed, "--a")
        J = _monomial(j_parsed, "--j")
        exps = _parameter_exponents(J)
        try:
            return check_multiplicity_bound(a, exps)
        except ValueError as exc:
            raise CliError(str(exc)) from None
    pairs = corpus.multiplicity_pairs(count=100)
    failures = []
    for a, exps in pairs:
        report = check_multiplicity_bound(a, exps)
        if report["verdict"] != "pass":
            failures.append({"a": a, "exponents": list(exps), "report": report})
    return {
        "check": "multiplicity-bound",
        "verdict": "pass" if not failures else "fail",
        "cases": len(pairs),
        "details": {"failures": failures},
    }


def _verify_thresholds_jumps(args) -> dict:
    bound = _parse_rat(args.bound) if args.bound else Fraction(4)
    if args.ideal:
        a = _monomial(_load_ideal(args.ideal), "--ideal")
        try:
            return crosscheck_thresholds_equal_jumps(a, bound)
        except ValueError as exc:
            raise CliError(str(exc)) from None
    targets = [
        MonomialIdeal(2, ((0, 1), (1, 0))),
        MonomialIdeal(2, ((0, 3), (2, 0))),
        MonomialIdeal(2, ((0, 2), (1, 1), (2, 0))),
    ]
    failures = []
    for a in targets:
        report = crosscheck_thresholds_equal_jumps(a, bound)
        if report["verdict"] != "pass":
            failures.append({"a": a, "report": report})
    return {
        "check": "thresholds-equal-jumps",
        "verdict": "pass" if not failures else "fail",
        "cases": len(targets),
        "details": {"failures": failures},
    }


_VERIFY_HANDLERS = {
    "parameter-lemma": _verify_parameter_lemma,
    "theorem-c": _verify_theorem_c,
    "briancon-skoda": _verify_briancon_skoda,
    "finiteness": _verify_finiteness,
    "multiplicity": _verify_multiplicity,
    "thresholds-jumps": _verify_thresholds_jumps,
}


def _cmd_verify(args) -> int:
    report = _VERIFY_HANDLERS[args.target](args)
    _emit(report, args.format)
    return 0 if report["verdict"] == "pass" else 1


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fthresh",
        description="Exact F-threshold, integral-closure, and jumping-number computations.",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    def common(p):
        p.add_argument("--format", choices=("json", "csv"), default="json")
        p.add_argument("--jobs", type=int, default=1,
                       help="worker hint; output is identical for every value")

    p = sub.add_parser("nu", help="largest n with a^n not inside J^[p^e]")
    p.add_argument("--a", required=True)
    p.add_argument("--j", required=True)
    p.add_argument("--e", type=int, default=1)
    common(p)
    p.set_defaults(func=_cmd_nu)

    p = sub.add_parser("threshold", help="threshold estimate of a with respect to J")
    p.add_argument("--a", required=True)
    p.add_argument("--j", required=True)
    p.add_argument("--e-max", dest="e_max", type=int, default=3)
    p.add_argument("--emit-sequence", action="store_true")
    common(p)
    p.set_defaults(func=_cmd_threshold)

    p = sub.add_parser("closure", help="integral closure of a monomial ideal")
    p.add_argument("--ideal", required=True)
    common(p)
    p.set_defaults(func=_cmd_closure)

    p = sub.add_parser("frac-power", help="fractional power I_t (or strict I_>t)")
    p.add_argument("--ideal", required=True)
    p.add_argument("--t", required=True)
    p.add_argument("--strict", action="store_true")
    common(p)
    p.set_defaults(func=_cmd_frac_power)

    p = sub.add_parser("rees", help="Rees valuations (facet normals with values)")
    p.add_argument("--ideal", required=True)
    common(p)
    p.set_defaults(func=_cmd_rees)

    p = sub.add_parser("multiplicity", help="Hilbert-Samuel multiplicity")
    p.add_argument("--ideal", required=True)
    common(p)
    p.set_defaults(func=_cmd_multiplicity)

    p = sub.add_parser("test-ideal", help="monomial test ideal tau(a^t)")
    p.add_argument("--ideal", required=True)
    p.add_argument("--t", required=True)
    common(p)
    p.set_defaults(func=_cmd_test_ideal)

    p = sub.add_parser("jumping", help="jumping numbers up to a bound")
    p.add_argument("--ideal", required=True)
    p.add_argument("--bound")
    common(p)
    p.set_defaults(func=_cmd_jumping)

    p = sub.add_parser("verify", help="run an identity-verification suite")
    p.add_argument("target", choices=VERIFY_TARGETS)
    p.add_argument("--a")
    p.add_argument("--j")
    p.add_argument("--i")
    p.add_argument("--ideal")
    p.add_argument("--bound")
    p.add_argument("--n-max", dest="n_max", type=int)
    common(p)
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if args.jobs < 1:
        parser.error("--jobs must be >= 1")
    try:
        return args.func(args)
    except CliError as exc:
        print(f"fthresh: {exc}", file=sys.stderr)
        return 2
    except (GuardExceeded, BasisSizeExceeded, LatticeScanExceeded, SimplexSizeExceeded) as exc:
        print(f"fthresh: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"fthresh: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
