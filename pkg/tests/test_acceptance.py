"""Acceptance suite: one test per criterion, each printing a pass/fail line
and holding itself to the stated runtime budget (run with -s to see the lines).
"""

import json
import subprocess
import sys
import time
from contextlib import contextmanager
from fractions import Fraction
from itertools import product
from pathlib import Path

import pytest

from fthresh.corpus import (
    all_parameter_cases,
    briancon_skoda_ideals,
    finiteness_pairs,
    fractional_law_ideals,
    membership_instances,
    multiplicity_pairs,
    order_value_instances,
    theorem_c_pairs,
)
from fthresh.groebner import buchberger, normal_form
from fthresh.monomial import MonomialIdeal, ideal_power, ideal_product, minimalize
from fthresh.newton import (
    fractional_power,
    integral_closure,
    multiplicity,
    newton_polyhedron,
    order_value,
    order_value_lp,
)
from fthresh.polycore import INFINITY, PolynomialFp
from fthresh.testideal import jumping_numbers, test_ideal as tau
from fthresh.thresholds import (
    NotInRadical,
    check_briancon_skoda,
    check_multiplicity_bound,
    check_parameter_lemma,
    check_theorem_c,
    check_finiteness_bound,
    monomial_threshold_exact,
    nu_monomial,
    nu_monomial_bruteforce,
    nu_sequence,
    parameter_ideal,
)

M = minimalize([(1, 0), (0, 1)])
I23 = minimalize([(2, 0), (0, 3)])


def F(a, b=1):
    return Fraction(a, b)


@contextmanager
def criterion(name: str, budget_s: float):
    start = time.perf_counter()
    try:
        yield
    except BaseException:
        print(f"ACCEPTANCE {name}: FAIL")
        raise
    elapsed = time.perf_counter() - start
    ok = elapsed < budget_s
    print(f"ACCEPTANCE {name}: {'PASS' if ok else 'FAIL (over budget)'} "
          f"({elapsed:.2f}s, budget {budget_s}s)")
    assert ok, f"{name} exceeded runtime budget: {elapsed:.2f}s >= {budget_s}s"


def test_criterion_1_parameter_lemma():
    with criterion("1 parameter-lemma", 10):
        cases = all_parameter_cases(max_dim=3, max_exp=4)
        assert len(cases) == 108
        for exps, dim in cases:
            report = check_parameter_lemma(exps, dim, ps=(2, 3, 5), e_max=3)
            assert report["verdict"] == "pass", (exps, dim, report)
            assert report["details"]["threshold"] == len(exps)


def test_criterion_2_theorem_c():
    with criterion("2 theorem-c", 60):
        pairs = theorem_c_pairs(200)
        assert len(pairs) >= 200
        for I, exps, dim in pairs:
            report = check_theorem_c(I, exps)
            assert report["verdict"] == "pass", (I, exps, report)
        # witness pairs from the statement
        equal = check_theorem_c(minimalize([(2, 0), (0, 3), (1, 2)]), (2, 3))
        assert equal["verdict"] == "pass"
        assert equal["details"]["threshold"] == 2 and equal["details"]["closures_equal"]
        unequal = check_theorem_c(minimalize([(1, 0), (0, 3)]), (2, 3))
        assert unequal["verdict"] == "pass"
        assert unequal["details"]["threshold"] != 2
        assert not unequal["details"]["closures_equal"]


def test_criterion_3_five_sixths():
    with criterion("3 threshold-5/6", 5):
        assert monomial_threshold_exact(I23, M) == F(5, 6)
        rows = nu_sequence(I23, M, 7, 3)
        assert [(e, v) for e, v, _ in rows] == [(1, 5), (2, 40), (3, 285)]
        ratios = [r for _, _, r in rows]
        assert ratios == [F(5, 7), F(40, 49), F(285, 343)]
        assert ratios == sorted(ratios)
        for e, value, ratio in rows:
            assert ratio <= F(5, 6)
            assert F(5, 6) - ratio <= Fraction(6, 7 ** e)
            # independent brute force: divisibility over the minimal
            # generators of successive powers
            assert nu_monomial_bruteforce(I23, M, 7 ** e) == value


def _twenty_targets() -> list[MonomialIdeal]:
    targets = [
        minimalize([(i, 0), (0, j)]) for i, j in product(range(1, 5), repeat=2)
    ]
    targets.append(ideal_power(M, 2))
    targets.append(ideal_power(M, 3))
    targets.append(minimalize([(3, 0), (1, 1), (0, 3)]))
    targets.append(minimalize([(4, 0), (2, 1), (0, 2)]))
    return targets


def test_criterion_4_corollary_main():
    with criterion("4 thresholds-equal-jumps", 60):
        ideals = [M, I23, ideal_power(M, 2), minimalize([(2, 0), (1, 1), (0, 2)])]
        for a in ideals:
            spectrum = jumping_numbers(a, F(4))
            assert spectrum.jumps, a
            for alpha in spectrum.jumps:
                back = monomial_threshold_exact(a, tau(a, alpha))
                assert back == alpha, (a, alpha, back)
        targets = _twenty_targets()
        assert len(targets) == 20
        for a in ideals:
            for J in targets:
                c = monomial_threshold_exact(a, J)
                assert J.contains_ideal(tau(a, c)), (a, J, c)


def test_criterion_5_fractional_power_laws():
    with criterion("5 fractional-powers", 120):
        ideals = fractional_law_ideals(300)
        assert len(ideals) >= 300
        t_by_dim = {
            2: [F(1, 2), F(2, 3), F(1), F(5, 6)],
            3: [F(1, 2), F(2, 3), F(1)],
            4: [F(1, 4), F(1, 3), F(1, 2)],
        }
        for idx, ideal in enumerate(ideals):
            choices = t_by_dim[ideal.dim]
            t = choices[idx % len(choices)]
            # power law, both strictness flavors
            for n in (1, 2, 3, 4):
                power = ideal_power(ideal, n)
                assert fractional_power(power, t, False) == fractional_power(ideal, n * t, False)
            for n in (1, 2):
                power = ideal_power(ideal, n)
                assert fractional_power(power, t, True) == fractional_power(ideal, n * t, True)
            # subadditivity of the product
            s = choices[(idx + 1) % len(choices)]
            prod = ideal_product(fractional_power(ideal, s, False), fractional_power(ideal, t, False))
            assert fractional_power(ideal, s + t, False).contains_ideal(prod)
            # strict power equals a certified small-epsilon non-strict power
            strict = fractional_power(ideal, t, True)
            np_ = newton_polyhedron(ideal)
            values = [order_value(np_, g) for g in strict.generators]
            t_next = min(values)
            assert t_next != INFINITY and t_next > t
            eps = (t_next - t) / 2
            assert fractional_power(ideal, t + eps, False) == strict
            # closure idempotence
            closed = integral_closure(ideal)
            assert integral_closure(closed) == closed


def test_criterion_6_briancon_skoda():
    with criterion("6 briancon-skoda", 60):
        ideals = briancon_skoda_ideals(100)
        assert len(ideals) >= 100
        assert all(len(J.generators) <= 4 for J in ideals)
        for J in ideals:
            report = check_briancon_skoda(J, n_max=3)
            assert report["verdict"] == "pass", (J, report)


def test_criterion_7_finiteness_bound():
    with criterion("7 finiteness-bound", 30):
        pairs = list(finiteness_pairs(60))
        pairs += [(I, parameter_ideal(exps, dim)) for I, exps, dim in theorem_c_pairs(200)]
        checked = 0
        for a, J in pairs:
            try:
                report = check_finiteness_bound(a, J)
            except NotInRadical:
                continue  # no l <= 20 exists for this pair
            checked += 1
            assert report["verdict"] == "pass", (a, J, report)
        assert checked >= 200


def test_criterion_8_multiplicity_conjecture():
    with criterion("8 multiplicity-bound", 60):
        pairs = multiplicity_pairs(100)
        assert len(pairs) >= 100
        counterexamples = []
        for a, exps in pairs:
            report = check_multiplicity_bound(a, exps)
            if report["verdict"] != "pass":
                counterexamples.append(report["details"]["counterexample"])
        assert not counterexamples, f"conjecture violated: {counterexamples}"
        equality = check_multiplicity_bound(ideal_power(M, 2), (1, 1))
        assert equality["details"]["e_a"] == equality["details"]["bound"] == 4
        headline = check_multiplicity_bound(I23, (1, 1))
        assert headline["details"]["e_a"] == 6
        assert headline["details"]["bound"] == F(144, 25)


def test_criterion_9_oracle_equivalences():
    with criterion("9 oracle-equivalence", 120):
        instances = membership_instances(1000)
        assert len(instances) >= 1000
        for ideal, u in instances:
            basis = buchberger([PolynomialFp.monomial(5, ideal.dim, g) for g in ideal.generators])
            via_groebner = normal_form(PolynomialFp.monomial(5, ideal.dim, u), basis).is_zero()
            assert via_groebner == ideal.contains(u), (ideal, u)
        sigma_instances = order_value_instances(500)
        assert len(sigma_instances) >= 500
        for ideal, u in sigma_instances:
            facet_value = order_value(newton_polyhedron(ideal), u)
            lp_value = order_value_lp(ideal, u)
            assert facet_value == lp_value, (ideal, u)
            assert facet_value is INFINITY or isinstance(facet_value, Fraction)
        # no floating point in any assertion path: the package never touches floats
        src = Path(__file__).resolve().parent.parent / "src" / "fthresh"
        for module in sorted(src.glob("*.py")):
            text = module.read_text()
            for token in ("float(", "numpy", "math.inf"):
                assert token not in text, f"{module.name} uses {token}"


def _write_ring(tmp, name, generators):
    path = tmp / name
    path.write_text(json.dumps({"p": 7, "vars": ["x", "y"], "generators": generators}))
    return str(path)


def _run_cli(argv):
    proc = subprocess.run(
        [sys.executable, "-m", "fthresh.cli", *argv],
        capture_output=True,
    )
    return proc.returncode, proc.stdout


def test_criterion_10_determinism(tmp_path):
    with criterion("10 determinism", 120):
        a = _write_ring(tmp_path, "a.json", ["x^2", "y^3"])
        j = _write_ring(tmp_path, "j.json", ["x", "y"])
        i = _write_ring(tmp_path, "i.json", ["x^2", "y^3", "x*y^2"])
        commands = [
            ["threshold", "--a", a, "--j", j, "--format", "json"],
            ["threshold", "--a", a, "--j", j, "--format", "csv"],
            ["threshold", "--a", a, "--j", j, "--emit-sequence"],
            ["nu", "--a", a, "--j", j, "--e", "2"],
            ["verify", "theorem-c", "--i", i, "--j", a],
            ["jumping", "--ideal", a, "--bound", "4"],
            ["rees", "--ideal", a],
        ]
        for argv in commands:
            runs = [_run_cli(argv) for _ in range(3)]
            runs.append(_run_cli(argv + ["--jobs", "1"]))
            runs.append(_run_cli(argv + ["--jobs", "4"]))
            codes = {code for code, _ in runs}
            outputs = {out for _, out in runs}
            assert len(codes) == 1 and len(outputs) == 1, argv
            assert codes == {0}, argv
