import random
from fractions import Fraction

import pytest

from fthresh.corpus import random_monomial_ideal
from fthresh.monomial import MonomialIdeal, ideal_power, minimalize
from fthresh.testideal import (
    crosscheck_thresholds_equal_jumps,
    jump_candidates,
    jumping_numbers,
)
from fthresh.testideal import test_ideal as tau
from fthresh.thresholds import monomial_threshold_exact

M = minimalize([(1, 0), (0, 1)])
I23 = minimalize([(2, 0), (0, 3)])


def F(a, b=1):
    return Fraction(a, b)


def test_test_ideal_examples():
    assert tau(M, F(2)) == M
    assert tau(M, F(3, 2)).is_unit()
    boundary = tau(I23, F(5, 6))
    assert not boundary.is_unit()  # (0,0) sits on the boundary, excluded by strictness
    assert boundary == M


def test_test_ideal_zero_exponent_is_unit():
    assert tau(I23, F(0)).is_unit()
    with pytest.raises(ValueError):
        tau(I23, F(-1))


def test_jumping_examples():
    assert jumping_numbers(M, F(4)).jumps == (F(2), F(3), F(4))
    one_var = minimalize([(1,)])
    assert jumping_numbers(one_var, F(3)).jumps == (F(1), F(2), F(3))
    assert jumping_numbers(I23, F(1)).jumps == (F(5, 6),)


def test_jumping_spectrum_monotone_ideals():
    spectrum = jumping_numbers(I23, F(3))
    jumps = spectrum.jumps
    assert list(jumps) == sorted(jumps)
    for earlier, later in zip(jumps, jumps[1:]):
        assert spectrum.ideals[earlier].contains_ideal(spectrum.ideals[later])


def test_smallest_jump_is_maximal_ideal_threshold():
    for a in (M, I23, ideal_power(M, 2), minimalize([(2, 0), (1, 1), (0, 2)])):
        spectrum = jumping_numbers(a, F(4))
        assert spectrum.jumps[0] == monomial_threshold_exact(a, M)


def test_right_continuity():
    rng = random.Random(61)
    for _ in range(20):
        a = random_monomial_ideal(rng, 2, max_exp=3, max_gens=3)
        if a.is_unit():
            continue
        bound = F(4)
        candidates = jump_candidates(a, bound + 2)
        for idx, t in enumerate(candidates):
            if t > bound or idx + 1 >= len(candidates):
                break
            eps = (candidates[idx + 1] - t) / 2
            assert tau(a, t) == tau(a, t + eps)


def test_anti_monotonicity():
    rng = random.Random(67)
    for _ in range(20):
        a = random_monomial_ideal(rng, rng.choice((2, 3)), max_exp=3, max_gens=3)
        s = F(rng.randint(0, 4), rng.randint(1, 3))
        t = s + F(rng.randint(0, 3), rng.randint(1, 3))
        assert tau(a, s).contains_ideal(tau(a, t))


def test_crosscheck_examples():
    report = crosscheck_thresholds_equal_jumps(M, F(3))
    assert report["verdict"] == "pass"
    by_jump = {row["jump"]: row["threshold"] for row in report["details"]["jumps"]}
    assert by_jump[F(2)] == 2 and by_jump[F(3)] == 3

    report = crosscheck_thresholds_equal_jumps(I23, F(1))
    assert report["verdict"] == "pass"
    assert report["details"]["jumps"][0]["jump"] == F(5, 6)


def test_crosscheck_requires_m_primary():
    with pytest.raises(ValueError, match="m-primary"):
        crosscheck_thresholds_equal_jumps(minimalize([(1, 1)]), F(2))


def test_skoda_shift_observation():
    # recorded observation only, never asserted: how often tau(a^(t+1))
    # lands inside a on an m-primary corpus with t >= d-1
    rng = random.Random(71)
    holds = tried = 0
    for _ in range(25):
        a = random_monomial_ideal(rng, 2, max_exp=3, max_gens=3, m_primary=True)
        if a.is_unit():
            continue
        t = F(rng.randint(1, 3))
        tried += 1
        if a.contains_ideal(tau(a, t + 1)):
            holds += 1
    print(f"skoda-type containment held on {holds}/{tried} corpus cases")
    assert tried > 0


def test_every_corpus_threshold_appears_among_jumps():
    # thresholds of m-primary J against a fall inside the jump set (both ways
    # of the correspondence on a small corpus)
    targets = [M, ideal_power(M, 2), minimalize([(2, 0), (0, 2)]), minimalize([(3, 0), (1, 1), (0, 3)])]
    for a in (M, I23):
        spectrum = jumping_numbers(a, F(6))
        jumps = set(spectrum.jumps)
        for J in targets:
            c = monomial_threshold_exact(a, J)
            if c <= F(6):
                assert c in jumps
