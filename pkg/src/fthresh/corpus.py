"""Seeded random corpora shared by the verify suites and the test suite.

Everything here is deterministic for a fixed seed, so CLI verify runs and the
acceptance tests are byte-for-byte reproducible.
"""

from __future__ import annotations

import random
from itertools import product

from .monomial import MonomialIdeal, ideal_sum, minimalize
from .thresholds import ideal_in_radical, parameter_ideal


def random_monomial_ideal(rng: random.Random, dim: int, max_exp: int = 3,
                          max_gens: int = 4, m_primary: bool = False) -> MonomialIdeal:
    gens = []
    count = rng.randint(1, max_gens)
    for _ in range(count):
        g = tuple(rng.randint(0, max_exp) for _ in range(dim))
        if any(g):
            gens.append(g)
    if m_primary:
        for i in range(dim):
            gens.append(tuple(rng.randint(1, max_exp) if j == i else 0 for j in range(dim)))
    if not gens:
        gens.append(tuple(rng.randint(1, max_exp) for _ in range(dim)))
    return minimalize(gens)


def all_parameter_cases(max_dim: int = 3, max_exp: int = 4):
    """Every (exponents, dim) with 1 <= n <= dim <= max_dim, entries <= max_exp."""
    cases = []
    for dim in range(1, max_dim + 1):
        for n in range(1, dim + 1):
            for exps in product(range(1, max_exp + 1), repeat=n):
                cases.append((exps, dim))
    return cases


def theorem_c_pairs(count: int = 200, seed: int = 20240601):
    """Pairs (I, parameter exponents, dim) with J inside I; a mix of closure-equal
    and closure-distinct enlargements plus the I = J base cases."""
    rng = random.Random(seed)
    pairs = []
    while len(pairs) < count:
        dim = rng.choice((2, 2, 3))
        n = rng.randint(1, dim)
        exps = tuple(rng.randint(1, 3) for _ in range(n))
        J = parameter_ideal(exps, dim)
        style = rng.random()
        if style < 0.2:
            I = J
        else:
            extra = []
            for _ in range(rng.randint(1, 2)):
                g = tuple(rng.randint(0, 3) for _ in range(dim))
                if any(g):
                    extra.append(g)
            if not extra:
                I = J
            else:
                I = ideal_sum(J, minimalize(extra))
        pairs.append((I, exps, dim))
    return pairs


def briancon_skoda_ideals(count: int = 100, seed: int = 20240602):
    rng = random.Random(seed)
    ideals = []
    while len(ideals) < count:
        dim = rng.choice((1, 2, 2, 3))
        J = random_monomial_ideal(rng, dim, max_exp=3, max_gens=4)
        if len(J.generators) <= 4 and not J.is_unit():
            ideals.append(J)
    return ideals


def finiteness_pairs(count: int = 60, seed: int = 20240603):
    """Monomial pairs (a, J) with a inside rad(J); J is kept m-primary so the
    radical condition holds by construction."""
    rng = random.Random(seed)
    pairs = []
    while len(pairs) < count:
        dim = rng.choice((2, 2, 3))
        a = random_monomial_ideal(rng, dim, max_exp=3, max_gens=3)
        J = random_monomial_ideal(rng, dim, max_exp=3, max_gens=3, m_primary=True)
        if a.is_unit() or J.is_unit():
            continue
        if ideal_in_radical(a, J):
            pairs.append((a, J))
    return pairs


def multiplicity_pairs(count: int = 100, seed: int = 20240604):
    """m-primary a in dimension 2 against parameter ideals (x^i, y^j)."""
    rng = random.Random(seed)
    pairs = []
    while len(pairs) < count:
        a = random_monomial_ideal(rng, 2, max_exp=4, max_gens=4, m_primary=True)
        if a.is_unit():
            continue
        exps = (rng.randint(1, 3), rng.randint(1, 3))
        pairs.append((a, exps))
    return pairs


def fractional_law_ideals(count: int = 300, seed: int = 20240605):
    """Random nonzero monomial ideals, weighted toward low dimension but
    including genuine d = 4 instances."""
    rng = random.Random(seed)
    ideals = []
    while len(ideals) < count:
        dim = rng.choice((2, 2, 2, 3, 3, 4))
        max_exp = 2 if dim == 4 else 3
        max_gens = 3 if dim == 4 else 4
        ideal = random_monomial_ideal(rng, dim, max_exp=max_exp, max_gens=max_gens)
        if not ideal.is_unit():
            ideals.append(ideal)
    return ideals


def membership_instances(count: int = 1000, seed: int = 20240606):
    """(ideal, exponent vector) pairs for the divisibility vs Groebner oracle."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        dim = rng.choice((1, 2, 2, 3))
        ideal = random_monomial_ideal(rng, dim, max_exp=4, max_gens=4)
        u = tuple(rng.randint(0, 8) for _ in range(dim))
        out.append((ideal, u))
    return out


def order_value_instances(count: int = 500, seed: int = 20240607):
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        dim = rng.choice((2, 2, 3, 4))
        ideal = random_monomial_ideal(rng, dim, max_exp=3, max_gens=4)
        u = tuple(rng.randint(0, 6) for _ in range(dim))
        out.append((ideal, u))
    return out
