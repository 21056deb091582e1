import random
from fractions import Fraction

import pytest

from fthresh.corpus import random_monomial_ideal
from fthresh.monomial import ideal_power, ideal_product, minimalize
from fthresh.newton import (
    complement_volume,
    fractional_power,
    integral_closure,
    multiplicity,
    newton_polyhedron,
    order_value,
    order_value_lp,
    rees_valuations,
)
from fthresh.polycore import INFINITY


def F(a, b=1):
    return Fraction(a, b)


def test_facets_examples():
    np_ = newton_polyhedron(minimalize([(2, 0), (0, 3)]))
    assert np_.facets == (((3, 2), F(6)),)
    np_ = newton_polyhedron(minimalize([(1, 0), (0, 1)]))
    assert np_.facets == (((1, 1), F(1)),)
    np_ = newton_polyhedron(minimalize([(1, 0)]))
    assert np_.facets == (((1, 0), F(1)),)


def test_facets_are_tight_and_valid():
    rng = random.Random(5)
    for _ in range(60):
        dim = rng.choice((2, 3))
        ideal = random_monomial_ideal(rng, dim)
        if ideal.is_unit():
            continue
        np_ = newton_polyhedron(ideal)
        for v, c in np_.facets:
            assert all(x >= 0 for x in v) and any(x > 0 for x in v) and c > 0
            values = [sum(a * b for a, b in zip(v, g)) for g in ideal.generators]
            assert all(val >= c for val in values)
            assert any(val == c for val in values)


def test_unit_ideal_has_infinite_order():
    unit = minimalize([(0, 0)])
    np_ = newton_polyhedron(unit)
    assert np_.facets == ()
    assert order_value(np_, (3, 1)) == INFINITY
    assert INFINITY > Fraction(10 ** 9)


def test_order_value_examples():
    np23 = newton_polyhedron(minimalize([(2, 0), (0, 3)]))
    assert order_value(np23, (1, 2)) == F(7, 6)
    assert order_value(np23, (2, 0)) == 1
    npm = newton_polyhedron(minimalize([(1, 0), (0, 1)]))
    assert order_value(npm, (3, 0)) == 3


def test_zero_ideal_rejected():
    with pytest.raises(ValueError):
        minimalize([])


def test_dimension_guard():
    ideal = minimalize([(1,) * 7])
    with pytest.raises(ValueError, match="dimension"):
        newton_polyhedron(ideal)


def test_integral_closure_examples():
    assert integral_closure(minimalize([(2, 0), (0, 2)])).generators == ((0, 2), (1, 1), (2, 0))
    assert integral_closure(minimalize([(2, 0), (0, 3)])).generators == ((2, 0), (0, 3), (1, 2))
    m = minimalize([(1, 0), (0, 1)])
    assert integral_closure(m) == m


def test_fractional_power_examples():
    m = minimalize([(1, 0), (0, 1)])
    m2 = ideal_power(m, 2)
    assert fractional_power(m, F(3, 2), False) == m2
    assert fractional_power(m, F(1), True) == m2
    strict = fractional_power(minimalize([(2, 0), (0, 3)]), F(1), True)
    assert (2, 0) not in strict.generators
    assert (0, 3) not in strict.generators
    assert strict.contains((1, 2))
    assert set(strict.generators) == {(3, 0), (2, 1), (1, 2), (0, 4)}


def test_fractional_power_rejects_negative():
    with pytest.raises(ValueError):
        fractional_power(minimalize([(1, 0)]), F(-1), False)


def test_rees_valuations_examples():
    assert rees_valuations(minimalize([(2, 0), (0, 3)])) == [((3, 2), 6)]
    assert rees_valuations(minimalize([(1, 0), (0, 1)])) == [((1, 1), 1)]
    assert rees_valuations(minimalize([(2, 0), (1, 1), (0, 2)])) == [((1, 1), 2)]


def test_multiplicity_examples():
    assert multiplicity(minimalize([(2, 0), (0, 3)])) == 6
    assert multiplicity(minimalize([(1, 0), (0, 1)])) == 1
    rng = random.Random(2)
    for _ in range(20):
        a, b = rng.randint(1, 5), rng.randint(1, 5)
        assert multiplicity(minimalize([(a, 0), (0, b)])) == a * b


def test_multiplicity_higher_dims():
    m3 = minimalize([(1, 0, 0), (0, 1, 0), (0, 0, 1)])
    assert multiplicity(m3) == 1
    assert multiplicity(ideal_power(m3, 2)) == 8
    assert multiplicity(minimalize([(2, 0, 0), (0, 3, 0), (0, 0, 5)])) == 30
    m4 = minimalize([tuple(1 if j == i else 0 for j in range(4)) for i in range(4)])
    assert multiplicity(m4) == 1
    assert multiplicity(ideal_power(m4, 2)) == 16


def test_multiplicity_drops_after_closure_fill():
    # adding a monomial already inside the closure leaves e unchanged
    I = minimalize([(2, 0), (0, 3)])
    J = minimalize([(2, 0), (1, 2), (0, 3)])
    assert multiplicity(I) == multiplicity(J)


def test_multiplicity_requires_m_primary():
    with pytest.raises(ValueError, match="m-primary"):
        complement_volume(minimalize([(1, 1)]))


def test_closure_idempotent_random():
    rng = random.Random(17)
    for _ in range(40):
        ideal = random_monomial_ideal(rng, rng.choice((2, 3)))
        closed = integral_closure(ideal)
        assert integral_closure(closed) == closed
        assert closed.contains_ideal(ideal)


def test_membership_consistency_with_powers():
    # sigma(u) >= 1 iff k*u lies in I^k for some small k
    rng = random.Random(23)
    for _ in range(40):
        ideal = random_monomial_ideal(rng, 2)
        np_ = newton_polyhedron(ideal)
        closure = integral_closure(ideal)
        u = tuple(rng.randint(0, 5) for _ in range(2))
        in_closure = closure.contains(u)
        assert in_closure == (order_value(np_, u) >= 1)
        witness = any(
            ideal_power(ideal, k).contains(tuple(k * e for e in u)) for k in range(1, 13)
        )
        assert witness == in_closure


def test_order_value_lp_oracle_small():
    rng = random.Random(29)
    for _ in range(60):
        dim = rng.choice((2, 3))
        ideal = random_monomial_ideal(rng, dim)
        u = tuple(rng.randint(0, 5) for _ in range(dim))
        lhs = order_value(newton_polyhedron(ideal), u)
        rhs = order_value_lp(ideal, u)
        assert lhs == rhs


def test_power_scaling_law():
    rng = random.Random(31)
    for _ in range(25):
        ideal = random_monomial_ideal(rng, 2)
        n = rng.randint(1, 4)
        t = Fraction(rng.randint(1, 4), rng.randint(1, 4))
        for strict in (False, True):
            assert fractional_power(ideal_power(ideal, n), t, strict) == \
                fractional_power(ideal, n * t, strict)


def test_product_subadditivity():
    rng = random.Random(37)
    for _ in range(25):
        ideal = random_monomial_ideal(rng, 2)
        s = Fraction(rng.randint(1, 3), rng.randint(1, 3))
        t = Fraction(rng.randint(1, 3), rng.randint(1, 3))
        product = ideal_product(fractional_power(ideal, s, False), fractional_power(ideal, t, False))
        assert fractional_power(ideal, s + t, False).contains_ideal(product)


def test_strict_power_is_small_epsilon_limit():
    rng = random.Random(41)
    for _ in range(25):
        ideal = random_monomial_ideal(rng, rng.choice((2, 3)))
        t = Fraction(rng.randint(0, 3), rng.randint(1, 3))
        strict = fractional_power(ideal, t, True)
        np_ = newton_polyhedron(ideal)
        values = [order_value(np_, g) for g in strict.generators]
        t_next = min(values) if values else None
        if t_next is None or t_next == INFINITY:
            continue
        eps = (t_next - t) / 2
        assert eps > 0
        assert fractional_power(ideal, t + eps, False) == strict
