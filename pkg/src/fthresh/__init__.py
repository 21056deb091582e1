"""Exact F-threshold and integral-closure computations over prime fields."""

from .polycore import (
    INFINITY,
    ParsedIdeal,
    PolynomialFp,
    Rational,
    SpecError,
    format_rational,
    parse_ideal_spec,
    parse_polynomial,
    parse_rational,
    polynomial_to_string,
)
from .monomial import (
    MonomialIdeal,
    contains_monomial,
    frobenius_power,
    ideal_from_polynomials,
    ideal_power,
    ideal_product,
    ideal_sum,
    minimalize,
)
from .groebner import GroebnerBasis, buchberger, ideal_contains, normal_form
from .simplex import LPResult, simplex_solve
from .newton import (
    NewtonPolyhedron,
    complement_volume,
    fractional_power,
    integral_closure,
    multiplicity,
    newton_polyhedron,
    order_value,
    order_value_lp,
    rees_valuations,
)
from .thresholds import (
    INFINITE,
    NotInRadical,
    ThresholdEstimate,
    check_briancon_skoda,
    check_finiteness_bound,
    check_multiplicity_bound,
    check_parameter_lemma,
    check_theorem_c,
    monomial_threshold_exact,
    nu,
    nu_monomial,
    nu_sequence,
    parameter_ideal,
    threshold,
)
from .testideal import (
    JumpingSpectrum,
    crosscheck_thresholds_equal_jumps,
    jump_candidates,
    jumping_numbers,
    test_ideal,
)

__version__ = "0.1.0"
