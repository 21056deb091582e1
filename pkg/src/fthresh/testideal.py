"""Monomial test ideals, their jumping numbers, and the threshold crosscheck.

The computational definition is the interior-point formula for monomial
ideals: tau(a^t) is generated by the monomials u with u + (1,..,1) strictly
inside t * NP(a), i.e. <v, u+1> > t*c on every facet.  It is valid in every
characteristic for monomial ideals in a polynomial ring and is validated
independently here by the threshold correspondence, never computed through
Frobenius splittings.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product

from .monomial import MonomialIdeal, minimalize
from .newton import (
    LATTICE_GUARD,
    LatticeScanExceeded,
    _needed,
    minimal_generators_satisfying,
    newton_polyhedron,
)
from .polycore import Rational
from .thresholds import monomial_threshold_exact


@dataclass(frozen=True)
class JumpingSpectrum:
    """Jumping numbers of tau(a^t) up to a bound, with the ideal at each jump."""

    ideal: MonomialIdeal
    bound: Rational
    jumps: tuple[Rational, ...]
    ideals: dict[Rational, MonomialIdeal]

    def __post_init__(self):
        assert list(self.jumps) == sorted(set(self.jumps))


@lru_cache(maxsize=None)
def test_ideal(a: MonomialIdeal, t: Rational) -> MonomialIdeal:
    """tau(a^t): minimal monomials u with u + 1 interior to t*NP(a)."""
    t = Fraction(t)
    if t < 0:
        raise ValueError("test ideal requires t >= 0")
    np_ = newton_polyhedron(a)
    if not np_.facets:
        return minimalize([(0,) * a.dim])
    constraints = [(v, t * c - sum(v), True) for v, c in np_.facets]
    return MonomialIdeal(a.dim, minimal_generators_satisfying(a.dim, constraints))


def jump_candidates(a: MonomialIdeal, bound: Rational) -> tuple[Fraction, ...]:
    """All values <v, u+1>/c <= bound over facets and lattice points u.

    The scan box is certified the same way as the fractional-power scan: a
    coordinate beyond its cap cannot belong to a minimal generator of any
    tau(a^t) with t <= bound, and every jump is witnessed by a minimal
    generator leaving the ideal.
    """
    bound = Fraction(bound)
    np_ = newton_polyhedron(a)
    if not np_.facets:
        return ()
    d = a.dim
    caps = [0] * d
    for i in range(d):
        for v, c in np_.facets:
            if v[i] > 0:
                caps[i] = max(caps[i], _needed(bound * c - sum(v), v[i], True))
    size = 1
    for cap in caps:
        size *= cap + 1
    if size > LATTICE_GUARD:
        raise LatticeScanExceeded(f"candidate scan of {size} points exceeds guard")
    values: set[Fraction] = set()
    for u in product(*(range(cap + 1) for cap in caps)):
        for v, c in np_.facets:
            val = Fraction(sum(x * (e + 1) for x, e in zip(v, u))) / c
            if 0 < val <= bound:
                values.add(val)
    return tuple(sorted(values))


def jumping_numbers(a: MonomialIdeal, bound: Rational) -> JumpingSpectrum:
    """Jumps of t -> tau(a^t) on (0, bound], detected by left-limit comparison
    at half the gap between consecutive candidate values."""
    bound = Fraction(bound)
    if bound <= 0:
        raise ValueError("bound must be positive")
    candidates = jump_candidates(a, bound)
    jumps: list[Fraction] = []
    ideals: dict[Fraction, MonomialIdeal] = {}
    for idx, t in enumerate(candidates):
        prev = candidates[idx - 1] if idx else Fraction(0)
        delta = (t - prev) / 2
        here = test_ideal(a, t)
        if here != test_ideal(a, t - delta):
            jumps.append(t)
            ideals[t] = here
    return JumpingSpectrum(ideal=a, bound=bound, jumps=tuple(jumps), ideals=ideals)


def crosscheck_thresholds_equal_jumps(a: MonomialIdeal, bound: Rational,
                                      j_sample: list[MonomialIdeal] | None = None) -> dict:
    """Both directions of the thresholds = jumping-numbers correspondence.

    Every jump alpha must satisfy threshold(a, tau(a^alpha)) = alpha, and for
    each sampled J above some power of a, tau(a^threshold) must land in J.
    """
    if not a.is_m_primary():
        raise ValueError("a must be m-primary")
    spectrum = jumping_numbers(a, bound)
    jump_rows = []
    ok = True
    for alpha in spectrum.jumps:
        tau = spectrum.ideals[alpha]
        back = monomial_threshold_exact(a, tau)
        good = back == alpha
        ok = ok and good
        jump_rows.append({"jump": alpha, "threshold": back, "matches": good})
    sample_rows = []
    if j_sample is None:
        j_sample = default_threshold_targets(a.dim)
    for J in j_sample:
        c = monomial_threshold_exact(a, J)
        contained = J.contains_ideal(test_ideal(a, c))
        ok = ok and contained
        sample_rows.append({
            "J": [list(g) for g in J.generators],
            "threshold": c,
            "tau_inside_J": contained,
        })
    return {
        "check": "thresholds-equal-jumps",
        "verdict": "pass" if ok else "fail",
        "details": {"jumps": jump_rows, "samples": sample_rows},
    }


def default_threshold_targets(dim: int) -> list[MonomialIdeal]:
    """Deterministic m-primary J sample: variable-power ideals and powers of
    the maximal ideal."""
    targets = []
    for exps in product(range(1, 4), repeat=dim):
        targets.append(minimalize(
            [tuple(e if j == i else 0 for j in range(dim)) for i, e in enumerate(exps)]
        ))
    m = minimalize([tuple(1 if j == i else 0 for j in range(dim)) for i in range(dim)])
    from .monomial import ideal_power
    targets.extend(ideal_power(m, k) for k in (2, 3))
    return targets
