"""Staircase algebra for monomial ideals.

A monomial ideal is stored as the antichain of its minimal generators (no
generator divides another), kept in a canonical sorted order so that ideal
equality is plain tuple equality.
"""

from __future__ import annotations

from dataclasses import dataclass

from .polycore import ExponentVector, PolynomialFp, grevlex_key


def _dominates(u: ExponentVector, v: ExponentVector) -> bool:
    """True when u >= v componentwise, i.e. x^v divides x^u."""
    return all(a >= b for a, b in zip(u, v))


def _minimal_antichain(exps: list[ExponentVector]) -> tuple[ExponentVector, ...]:
    ordered = sorted(set(exps), key=grevlex_key)
    kept: list[ExponentVector] = []
    for u in ordered:
        if not any(_dominates(u, g) for g in kept):
            kept.append(u)
    return tuple(kept)


@dataclass(frozen=True)
class MonomialIdeal:
    """Antichain of minimal monomial generators in a fixed dimension."""

    dim: int
    generators: tuple[ExponentVector, ...]

    def __post_init__(self):
        for g in self.generators:
            if len(g) != self.dim:
                raise ValueError(f"generator {g} has length {len(g)}, expected {self.dim}")
            if any(e < 0 for e in g):
                raise ValueError(f"negative exponent in generator {g}")

    def _check_dim(self, other: "MonomialIdeal") -> None:
        if self.dim != other.dim:
            raise ValueError(f"dimension mismatch: {self.dim} vs {other.dim}")

    def is_unit(self) -> bool:
        return self.generators == ((0,) * self.dim,)

    def is_m_primary(self) -> bool:
        """True when a pure power of every variable is a generator."""
        axes = set()
        for g in self.generators:
            support = [i for i, e in enumerate(g) if e]
            if len(support) == 1:
                axes.add(support[0])
            elif not support:
                return True  # unit ideal
        return axes == set(range(self.dim))

    def contains(self, u: ExponentVector) -> bool:
        if len(u) != self.dim:
            raise ValueError(f"monomial {u} has length {len(u)}, expected {self.dim}")
        return any(_dominates(u, g) for g in self.generators)

    def contains_ideal(self, other: "MonomialIdeal") -> bool:
        self._check_dim(other)
        return all(self.contains(g) for g in other.generators)

    def max_exponents(self) -> ExponentVector:
        return tuple(max(g[i] for g in self.generators) for i in range(self.dim))

    def __le__(self, other: "MonomialIdeal") -> bool:
        return other.contains_ideal(self)


def minimalize(exps: list[ExponentVector] | tuple[ExponentVector, ...]) -> MonomialIdeal:
    """Build the ideal generated by exps, reduced to its minimal antichain."""
    exps = list(exps)
    if not exps:
        raise ValueError("empty generator list")
    lengths = {len(e) for e in exps}
    if len(lengths) != 1:
        raise ValueError(f"generators of mixed lengths: {sorted(lengths)}")
    dim = lengths.pop()
    return MonomialIdeal(dim, _minimal_antichain([tuple(e) for e in exps]))


def contains_monomial(ideal: MonomialIdeal, u: ExponentVector) -> bool:
    return ideal.contains(tuple(u))


def ideal_sum(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    a._check_dim(b)
    return minimalize(list(a.generators) + list(b.generators))


def ideal_product(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    a._check_dim(b)
    prods = [
        tuple(x + y for x, y in zip(g, h))
        for g in a.generators
        for h in b.generators
    ]
    return minimalize(prods)


def ideal_power(ideal: MonomialIdeal, n: int) -> MonomialIdeal:
    """n-th ordinary power by square-and-multiply, minimalizing between steps."""
    if n < 1:
        raise ValueError("power must be >= 1")
    result = None
    base = ideal
    while n:
        if n & 1:
            result = base if result is None else ideal_product(result, base)
        n >>= 1
        if n:
            base = ideal_product(base, base)
    return result


def frobenius_power(ideal: MonomialIdeal, q: int, p: int | None = None) -> MonomialIdeal:
    """Bracket power: generators scaled by q.  q must be a power of p if p is given."""
    if q < 1:
        raise ValueError("bracket power must be >= 1")
    if p is not None:
        r = q
        while r % p == 0:
            r //= p
        if r != 1:
            raise ValueError(f"{q} is not a power of the characteristic {p}")
    return MonomialIdeal(ideal.dim, tuple(tuple(q * e for e in g) for g in ideal.generators))


def ideal_from_polynomials(polys) -> MonomialIdeal:
    """Monomial ideal from single-term polynomials; rejects anything else."""
    exps = []
    nvars = None
    for f in polys:
        if isinstance(f, PolynomialFp):
            if f.is_zero():
                continue
            if not f.is_monomial():
                raise ValueError("generator is not a monomial")
            nvars = f.nvars
            exps.append(next(iter(f.terms)))
        else:
            exps.append(tuple(f))
    if not exps:
        if nvars is None:
            raise ValueError("no nonzero generators")
        raise ValueError("zero ideal")
    return minimalize(exps)
