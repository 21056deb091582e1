"""Ideal membership for general ideals in F_p[x_1..x_d] via Buchberger.

The term order is fixed to graded reverse lexicographic; membership tests are
order-independent, so nothing is gained by making it configurable.  S-pairs
are processed smallest lcm-degree first with the coprime-lcm and chain
criteria; a configurable cap on the working basis size makes runaway inputs
fail loudly instead of hanging.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .polycore import ExponentVector, PolynomialFp, grevlex_key


class BasisSizeExceeded(RuntimeError):
    """Working basis grew past the configured cap."""


DEFAULT_BASIS_CAP = 5000


def _mod_inverse(a: int, p: int) -> int:
    return pow(a, p - 2, p)


def _exp_lcm(a: ExponentVector, b: ExponentVector) -> ExponentVector:
    return tuple(max(x, y) for x, y in zip(a, b))


def _exp_divides(a: ExponentVector, b: ExponentVector) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _exp_sub(a: ExponentVector, b: ExponentVector) -> ExponentVector:
    return tuple(x - y for x, y in zip(a, b))


def _make_monic(f: PolynomialFp) -> PolynomialFp:
    _, lc = f.leading_term()
    if lc == 1:
        return f
    return f.scale(_mod_inverse(lc, f.p))


@dataclass(frozen=True)
class GroebnerBasis:
    """Reduced Groebner basis (grevlex, monic, autoreduced)."""

    p: int
    nvars: int
    polynomials: tuple[PolynomialFp, ...]
    order: str = "grevlex"
    is_zero: bool = field(default=False)

    def leading_exponents(self) -> list[ExponentVector]:
        return [f.leading_term()[0] for f in self.polynomials]

    def is_unit(self) -> bool:
        return any(not any(f.leading_term()[0]) for f in self.polynomials)


def normal_form(f: PolynomialFp, basis: GroebnerBasis) -> PolynomialFp:
    """Remainder of f under full multivariate division by the basis.

    Zero iff f lies in the ideal the basis generates.
    """
    if basis.p != f.p or basis.nvars != f.nvars:
        raise ValueError("polynomial incompatible with basis ring")
    divisors = [(g.leading_term()[0], g) for g in basis.polynomials]
    remainder: dict[ExponentVector, int] = {}
    work = f
    while not work.is_zero():
        lexp, lc = work.leading_term()
        reduced = False
        for dexp, g in divisors:
            if _exp_divides(dexp, lexp):
                shift = _exp_sub(lexp, dexp)
                work = work - g.shift(shift).scale(lc)
                reduced = True
                break
        if not reduced:
            remainder[lexp] = lc
            work = work - PolynomialFp.monomial(f.p, f.nvars, lexp, lc)
    return PolynomialFp(f.p, f.nvars, remainder)


def _s_polynomial(f: PolynomialFp, g: PolynomialFp) -> PolynomialFp:
    fexp, _ = f.leading_term()
    gexp, _ = g.leading_term()
    lcm = _exp_lcm(fexp, gexp)
    return f.shift(_exp_sub(lcm, fexp)) - g.shift(_exp_sub(lcm, gexp))


def _reduce_once(f: PolynomialFp, basis: list[PolynomialFp]) -> PolynomialFp:
    """Full reduction of f against a list of monic polynomials."""
    divisors = [(g.leading_term()[0], g) for g in basis]
    remainder: dict[ExponentVector, int] = {}
    work = f
    while not work.is_zero():
        lexp, lc = work.leading_term()
        hit = None
        for dexp, g in divisors:
            if _exp_divides(dexp, lexp):
                hit = (dexp, g)
                break
        if hit is None:
            remainder[lexp] = lc
            work = work - PolynomialFp.monomial(f.p, f.nvars, lexp, lc)
        else:
            dexp, g = hit
            work = work - g.shift(_exp_sub(lexp, dexp)).scale(lc)
    return PolynomialFp(f.p, f.nvars, remainder)


def buchberger(gens: list[PolynomialFp], basis_cap: int = DEFAULT_BASIS_CAP) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal generated by gens.

    Zero generators are filtered; an all-zero input yields the zero ideal,
    flagged via ``is_zero``.
    """
    gens = list(gens)
    if not gens:
        raise ValueError("empty generator list")
    p = gens[0].p
    nvars = gens[0].nvars
    for g in gens:
        if g.p != p or g.nvars != nvars:
            raise ValueError("generators live in different rings")
    work = [_make_monic(g) for g in gens if not g.is_zero()]
    if not work:
        return GroebnerBasis(p, nvars, (), is_zero=True)

    basis: list[PolynomialFp] = []
    for g in work:
        r = _reduce_once(g, basis)
        if not r.is_zero():
            basis.append(_make_monic(r))

    def pair_key(i, j):
        lcm = _exp_lcm(basis[i].leading_term()[0], basis[j].leading_term()[0])
        return (sum(lcm), grevlex_key(lcm), i, j)

    pairs = {(i, j) for i in range(len(basis)) for j in range(i + 1, len(basis))}
    processed: set[tuple[int, int]] = set()
    while pairs:
        i, j = min(pairs, key=lambda ij: pair_key(*ij))
        pairs.discard((i, j))
        processed.add((i, j))
        lt_i = basis[i].leading_term()[0]
        lt_j = basis[j].leading_term()[0]
        lcm = _exp_lcm(lt_i, lt_j)
        # coprime leading monomials: S-polynomial reduces to zero
        if lcm == tuple(a + b for a, b in zip(lt_i, lt_j)):
            continue
        # chain criterion
        skip = False
        for k in range(len(basis)):
            if k in (i, j):
                continue
            if _exp_divides(basis[k].leading_term()[0], lcm):
                a = (min(i, k), max(i, k))
                b = (min(j, k), max(j, k))
                if a in processed and b in processed:
                    skip = True
                    break
        if skip:
            continue
        r = _reduce_once(_s_polynomial(basis[i], basis[j]), basis)
        if r.is_zero():
            continue
        r = _make_monic(r)
        basis.append(r)
        if len(basis) > basis_cap:
            raise BasisSizeExceeded(
                f"working basis exceeded {basis_cap} polynomials; "
                "raise basis_cap if the input is genuinely this large"
            )
        new = len(basis) - 1
        for k in range(new):
            pairs.add((k, new))

    # minimalize: drop elements whose leading term another leading term divides
    basis.sort(key=lambda f: grevlex_key(f.leading_term()[0]))
    minimal: list[PolynomialFp] = []
    for f in basis:
        lt = f.leading_term()[0]
        if not any(_exp_divides(g.leading_term()[0], lt) for g in minimal):
            minimal.append(f)
    # autoreduce tails
    reduced: list[PolynomialFp] = []
    for idx, f in enumerate(minimal):
        others = minimal[:idx] + minimal[idx + 1:]
        r = _reduce_once(f, others) if others else f
        reduced.append(_make_monic(r))
    reduced.sort(key=lambda f: grevlex_key(f.leading_term()[0]), reverse=True)
    return GroebnerBasis(p, nvars, tuple(reduced))


def ideal_contains(a: list[PolynomialFp], b: list[PolynomialFp],
                   basis_cap: int = DEFAULT_BASIS_CAP) -> bool:
    """True iff ideal(b) is contained in ideal(a)."""
    basis = buchberger(a, basis_cap=basis_cap)
    if basis.is_zero:
        return all(g.is_zero() for g in b)
    return all(normal_form(g, basis).is_zero() for g in b)
