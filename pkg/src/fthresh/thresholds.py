"""F-threshold machinery and the ring-level identity checkers built on it.

nu(a, J, p^e) is the largest n with a^n not inside the bracket power J^[p^e];
the threshold is the limit of nu/p^e.  For monomial pairs the limit is exact:
a max-min linear program over choice functions picking, for each generator of
J, the coordinate it is allowed to violate.  The same choice-function view
turns each nu into a small bounded integer maximization, which keeps the
nu sequences cheap even at q = 5^3; the naive route (enumerate the minimal
generators of a^n and test divisibility) stays available for cross-checks.

Non-monomial inputs fall back to binary search with Groebner normal forms and
report a one-sided bracket; no convergence rate is guessed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement

from .groebner import GroebnerBasis, buchberger, normal_form
from .monomial import MonomialIdeal, ideal_power, frobenius_power, ideal_from_polynomials, minimalize
from .newton import integral_closure, multiplicity, newton_polyhedron
from .polycore import PolynomialFp, Rational
from .simplex import simplex_solve

INFINITE = "infinite"

PHI_GUARD = 10 ** 6
CAP_STATES_GUARD = 200_000
IP_NODE_GUARD = 5_000_000
PRODUCT_CAP = 20_000
RADICAL_POWER_BOUND = 20


class GuardExceeded(RuntimeError):
    """Desk-scale computation guard tripped; the input is too large."""


class NotInRadical(ValueError):
    """a is not inside the radical of J, so the threshold is infinite."""


class ThresholdConsistencyError(AssertionError):
    """The exact LP value and the nu sequence disagree; surface, never absorb."""


@dataclass(frozen=True)
class ThresholdEstimate:
    """Exact value or one-sided bracket, with the witnessing nu sequence."""

    exact: Rational | None
    lower: Rational
    upper: Rational | None
    sequence: tuple[tuple[int, int, Rational], ...]  # (e, nu_e, nu_e/p^e)
    method: str  # "lp-exact" | "bracket"


# ---------------------------------------------------------------------------
# radical membership (monomial)
# ---------------------------------------------------------------------------


def monomial_in_radical(u: tuple[int, ...], J: MonomialIdeal) -> bool:
    """x^u lies in rad(J) iff the support of some generator of J is inside supp(u)."""
    supp = {i for i, e in enumerate(u) if e}
    return any(all(i in supp for i, e in enumerate(b) if e) for b in J.generators)


def ideal_in_radical(a: MonomialIdeal, J: MonomialIdeal) -> bool:
    a._check_dim(J)
    return all(monomial_in_radical(g, J) for g in a.generators)


# ---------------------------------------------------------------------------
# choice functions: coordinate cap vectors
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def _cap_vectors(J: MonomialIdeal) -> tuple[tuple[int | None, ...], ...]:
    """Maximal coordinate-cap vectors over all choice functions on gens(J).

    A choice function assigns to each generator b of J a coordinate where
    b is nonzero; the induced cap on coordinate i is the least b_i among
    generators assigned to i (None where no generator points at i).  Only
    componentwise-maximal vectors matter for the max-min problems here.
    """
    gens = J.generators
    raw = 1
    for b in gens:
        nz = sum(1 for e in b if e)
        if nz == 0:
            raise ValueError("J must be a proper ideal")
        raw *= nz
        if raw > PHI_GUARD:
            raise GuardExceeded(
                f"choice-function enumeration above {PHI_GUARD}; too many generators of J"
            )
    states: set[tuple[int | None, ...]] = {(None,) * J.dim}
    for b in gens:
        nxt: set[tuple[int | None, ...]] = set()
        for state in states:
            for i, e in enumerate(b):
                if e:
                    s = list(state)
                    s[i] = e if s[i] is None else min(s[i], e)
                    nxt.add(tuple(s))
        states = nxt
        if len(states) > CAP_STATES_GUARD:
            raise GuardExceeded("distinct cap-vector count above guard")

    def _le(m, m2):  # m <= m2 with None = +infinity
        return all(y is None or (x is not None and x <= y) for x, y in zip(m, m2))

    ordered = sorted(states, key=lambda s: tuple(-1 if x is None else x for x in s))
    maximal = [m for m in ordered if not any(m2 != m and _le(m, m2) for m2 in ordered)]
    return tuple(maximal)


# ---------------------------------------------------------------------------
# exact nu for monomial pairs
# ---------------------------------------------------------------------------


def _ip_max(gens: tuple[tuple[int, ...], ...], bounds: dict[int, int]) -> int:
    """max of n_1+..+n_k over nonnegative integers with sum n_j g_j <= bounds.

    Depth-first with an optimistic residual-cap bound; separable instances
    (parameter ideals) finish after one greedy descent.
    """
    relevant = []
    for g in gens:
        rel = [(i, g[i]) for i in bounds if g[i] > 0]
        if not rel:
            raise ValueError("unbounded integer program (radical precondition violated)")
        relevant.append(rel)
    k = len(gens)
    best = 0
    nodes = 0

    def cap(j: int, res: dict[int, int]) -> int:
        return min(res[i] // w for i, w in relevant[j])

    def dfs(j: int, res: dict[int, int], cur: int) -> None:
        nonlocal best, nodes
        nodes += 1
        if nodes > IP_NODE_GUARD:
            raise GuardExceeded("integer-program search above node guard")
        if j == k:
            if cur > best:
                best = cur
            return
        optimistic = cur + sum(cap(jj, res) for jj in range(j, k))
        if optimistic <= best:
            return
        top = cap(j, res)
        for n in range(top, -1, -1):
            child = dict(res)
            if n:
                for i, w in relevant[j]:
                    child[i] -= n * w
            dfs(j + 1, child, cur + n)

    dfs(0, dict(bounds), 0)
    return best


def nu_monomial(a: MonomialIdeal, J: MonomialIdeal, q: int):
    """Exact nu for a monomial pair at bracket power q; INFINITE off the radical."""
    a._check_dim(J)
    if J.is_unit():
        raise ValueError("J must be a proper ideal")
    if not ideal_in_radical(a, J):
        return INFINITE
    best = 0
    for caps in _cap_vectors(J):
        bounds = {i: q * m - 1 for i, m in enumerate(caps) if m is not None}
        best = max(best, _ip_max(a.generators, bounds))
    return best


def nu_monomial_bruteforce(a: MonomialIdeal, J: MonomialIdeal, q: int):
    """Reference nu: walk n upward, testing every minimal generator of a^n
    for divisibility by the bracket power.  Only sane for small inputs."""
    a._check_dim(J)
    if not ideal_in_radical(a, J):
        return INFINITE
    target = frobenius_power(J, q)
    n = 0
    power = None
    while True:
        power = a if power is None else minimalize(
            [tuple(x + y for x, y in zip(g, h)) for g in power.generators for h in a.generators]
        )
        if target.contains_ideal(power):
            return n
        n += 1
        if n > 10 ** 6:
            raise GuardExceeded("runaway nu search")


# ---------------------------------------------------------------------------
# exact monomial threshold via max-min LP
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def monomial_threshold_exact(a: MonomialIdeal, J: MonomialIdeal) -> Fraction:
    """Exact threshold of a with respect to J for monomial ideals.

    For each maximal cap vector, minimize s subject to u in conv(gens(a)) and
    u_i <= s * cap_i; the threshold is the largest 1/s over cap vectors.  The
    feasible region uses conv(gens(a)), not the Newton polyhedron: monomials
    of a^n are n-fold sums of generators, and orthant slack only shrinks the
    objective.  Validated against the nu sequences wherever both run.
    """
    a._check_dim(J)
    if J.is_unit():
        raise ValueError("J must be a proper ideal")
    if not a.generators:
        raise ValueError("a must be nonzero")
    if not ideal_in_radical(a, J):
        raise NotInRadical("a is not contained in the radical of J")
    gens = a.generators
    k = len(gens)
    best: Fraction | None = None
    for caps in _cap_vectors(J):
        # variables: lambda_1..lambda_k, s
        objective = [Fraction(0)] * k + [Fraction(1)]
        constraints = [([Fraction(1)] * k + [Fraction(0)], "==", Fraction(1))]
        for i, m in enumerate(caps):
            if m is None:
                continue
            row = [Fraction(g[i]) for g in gens] + [Fraction(-m)]
            constraints.append((row, "<=", Fraction(0)))
        res = simplex_solve(objective, constraints, maximize=False)
        assert res.status == "optimal"
        s_star = res.value
        assert s_star > 0  # guaranteed by the radical precondition
        value = 1 / s_star
        if best is None or value > best:
            best = value
    assert best is not None
    return best


# ---------------------------------------------------------------------------
# general (Groebner) path
# ---------------------------------------------------------------------------


def _nonzero(polys) -> list[PolynomialFp]:
    return [f for f in polys if not f.is_zero()]


def _generator_products(gens: list[PolynomialFp], n: int,
                        power_cache: dict) -> list[PolynomialFp]:
    if n == 0:
        return [PolynomialFp.constant(gens[0].p, gens[0].nvars, 1)]
    k = len(gens)
    count = 1
    for idx in range(1, k):
        count = count * (n + idx) // idx
        if count > PRODUCT_CAP:
            raise GuardExceeded(
                f"degree-{n} products of {k} generators exceed cap {PRODUCT_CAP}"
            )
    out = []
    for combo in combinations_with_replacement(range(k), n):
        prod = None
        for j in set(combo):
            mult = combo.count(j)
            key = (j, mult)
            if key not in power_cache:
                power_cache[key] = gens[j].power(mult)
            piece = power_cache[key]
            prod = piece if prod is None else prod * piece
        out.append(prod)
    return out


def nu_general(a_polys, J_polys, p: int, e: int, lower_seed: int = 0):
    """nu via Groebner membership for arbitrary generators; INFINITE when the
    desk-scale radical search fails."""
    a_gens = _nonzero(a_polys)
    J_gens = _nonzero(J_polys)
    if not a_gens:
        raise ValueError("a must be nonzero")
    if not J_gens:
        raise ValueError("J must be nonzero")
    q = p ** e
    basis_J = buchberger(J_gens)
    if basis_J.is_unit():
        raise ValueError("J must be a proper ideal")
    # radical certificate: some power of each generator of a lies in J
    l_total = 1
    for f in a_gens:
        k_f = None
        power = f
        for k in range(1, RADICAL_POWER_BOUND + 1):
            if normal_form(power, basis_J).is_zero():
                k_f = k
                break
            power = power * f
        if k_f is None:
            return INFINITE
        l_total += k_f - 1
    basis_q = buchberger([g.power(q) for g in J_gens])
    power_cache: dict = {}

    def contained(n: int) -> bool:
        return all(
            normal_form(prod, basis_q).is_zero()
            for prod in _generator_products(a_gens, n, power_cache)
        )

    hi = len(J_gens) * l_total * q + 1
    for _ in range(4):
        if contained(hi):
            break
        hi *= 2
    else:
        raise GuardExceeded("upper seed for nu search failed to certify")
    lo = max(0, lower_seed)
    if lo > 0 and contained(lo):
        lo = 0  # seed was not a certified lower bound; restart from scratch
    while lo + 1 < hi:
        mid = (lo + hi) // 2
        if contained(mid):
            hi = mid
        else:
            lo = mid
    return lo


def _as_monomial(polys) -> MonomialIdeal | None:
    try:
        return ideal_from_polynomials(polys)
    except ValueError:
        return None


def nu(a_polys, J_polys, p: int, e: int):
    """nu_a^J(p^e): monomial fast path when both ideals are monomial."""
    if isinstance(a_polys, MonomialIdeal) and isinstance(J_polys, MonomialIdeal):
        return nu_monomial(a_polys, J_polys, p ** e)
    am = _as_monomial(a_polys) if not isinstance(a_polys, MonomialIdeal) else a_polys
    jm = _as_monomial(J_polys) if not isinstance(J_polys, MonomialIdeal) else J_polys
    if am is not None and jm is not None:
        return nu_monomial(am, jm, p ** e)
    return nu_general(a_polys, J_polys, p, e)


def nu_sequence(a, J, p: int, e_max: int):
    """[(e, nu_e, nu_e/p^e)] for e = 1..e_max, or INFINITE."""
    rows = []
    prev = 0
    for e in range(1, e_max + 1):
        if isinstance(a, MonomialIdeal):
            value = nu_monomial(a, J, p ** e)
        else:
            value = nu_general(a, J, p, e, lower_seed=p * prev)
        if value == INFINITE:
            return INFINITE
        rows.append((e, value, Fraction(value, p ** e)))
        prev = value
    return rows


def threshold(a, J, p: int, e_max: int = 3) -> ThresholdEstimate:
    """Threshold estimate: exact LP value for monomial pairs (with the nu
    sequence as corroboration), otherwise a lower bracket from nu at e_max."""
    if e_max < 1:
        raise ValueError("e_max must be >= 1")
    am = a if isinstance(a, MonomialIdeal) else _as_monomial(a)
    jm = J if isinstance(J, MonomialIdeal) else _as_monomial(J)
    if am is not None and jm is not None:
        exact = monomial_threshold_exact(am, jm)  # raises NotInRadical when infinite
        rows = nu_sequence(am, jm, p, e_max)
        assert rows != INFINITE
        for idx, (e, value, ratio) in enumerate(rows):
            if ratio > exact:
                raise ThresholdConsistencyError(
                    f"nu_{e}/p^{e} = {ratio} exceeds the LP value {exact}"
                )
            if idx and ratio < rows[idx - 1][2]:
                raise ThresholdConsistencyError("nu sequence is not ascending")
        lower = rows[-1][2] if rows else Fraction(0)
        return ThresholdEstimate(exact=exact, lower=lower, upper=exact,
                                 sequence=tuple(rows), method="lp-exact")
    rows = nu_sequence(a, J, p, e_max)
    if rows == INFINITE:
        raise NotInRadical("a is not contained in the radical of J")
    for idx in range(1, len(rows)):
        if rows[idx][2] < rows[idx - 1][2]:
            raise ThresholdConsistencyError("nu sequence is not ascending")
    lower = rows[-1][2]
    return ThresholdEstimate(exact=None, lower=lower, upper=None,
                             sequence=tuple(rows), method="bracket")


# ---------------------------------------------------------------------------
# identity checkers
# ---------------------------------------------------------------------------


def parameter_ideal(exponents, dim: int) -> MonomialIdeal:
    exponents = tuple(exponents)
    if not 1 <= len(exponents) <= dim:
        raise ValueError("need 1 <= n <= d exponents")
    if any(e < 1 for e in exponents):
        raise ValueError("parameter exponents must be positive")
    gens = [tuple(e if j == i else 0 for j in range(dim)) for i, e in enumerate(exponents)]
    return minimalize(gens)


def check_parameter_lemma(exponents, dim: int, ps=(2, 3, 5), e_max: int = 3) -> dict:
    """Threshold of a partial-parameter ideal with respect to itself equals
    the number of parameters; nu sequences stay ascending and below it."""
    J = parameter_ideal(exponents, dim)
    n = len(tuple(exponents))
    c = monomial_threshold_exact(J, J)
    sequences = []
    ok = c == n
    for p in ps:
        rows = nu_sequence(J, J, p, e_max)
        assert rows != INFINITE
        for idx, (e, value, ratio) in enumerate(rows):
            if ratio > n or (idx and ratio < rows[idx - 1][2]):
                ok = False
        sequences.append({"p": p, "rows": rows})
    return {
        "check": "parameter-lemma",
        "verdict": "pass" if ok else "fail",
        "details": {"exponents": list(exponents), "dim": dim,
                    "threshold": c, "expected": n, "sequences": sequences},
    }


def check_theorem_c(I: MonomialIdeal, exponents) -> dict:
    """threshold(I, J) = n iff the integral closures of I and J agree,
    for J a parameter ideal inside I.

    When I escapes the radical of J the threshold is infinite; the closures
    must then differ (the closure of J stays inside the radical), so the
    biconditional is still meaningful and checked.
    """
    J = parameter_ideal(exponents, I.dim)
    if not I.contains_ideal(J):
        raise ValueError("J is not contained in I")
    n = len(tuple(exponents))
    try:
        c = monomial_threshold_exact(I, J)
    except NotInRadical:
        c = INFINITE
    closures_equal = integral_closure(I) == integral_closure(J)
    ok = (c == n) == closures_equal
    return {
        "check": "theorem-c",
        "verdict": "pass" if ok else "fail",
        "details": {"threshold": c, "expected": n, "closures_equal": closures_equal},
    }


def check_briancon_skoda(J: MonomialIdeal, n_max: int = 3) -> dict:
    """closure(J^(n+l-1)) inside J^n for n = 1..n_max, l = number of generators."""
    l = len(J.generators)
    rows = []
    ok = True
    for n in range(1, n_max + 1):
        holds = ideal_power(J, n).contains_ideal(integral_closure(ideal_power(J, n + l - 1)))
        rows.append({"n": n, "holds": holds})
        ok = ok and holds
    return {
        "check": "briancon-skoda",
        "verdict": "pass" if ok else "fail",
        "details": {"l": l, "rows": rows},
    }


def smallest_power_inside(a: MonomialIdeal, J: MonomialIdeal, l_max: int = RADICAL_POWER_BOUND) -> int:
    for l in range(1, l_max + 1):
        if J.contains_ideal(ideal_power(a, l)):
            return l
    raise NotInRadical(f"no power of a up to {l_max} lies inside J")


def check_finiteness_bound(a: MonomialIdeal, J: MonomialIdeal) -> dict:
    """threshold(a, J) <= n*l with n = #gens(J) and a^l inside J."""
    l = smallest_power_inside(a, J)
    n = len(J.generators)
    c = monomial_threshold_exact(a, J)
    ok = c <= n * l
    return {
        "check": "finiteness-bound",
        "verdict": "pass" if ok else "fail",
        "details": {"l": l, "n": n, "threshold": c, "bound": n * l},
    }


def check_multiplicity_bound(a: MonomialIdeal, exponents) -> dict:
    """e(a) >= (d / threshold)^d * e(J) for parameter J; a violation is
    reported as a counterexample, never asserted away."""
    d = a.dim
    exponents = tuple(exponents)
    if len(exponents) != d:
        raise ValueError("need one exponent per variable")
    if not a.is_m_primary():
        raise ValueError("a must be m-primary")
    J = parameter_ideal(exponents, d)
    e_a = multiplicity(a)
    e_J = multiplicity(J)
    c = monomial_threshold_exact(a, J)
    bound = Fraction(d, 1) ** d / c ** d * e_J
    holds = e_a >= bound
    report = {
        "check": "multiplicity-bound",
        "verdict": "pass" if holds else "fail",
        "details": {"e_a": e_a, "e_J": e_J, "threshold": c, "bound": bound},
    }
    if not holds:
        report["details"]["counterexample"] = {
            "a": [list(g) for g in a.generators],
            "J_exponents": list(exponents),
        }
    return report
