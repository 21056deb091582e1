"""Newton-polyhedron geometry of monomial ideals.

The Newton polyhedron NP(I) is conv(generator exponents) + the nonnegative
orthant.  Its facets with positive threshold carry the whole theory computed
here: the order function sigma(u) = min over facets of <v,u>/c, integral
closures and fractional powers as sigma sublevel ideals, Rees valuations as
facet normals, and Hilbert-Samuel multiplicity as a normalized complement
volume.  Every comparison is an exact rational comparison; there is no
epsilon arithmetic anywhere.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, product

from .monomial import MonomialIdeal, minimalize
from .polycore import INFINITY, ExponentVector, Rational
from .simplex import simplex_solve

NP_DIM_MAX = 6
VOLUME_DIM_MAX = 4
LATTICE_GUARD = 2_000_000


class LatticeScanExceeded(RuntimeError):
    """A lattice enumeration grew past the desk-scale guard."""


# ---------------------------------------------------------------------------
# exact linear algebra helpers
# ---------------------------------------------------------------------------


def _kernel_vector(rows: list[tuple[int, ...]], dim: int) -> tuple[Fraction, ...] | None:
    """One kernel vector of a rank-(dim-1) system, else None."""
    mat = [[Fraction(x) for x in row] for row in rows]
    pivots: list[int] = []
    r = 0
    for col in range(dim):
        sel = next((i for i in range(r, len(mat)) if mat[i][col] != 0), None)
        if sel is None:
            continue
        mat[r], mat[sel] = mat[sel], mat[r]
        piv = mat[r][col]
        mat[r] = [x / piv for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][col] != 0:
                f = mat[i][col]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[r])]
        pivots.append(col)
        r += 1
        if r == len(mat):
            break
    if r != dim - 1:
        return None
    free = next(c for c in range(dim) if c not in pivots)
    vec = [Fraction(0)] * dim
    vec[free] = Fraction(1)
    for row_idx, col in enumerate(pivots):
        vec[col] = -mat[row_idx][free]
    return tuple(vec)


def _primitive(vec: tuple[Fraction, ...]) -> tuple[int, ...]:
    scale = math.lcm(*(f.denominator for f in vec))
    ints = [int(f * scale) for f in vec]
    g = math.gcd(*ints)
    if g:
        ints = [x // g for x in ints]
    return tuple(ints)


def _solve_square(rows: list[list[Fraction]], rhs: list[Fraction]) -> tuple[Fraction, ...] | None:
    n = len(rows)
    mat = [list(row) + [b] for row, b in zip(rows, rhs)]
    for col in range(n):
        sel = next((i for i in range(col, n) if mat[i][col] != 0), None)
        if sel is None:
            return None
        mat[col], mat[sel] = mat[sel], mat[col]
        piv = mat[col][col]
        mat[col] = [x / piv for x in mat[col]]
        for i in range(n):
            if i != col and mat[i][col] != 0:
                f = mat[i][col]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[col])]
    return tuple(mat[i][n] for i in range(n))


# ---------------------------------------------------------------------------
# facet enumeration
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class NewtonPolyhedron:
    """Facets <v,w> >= c with primitive v >= 0 and c > 0.

    The coordinate halfspaces w_i >= 0 are implicit; the unit ideal has no
    facets at all and its order function is the +infinity sentinel.
    """

    dim: int
    facets: tuple[tuple[ExponentVector, Rational], ...]


@lru_cache(maxsize=None)
def newton_polyhedron(ideal: MonomialIdeal) -> NewtonPolyhedron:
    """Irredundant facet list of NP(ideal).

    Candidate hyperplanes run through every choice of k generator points and
    d-k coordinate rays; a candidate tight on d affinely independent points
    of the polyhedron and valid on all of it is a facet, so each survivor is
    irredundant by construction.
    """
    d = ideal.dim
    if d > NP_DIM_MAX:
        raise ValueError(f"dimension {d} above supported bound {NP_DIM_MAX}")
    gens = ideal.generators
    if not gens:
        raise ValueError("zero ideal has no Newton polyhedron")
    if ideal.is_unit():
        return NewtonPolyhedron(d, ())
    found: set[tuple[ExponentVector, Fraction]] = set()
    axes = list(range(d))
    for k in range(1, min(d, len(gens)) + 1):
        m = d - k
        if m > d:
            continue
        for pts in combinations(gens, k):
            base = pts[0]
            point_rows = [tuple(a - b for a, b in zip(q, base)) for q in pts[1:]]
            for rays in combinations(axes, m):
                rows = point_rows + [tuple(1 if i == j else 0 for i in range(d)) for j in rays]
                vec = _kernel_vector(rows, d)
                if vec is None:
                    continue
                v = _primitive(vec)
                for cand in (v, tuple(-x for x in v)):
                    if any(x < 0 for x in cand):
                        continue
                    c = sum(a * b for a, b in zip(cand, base))
                    if c <= 0:
                        continue
                    if all(sum(a * b for a, b in zip(cand, g)) >= c for g in gens):
                        found.add((cand, Fraction(c)))
                    break
    facets = tuple(sorted(found))
    return NewtonPolyhedron(d, facets)


def order_value(np_: NewtonPolyhedron, u: ExponentVector):
    """sigma(u): min over facets of <v,u>/c; +infinity for the unit ideal."""
    if len(u) != np_.dim:
        raise ValueError(f"point {u} has length {len(u)}, expected {np_.dim}")
    if not np_.facets:
        return INFINITY
    return min(Fraction(sum(a * b for a, b in zip(v, u))) / c for v, c in np_.facets)


def order_value_lp(ideal: MonomialIdeal, u: ExponentVector):
    """sigma(u) via the direct LP: max total mass of a generator combination under u."""
    if len(u) != ideal.dim:
        raise ValueError("dimension mismatch")
    gens = ideal.generators
    objective = [Fraction(1)] * len(gens)
    constraints = [
        ([Fraction(g[i]) for g in gens], "<=", Fraction(u[i]))
        for i in range(ideal.dim)
    ]
    res = simplex_solve(objective, constraints, maximize=True)
    if res.status == "unbounded":
        return INFINITY
    assert res.status == "optimal"
    return res.value


# ---------------------------------------------------------------------------
# minimal generators of facet-inequality sublevel sets
# ---------------------------------------------------------------------------


def _needed(value: Fraction, weight: int, strict: bool) -> int:
    """Least k >= 0 with weight*k >= value (or > value when strict)."""
    if weight == 0:
        raise ZeroDivisionError
    q = Fraction(value, weight)
    k = math.floor(q) + 1 if strict else math.ceil(q)
    return max(0, k)


def minimal_generators_satisfying(dim: int,
                                  constraints: list[tuple[ExponentVector, Fraction, bool]]
                                  ) -> tuple[ExponentVector, ...]:
    """Minimal lattice points u >= 0 with <v,u> >= rhs (or > rhs) for every constraint.

    Coordinate caps are certified: if u_i exceeds cap_i then u - e_i still
    satisfies every constraint, so all minimal points live inside the box.
    Only the cheapest coordinate is scanned implicitly (its least feasible
    value is solved for), which keeps the enumeration to the product of the
    remaining caps.
    """
    caps = [0] * dim
    for i in range(dim):
        for v, rhs, strict in constraints:
            if v[i] > 0:
                caps[i] = max(caps[i], _needed(rhs, v[i], strict))
    if dim == 1:
        k = 0
        for v, rhs, strict in constraints:
            k = max(k, _needed(rhs, v[0], strict))
        return ((k,),)
    heavy = max(range(dim), key=lambda i: caps[i])
    rest = [i for i in range(dim) if i != heavy]
    size = 1
    for i in rest:
        size *= caps[i] + 1
    if size > LATTICE_GUARD:
        raise LatticeScanExceeded(f"lattice scan of {size} points exceeds guard {LATTICE_GUARD}")
    candidates: list[ExponentVector] = []
    for assignment in product(*(range(caps[i] + 1) for i in rest)):
        point = [0] * dim
        for i, val in zip(rest, assignment):
            point[i] = val
        k_min = 0
        feasible = True
        for v, rhs, strict in constraints:
            partial = sum(v[i] * point[i] for i in rest)
            deficit = rhs - partial
            if v[heavy] == 0:
                if (deficit > 0) or (strict and deficit == 0):
                    feasible = False
                    break
            else:
                k_min = max(k_min, _needed(deficit, v[heavy], strict))
        if feasible:
            point[heavy] = k_min
            candidates.append(tuple(point))
    return minimalize(candidates).generators


@lru_cache(maxsize=None)
def fractional_power(ideal: MonomialIdeal, t: Rational, strict: bool = False) -> MonomialIdeal:
    """The ideal {u : sigma(u) >= t}, or {sigma(u) > t} when strict."""
    t = Fraction(t)
    if t < 0:
        raise ValueError("fractional power requires t >= 0")
    np_ = newton_polyhedron(ideal)
    if not np_.facets:  # unit ideal: sigma is +infinity everywhere
        return minimalize([(0,) * ideal.dim])
    constraints = [(v, t * c, strict) for v, c in np_.facets]
    return MonomialIdeal(ideal.dim, minimal_generators_satisfying(ideal.dim, constraints))


def integral_closure(ideal: MonomialIdeal) -> MonomialIdeal:
    """Monomial integral closure: lattice points of the Newton polyhedron."""
    return fractional_power(ideal, Fraction(1), False)


def rees_valuations(ideal: MonomialIdeal) -> list[tuple[ExponentVector, int]]:
    """Facet normals of NP(ideal) with their value on the ideal."""
    np_ = newton_polyhedron(ideal)
    out = []
    for v, c in np_.facets:
        assert c.denominator == 1
        out.append((v, c.numerator))
    return out


# ---------------------------------------------------------------------------
# exact volumes and multiplicity
# ---------------------------------------------------------------------------


def _hull_facets(points: list[tuple[Fraction, ...]], k: int):
    """Supporting hyperplanes (n, c) of conv(points), all points <n,p> >= c."""
    facets: dict[tuple[tuple[int, ...], Fraction], list[tuple[Fraction, ...]]] = {}
    for subset in combinations(points, k):
        base = subset[0]
        rows = [tuple(a - b for a, b in zip(q, base)) for q in subset[1:]]
        vec = _kernel_vector(rows, k)
        if vec is None:
            continue
        n = _primitive(vec)
        c = sum(a * b for a, b in zip(n, base))
        values = [sum(a * b for a, b in zip(n, p)) for p in points]
        if all(val >= c for val in values):
            pass
        elif all(val <= c for val in values):
            n = tuple(-x for x in n)
            c = -c
        else:
            continue
        key = (n, Fraction(c))
        if key not in facets:
            facets[key] = [p for p, val in zip(points, [sum(a * b for a, b in zip(n, p)) for p in points]) if val == c]
    return facets


def _hull_volume(points: list[tuple[Fraction, ...]], k: int) -> Fraction:
    """Exact k-volume of conv(points) for points in Q^k (0 when degenerate)."""
    pts = sorted(set(points))
    if len(pts) <= k:
        return Fraction(0)
    if k == 1:
        return pts[-1][0] - pts[0][0]
    pivot = pts[0]
    total = Fraction(0)
    for (n, c), tight in _hull_facets(pts, k).items():
        height = sum(a * b for a, b in zip(n, pivot)) - c
        if height == 0:
            continue
        j = max(range(k), key=lambda i: abs(n[i]))
        proj = [tuple(p[i] for i in range(k) if i != j) for p in tight]
        total += height * _hull_volume(proj, k - 1) / (k * abs(n[j]))
    return total


def _np_vertices(np_: NewtonPolyhedron) -> list[tuple[Fraction, ...]]:
    d = np_.dim
    planes = [(tuple(Fraction(x) for x in v), c) for v, c in np_.facets]
    planes += [(tuple(Fraction(1 if i == j else 0) for i in range(d)), Fraction(0)) for j in range(d)]
    vertices: set[tuple[Fraction, ...]] = set()
    for subset in combinations(planes, d):
        sol = _solve_square([list(v) for v, _ in subset], [c for _, c in subset])
        if sol is None:
            continue
        if any(x < 0 for x in sol):
            continue
        if all(sum(a * b for a, b in zip(v, sol)) >= c for v, c in planes):
            vertices.add(sol)
    return sorted(vertices)


def complement_volume(ideal: MonomialIdeal) -> Fraction:
    """Exact volume of orthant minus NP(ideal) for an m-primary ideal.

    The complement is star-shaped from the origin (sigma is homogeneous), so
    it decomposes into pyramids over the facets of NP, each a convex polytope
    whose volume the recursive hull routine computes exactly.
    """
    if ideal.dim > VOLUME_DIM_MAX:
        raise ValueError(f"volume supported up to dimension {VOLUME_DIM_MAX}")
    if not ideal.is_m_primary():
        raise ValueError("ideal is not m-primary")
    if ideal.is_unit():
        return Fraction(0)
    np_ = newton_polyhedron(ideal)
    vertices = _np_vertices(np_)
    origin = tuple(Fraction(0) for _ in range(ideal.dim))
    total = Fraction(0)
    for v, c in np_.facets:
        tight = [w for w in vertices if sum(a * b for a, b in zip(v, w)) == c]
        total += _hull_volume([origin] + tight, ideal.dim)
    return total


def multiplicity(ideal: MonomialIdeal) -> Fraction:
    """Hilbert-Samuel multiplicity: d! times the staircase complement volume."""
    return math.factorial(ideal.dim) * complement_volume(ideal)
