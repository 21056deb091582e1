"""Exact two-phase simplex over rationals for small dense programs.

All variables are implicitly nonnegative; constraints are (coeffs, rel, rhs)
with rel one of "<=", ">=", "==".  Bland's rule guarantees termination, and
every answer carries a machine-checked witness: a primal solution, a Farkas
vector for infeasibility, or an improving ray for unboundedness.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

VAR_GUARD = 64
CONSTRAINT_GUARD = 256


class SimplexSizeExceeded(RuntimeError):
    """Program larger than this desk-scale solver is willing to touch."""


@dataclass(frozen=True)
class LPResult:
    status: str  # "optimal" | "infeasible" | "unbounded"
    value: Fraction | None = None
    solution: tuple[Fraction, ...] | None = None
    certificate: tuple[Fraction, ...] | None = None


def _pivot(tableau: list[list[Fraction]], obj: list[Fraction], row: int, col: int,
           basis: list[int]) -> None:
    piv = tableau[row][col]
    tableau[row] = [x / piv for x in tableau[row]]
    for i, r in enumerate(tableau):
        if i != row and r[col]:
            factor = r[col]
            tableau[i] = [a - factor * b for a, b in zip(r, tableau[row])]
    if obj[col]:
        factor = obj[col]
        for j in range(len(obj)):
            obj[j] -= factor * tableau[row][j]
    basis[row] = col


def _run_phase(tableau: list[list[Fraction]], obj: list[Fraction], basis: list[int],
               ncols: int) -> int | None:
    """Minimize until optimal; returns an unbounded entering column or None."""
    while True:
        enter = None
        for j in range(ncols):
            if obj[j] < 0:
                enter = j  # Bland: smallest index
                break
        if enter is None:
            return None
        leave = None
        best = None
        for i, r in enumerate(tableau):
            if r[enter] > 0:
                ratio = r[-1] / r[enter]
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best = ratio
                    leave = i
        if leave is None:
            return enter
        _pivot(tableau, obj, leave, enter, basis)


def simplex_solve(objective: Sequence[Fraction | int],
                  constraints: Sequence[tuple[Sequence[Fraction | int], str, Fraction | int]],
                  maximize: bool = False) -> LPResult:
    """Optimize objective . x over {constraints, x >= 0} exactly."""
    nvars = len(objective)
    if nvars > VAR_GUARD:
        raise SimplexSizeExceeded(f"{nvars} variables exceeds guard {VAR_GUARD}")
    if len(constraints) > CONSTRAINT_GUARD:
        raise SimplexSizeExceeded(f"{len(constraints)} constraints exceeds guard {CONSTRAINT_GUARD}")
    cost = [Fraction(c) for c in objective]
    if maximize:
        cost = [-c for c in cost]

    # standard form: x >= 0, slack columns for inequalities, rhs >= 0
    nslack = sum(1 for _, rel, _ in constraints if rel != "==")
    total = nvars + nslack
    std: list[list[Fraction]] = []
    slack_at = 0
    for coeffs, rel, rhs in constraints:
        if len(coeffs) != nvars:
            raise ValueError("constraint width does not match objective")
        if rel not in ("<=", ">=", "=="):
            raise ValueError(f"unknown relation {rel!r}")
        line = [Fraction(c) for c in coeffs] + [Fraction(0)] * nslack + [Fraction(rhs)]
        if rel != "==":
            line[nvars + slack_at] = Fraction(1) if rel == "<=" else Fraction(-1)
            slack_at += 1
        if line[-1] < 0:
            line = [-x for x in line]
        std.append(line)
    m = len(std)

    # phase 1: artificial basis, minimize artificial mass
    art0 = total
    width = total + m
    tableau = [line[:total] + [Fraction(1) if k == i else Fraction(0) for k in range(m)]
               + [line[-1]] for i, line in enumerate(std)]
    basis = [art0 + i for i in range(m)]
    obj1 = [Fraction(0)] * (width + 1)
    for j in range(art0, width):
        obj1[j] = Fraction(1)
    for row in tableau:
        for j in range(width + 1):
            obj1[j] -= row[j]
    unb = _run_phase(tableau, obj1, basis, width)
    assert unb is None  # phase-1 objective is bounded below by zero
    phase1_value = -obj1[-1]
    if phase1_value > 0:
        # Farkas certificate y: y.A <= 0 on every real column, y.b > 0
        y = tuple(Fraction(1) - obj1[art0 + i] for i in range(m))
        assert sum(yi * line[-1] for yi, line in zip(y, std)) > 0
        for j in range(total):
            assert sum(yi * line[j] for yi, line in zip(y, std)) <= 0
        return LPResult(status="infeasible", certificate=y)

    # drive artificials out of the basis, dropping redundant rows
    for i in range(m - 1, -1, -1):
        if basis[i] >= art0:
            col = next((j for j in range(total) if tableau[i][j] != 0), None)
            if col is None:
                del tableau[i]
                del basis[i]
            else:
                _pivot(tableau, obj1, i, col, basis)

    # phase 2 on real columns only
    tableau = [row[:total] + [row[-1]] for row in tableau]
    ext = cost + [Fraction(0)] * nslack
    obj = list(ext) + [Fraction(0)]
    for i, b in enumerate(basis):
        if ext[b]:
            factor = ext[b]
            for j in range(total + 1):
                obj[j] -= factor * tableau[i][j]
    unb = _run_phase(tableau, obj, basis, total)
    if unb is not None:
        ray = [Fraction(0)] * total
        ray[unb] = Fraction(1)
        for i, b in enumerate(basis):
            ray[b] = -tableau[i][unb]
        assert all(x >= 0 for x in ray)
        assert sum(c * x for c, x in zip(ext, ray)) < 0
        return LPResult(status="unbounded", certificate=tuple(ray[:nvars]))

    x = [Fraction(0)] * total
    for i, b in enumerate(basis):
        x[b] = tableau[i][-1]
    value = sum(c * v for c, v in zip(cost, x[:nvars]))
    if maximize:
        value = -value
    return LPResult(status="optimal", value=value, solution=tuple(x[:nvars]))
