"""Exact arithmetic, polynomials over prime fields, and ideal-spec parsing.

Everything downstream works with three small value types:

* ``Rational`` -- an alias for :class:`fractions.Fraction`; every threshold,
  order value, and volume in this package is one of these, never a float.
* exponent vectors -- plain tuples of nonnegative ints, one entry per ring
  variable.
* :class:`PolynomialFp` -- a finite term map over F_p in canonical
  (grevlex-sorted) form.

All values are immutable after construction and safe to share across workers.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction

Rational = Fraction
ExponentVector = tuple[int, ...]


class SpecError(ValueError):
    """Malformed ideal specification (bad JSON, bad p, unknown variable...)."""


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def format_rational(x: Fraction | int) -> str:
    """Serialize a rational as "num/den"; integers come out as plain "n"."""
    fr = Fraction(x)
    if fr.denominator == 1:
        return str(fr.numerator)
    return f"{fr.numerator}/{fr.denominator}"


_RATIONAL_RE = re.compile(r"^(-?\d+)(?:/(\d+))?$")


def parse_rational(text: str) -> Fraction:
    m = _RATIONAL_RE.match(text.strip())
    if m is None:
        raise SpecError(f"not a rational: {text!r} (expected 'a' or 'a/b')")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) else 1
    if den == 0:
        raise SpecError(f"zero denominator in rational {text!r}")
    return Fraction(num, den)


class _PlusInfinity:
    """Sentinel ordered above every Rational; the order value of the unit ideal."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INFINITY"

    def __eq__(self, other):
        return other is self

    def __hash__(self):
        return hash("fthresh-plus-infinity")

    def __gt__(self, other):
        return other is not self

    def __ge__(self, other):
        return True

    def __lt__(self, other):
        return False

    def __le__(self, other):
        return other is self


INFINITY = _PlusInfinity()


def grevlex_key(u: ExponentVector):
    """Sort key: ascending key order is ascending graded-reverse-lex order."""
    return (sum(u), tuple(-e for e in reversed(u)))


class PolynomialFp:
    """A polynomial in F_p[x_1..x_d], stored as exponent-vector -> residue.

    Zero coefficients are never stored; two polynomials are equal iff their
    characteristic, variable count, and term maps agree.
    """

    __slots__ = ("p", "nvars", "terms", "_hash")

    def __init__(self, p: int, nvars: int, terms: dict[ExponentVector, int]):
        self.p = p
        self.nvars = nvars
        clean: dict[ExponentVector, int] = {}
        for exp, coeff in terms.items():
            c = coeff % p
            if c:
                clean[tuple(exp)] = c
        self.terms = clean
        self._hash = None

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, p: int, nvars: int) -> "PolynomialFp":
        return cls(p, nvars, {})

    @classmethod
    def constant(cls, p: int, nvars: int, value: int) -> "PolynomialFp":
        return cls(p, nvars, {(0,) * nvars: value})

    @classmethod
    def monomial(cls, p: int, nvars: int, exp: ExponentVector, coeff: int = 1) -> "PolynomialFp":
        return cls(p, nvars, {tuple(exp): coeff})

    # -- structure ----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def sorted_terms(self) -> list[tuple[ExponentVector, int]]:
        """Terms in descending grevlex order (leading term first)."""
        return sorted(self.terms.items(), key=lambda kv: grevlex_key(kv[0]), reverse=True)

    def leading_term(self) -> tuple[ExponentVector, int]:
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        exp = max(self.terms, key=grevlex_key)
        return exp, self.terms[exp]

    def support(self) -> set[ExponentVector]:
        return set(self.terms)

    def total_degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    # -- arithmetic ---------------------------------------------------

    def _check_compatible(self, other: "PolynomialFp") -> None:
        if self.p != other.p:
            raise ValueError(f"characteristic mismatch: {self.p} vs {other.p}")
        if self.nvars != other.nvars:
            raise ValueError(f"variable count mismatch: {self.nvars} vs {other.nvars}")

    def __add__(self, other: "PolynomialFp") -> "PolynomialFp":
        self._check_compatible(other)
        terms = dict(self.terms)
        for exp, c in other.terms.items():
            terms[exp] = terms.get(exp, 0) + c
        return PolynomialFp(self.p, self.nvars, terms)

    def __neg__(self) -> "PolynomialFp":
        return PolynomialFp(self.p, self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "PolynomialFp") -> "PolynomialFp":
        return self + (-other)

    def __mul__(self, other: "PolynomialFp") -> "PolynomialFp":
        self._check_compatible(other)
        terms: dict[ExponentVector, int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                exp = tuple(a + b for a, b in zip(e1, e2))
                terms[exp] = terms.get(exp, 0) + c1 * c2
        return PolynomialFp(self.p, self.nvars, terms)

    def scale(self, coeff: int) -> "PolynomialFp":
        return PolynomialFp(self.p, self.nvars, {e: c * coeff for e, c in self.terms.items()})

    def shift(self, exp: ExponentVector) -> "PolynomialFp":
        """Multiply by the monomial x^exp."""
        return PolynomialFp(
            self.p, self.nvars,
            {tuple(a + b for a, b in zip(e, exp)): c for e, c in self.terms.items()},
        )

    def power(self, n: int) -> "PolynomialFp":
        """f**n by square-and-multiply; f**0 is 1."""
        if n < 0:
            raise ValueError("negative exponent")
        result = PolynomialFp.constant(self.p, self.nvars, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    # -- identity -----------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, PolynomialFp):
            return NotImplemented
        return self.p == other.p and self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.p, self.nvars, frozenset(self.terms.items())))
        return self._hash

    def __repr__(self) -> str:
        names = tuple(f"x{i+1}" for i in range(self.nvars))
        return f"PolynomialFp(p={self.p}, {polynomial_to_string(self, names)!r})"


# ---------------------------------------------------------------------------
# Expression parsing
#
# Grammar: +, -, * and ^ with positive integer exponents, parenthesised
# subexpressions, implicit coefficient 1, integer literals reduced mod p.
# No division, no implicit multiplication.
# ---------------------------------------------------------------------------

_TOKEN_RE = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|([-+*^()]))")


def _tokenize(text: str) -> list[tuple[str, str]]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None or m.end() == pos:
            raise SpecError(f"unexpected character {text[pos:].lstrip()[:1]!r} in {text!r}")
        if m.group(1):
            tokens.append(("int", m.group(1)))
        elif m.group(2):
            tokens.append(("name", m.group(2)))
        else:
            tokens.append(("op", m.group(3)))
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, tokens: list[tuple[str, str]], variables: tuple[str, ...], p: int):
        self.tokens = tokens
        self.pos = 0
        self.variables = variables
        self.p = p
        self.nvars = len(variables)

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else (None, None)

    def take(self):
        tok = self.peek()
        self.pos += 1
        return tok

    def expect_op(self, op: str):
        kind, val = self.take()
        if kind != "op" or val != op:
            raise SpecError(f"expected {op!r}, found {val!r}")

    def parse(self) -> PolynomialFp:
        poly = self.expr()
        if self.pos != len(self.tokens):
            raise SpecError(f"trailing input near {self.peek()[1]!r}")
        return poly

    def expr(self) -> PolynomialFp:
        kind, val = self.peek()
        negate = False
        if kind == "op" and val in "+-":
            self.take()
            negate = val == "-"
        poly = self.term()
        if negate:
            poly = -poly
        while True:
            kind, val = self.peek()
            if kind == "op" and val in "+-":
                self.take()
                rhs = self.term()
                poly = poly - rhs if val == "-" else poly + rhs
            else:
                return poly

    def term(self) -> PolynomialFp:
        poly = self.factor()
        while True:
            kind, val = self.peek()
            if kind == "op" and val == "*":
                self.take()
                poly = poly * self.factor()
            else:
                return poly

    def factor(self) -> PolynomialFp:
        base = self.atom()
        kind, val = self.peek()
        if kind == "op" and val == "^":
            self.take()
            kind, val = self.take()
            if kind != "int":
                raise SpecError(f"exponent must be a positive integer, found {val!r}")
            n = int(val)
            if n < 1:
                raise SpecError(f"exponent must be a positive integer, found {n}")
            return base.power(n)
        return base

    def atom(self) -> PolynomialFp:
        kind, val = self.take()
        if kind == "int":
            return PolynomialFp.constant(self.p, self.nvars, int(val))
        if kind == "name":
            if val not in self.variables:
                raise SpecError(f"unknown variable {val!r}")
            exp = tuple(1 if name == val else 0 for name in self.variables)
            return PolynomialFp.monomial(self.p, self.nvars, exp)
        if kind == "op" and val == "(":
            poly = self.expr()
            self.expect_op(")")
            return poly
        raise SpecError(f"expected a variable, integer, or '(', found {val!r}")


def parse_polynomial(text: str, variables: tuple[str, ...], p: int) -> PolynomialFp:
    """Parse one generator expression into canonical form over F_p."""
    tokens = _tokenize(text)
    if not tokens:
        raise SpecError("empty generator expression")
    return _Parser(tokens, tuple(variables), p).parse()


def polynomial_to_string(f: PolynomialFp, variables: tuple[str, ...]) -> str:
    """Render in descending grevlex order; parses back to an equal polynomial."""
    if f.is_zero():
        return "0"
    pieces = []
    for exp, coeff in f.sorted_terms():
        factors = []
        if coeff != 1 or not any(exp):
            factors.append(str(coeff))
        for name, e in zip(variables, exp):
            if e == 1:
                factors.append(name)
            elif e > 1:
                factors.append(f"{name}^{e}")
        pieces.append("*".join(factors))
    return " + ".join(pieces)


# ---------------------------------------------------------------------------
# Ideal specifications
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ParsedIdeal:
    """A parsed ideal spec: characteristic, variable names, and generators."""

    p: int
    variables: tuple[str, ...]
    polynomials: tuple[PolynomialFp, ...]

    @property
    def dim(self) -> int:
        return len(self.variables)

    def is_monomial(self) -> bool:
        return all(f.is_monomial() for f in self.polynomials if not f.is_zero())


def parse_ideal_spec(text: str) -> ParsedIdeal:
    """Parse an IdealSpec JSON document: {"p": .., "vars": [..], "generators": [..]}."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SpecError(f"malformed JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise SpecError("ideal spec must be a JSON object")
    for key in ("p", "vars", "generators"):
        if key not in doc:
            raise SpecError(f"ideal spec missing key {key!r}")
    p = doc["p"]
    if not isinstance(p, int) or isinstance(p, bool) or not is_prime(p):
        raise SpecError("p must be prime")
    variables = doc["vars"]
    if (
        not isinstance(variables, list)
        or not variables
        or not all(isinstance(v, str) and re.fullmatch(r"[A-Za-z_][A-Za-z_0-9]*", v) for v in variables)
    ):
        raise SpecError("vars must be a nonempty list of identifiers")
    if len(set(variables)) != len(variables):
        raise SpecError("vars must be distinct")
    gens = doc["generators"]
    if not isinstance(gens, list) or not gens:
        raise SpecError("generator list must be nonempty")
    polys = tuple(parse_polynomial(g, tuple(variables), p) for g in gens)
    return ParsedIdeal(p=p, variables=tuple(variables), polynomials=polys)
