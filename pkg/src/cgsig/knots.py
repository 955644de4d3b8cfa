"""Knot expressions: unknot, torus knots, cables and connected sums.

This is the whole class of knots the signature evaluators need.  Expressions
are immutable trees with structural equality; connected sums are flattened and
sorted into a canonical order on construction.  The text grammar is

    expr := term ("#" term)*
    term := "U" | "T(" int "," int ")" | "C(" int "," int ";" expr ")"

with insignificant whitespace.  ``parse(render(K)) == K``.

Alexander-polynomial roots are known exactly for this class: the roots of
Delta_{T(p,q)} are the pq-th roots of unity that are neither p-th nor q-th
roots, Delta of a cable is Delta_pattern(t) * Delta_companion(t^m), and Delta
is multiplicative under connected sum.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from ._intutil import divides, floordiv, gcd, mod, mul
from .angles import RationalAngle


class ParseError(ValueError):
    """Syntax or invariant error in a knot expression, with input position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class KnotExpr:
    """Base class for knot expressions."""

    __slots__ = ()


@dataclass(frozen=True)
class Unknot(KnotExpr):
    __slots__ = ()

    def __str__(self) -> str:
        return "U"


@dataclass(frozen=True)
class Torus(KnotExpr):
    """Positive torus knot T(p,q), p, q >= 2 coprime.

    T(1,q) is the unknot and must be written as U; mirrors (negative
    parameters) are not representable.
    """

    p: int
    q: int

    def __post_init__(self):
        if self.p < 2 or self.q < 2:
            raise ValueError(
                f"torus parameters must be >= 2 (use U for T(1,n)); got T({self.p},{self.q})"
            )
        if gcd(self.p, self.q) != 1:
            raise ValueError(f"torus parameters must be coprime; got T({self.p},{self.q})")

    def __str__(self) -> str:
        return f"T({self.p},{self.q})"


@dataclass(frozen=True)
class Cable(KnotExpr):
    """The (m,n)-cable of a companion knot, m >= 2, n >= 1, gcd(m,n) = 1.

    The cable pattern is the torus knot T(m,n) (the unknot when n = 1).
    """

    m: int
    n: int
    companion: KnotExpr

    def __post_init__(self):
        if self.m < 2:
            raise ValueError(f"cable winding must be >= 2; got C({self.m},{self.n};...)")
        if self.n < 1:
            raise ValueError("negative or zero cable twisting is not supported")
        if gcd(self.m, self.n) != 1:
            raise ValueError(f"cable parameters must be coprime; got C({self.m},{self.n};...)")
        if not isinstance(self.companion, KnotExpr):
            raise ValueError("cable companion must be a knot expression")

    def pattern(self) -> KnotExpr:
        return Unknot() if self.n == 1 else Torus(self.m, self.n)

    def __str__(self) -> str:
        return f"C({self.m},{self.n};{self.companion})"


@dataclass(frozen=True)
class Sum(KnotExpr):
    """Connected sum; parts are flattened and canonically sorted."""

    parts: tuple = field()

    def __post_init__(self):
        flat = []
        for part in self.parts:
            if isinstance(part, Sum):
                flat.extend(part.parts)
            elif isinstance(part, Unknot):
                continue  # U is the identity for #
            elif isinstance(part, KnotExpr):
                flat.append(part)
            else:
                raise ValueError("connected-sum parts must be knot expressions")
        if len(flat) < 2:
            raise ValueError("a connected sum needs at least two nontrivial parts")
        flat.sort(key=str)
        object.__setattr__(self, "parts", tuple(flat))

    def __str__(self) -> str:
        return "#".join(str(p) for p in self.parts)


def connected_sum(parts) -> KnotExpr:
    """Connected sum of a list of expressions, collapsing trivial cases."""
    flat = [p for p in parts if not isinstance(p, Unknot)]
    if not flat:
        return Unknot()
    if len(flat) == 1:
        return flat[0]
    return Sum(tuple(flat))


def render(knot: KnotExpr) -> str:
    """Canonical text form, re-parsable by :func:`parse`."""
    return str(knot)


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, message: str) -> ParseError:
        return ParseError(message, self.pos)

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str):
        if self.peek() != ch:
            raise self.error(f"expected {ch!r}")
        self.pos += 1

    def integer(self) -> int:
        self.skip_ws()
        start = self.pos
        if self.pos < len(self.text) and self.text[self.pos] == "-":
            self.pos += 1
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start or self.text[start:self.pos] == "-":
            raise self.error("expected an integer")
        return int(self.text[start:self.pos])

    def term(self) -> KnotExpr:
        c = self.peek()
        start = self.pos
        if c == "U":
            self.pos += 1
            return Unknot()
        if c == "T":
            self.pos += 1
            self.expect("(")
            p = self.integer()
            self.expect(",")
            q = self.integer()
            self.expect(")")
            try:
                return Torus(p, q)
            except ValueError as e:
                raise ParseError(str(e), start) from None
        if c == "C":
            self.pos += 1
            self.expect("(")
            m = self.integer()
            self.expect(",")
            n = self.integer()
            self.expect(";")
            companion = self.expr()
            self.expect(")")
            try:
                return Cable(m, n, companion)
            except ValueError as e:
                raise ParseError(str(e), start) from None
        raise self.error("expected 'U', 'T(p,q)' or 'C(m,n;K)'")

    def expr(self) -> KnotExpr:
        parts = [self.term()]
        while self.peek() == "#":
            self.pos += 1
            parts.append(self.term())
        return connected_sum(parts)


def parse(text: str) -> KnotExpr:
    """Parse the knot grammar; raises :class:`ParseError` with a position."""
    parser = _Parser(text)
    knot = parser.expr()
    parser.skip_ws()
    if parser.pos != len(text):
        raise parser.error("trailing input after knot expression")
    return knot


def is_alexander_root(knot: KnotExpr, theta: RationalAngle) -> bool:
    """Whether exp(2*pi*i*theta) is a root of the Alexander polynomial."""
    if theta.is_trivial:
        raise ValueError("the trivial angle is never an Alexander root (Delta(1) = ±1)")
    if isinstance(knot, Unknot):
        return False
    if isinstance(knot, Torus):
        pq = mul(knot.p, knot.q)
        if not divides(theta.den, pq):
            return False
        k = floordiv(pq, theta.den) * theta.num  # = pq * num/den, exact
        return mod(k, knot.p) != 0 and mod(k, knot.q) != 0
    if isinstance(knot, Cable):
        pattern = knot.pattern()
        if not isinstance(pattern, Unknot) and is_alexander_root(pattern, theta):
            return True
        inner = theta.power(knot.m)
        if inner.is_trivial:
            return False
        return is_alexander_root(knot.companion, inner)
    if isinstance(knot, Sum):
        return any(is_alexander_root(part, theta) for part in knot.parts)
    raise TypeError(f"unknown knot expression {knot!r}")


def _integers_in_open(a: Fraction, b: Fraction) -> int:
    """#{k in Z : a < k < b}."""
    if b <= a:
        return 0
    import math

    hi = math.ceil(b) - 1  # largest integer < b
    lo = math.floor(a) + 1  # smallest integer > a
    return max(0, hi - lo + 1)


def count_alexander_roots_in_arc(knot: Torus, t0, t1) -> int:
    """Number of Alexander roots exp(2*pi*i*t) of a torus knot with t0 < t < t1.

    Roots of Delta_{T(p,q)} in (0,1) are the t = k/pq with p and q both not
    dividing k; they are simple, so this is also the number of signature jumps
    on the open arc.
    """
    if not isinstance(knot, Torus):
        raise ValueError("arc root counting is only defined for torus knots")
    t0, t1 = Fraction(t0), Fraction(t1)
    if not (0 <= t0 < t1 <= 1):
        raise ValueError("need 0 <= t0 < t1 <= 1")
    p, q = knot.p, knot.q
    pq = p * q
    # k ranges over (pq*t0, pq*t1); drop multiples of p and of q, add back pq's.
    a, b = pq * t0, pq * t1
    total = _integers_in_open(a, b)
    mult_p = _integers_in_open(a / p, b / p)
    mult_q = _integers_in_open(a / q, b / q)
    mult_pq = _integers_in_open(a / pq, b / pq)
    return total - mult_p - mult_q + mult_pq
