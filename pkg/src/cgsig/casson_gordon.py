"""Casson-Gordon signature invariants via the surgery-presentation formula.

For a 3-manifold given by surgery on a framed link with linking matrix L and a
character sending the i-th meridian to the n_i-th power of a primitive t-th
root of unity (every n_i coprime to t), the invariant is

    sigma(Y, chi) = sigma_link(alpha) - sum_{i<j} L_ij - sign(L)
                    + (2/t^2) * sum_{i,j} (t - n_i) * n_j * L_ij,

with the double sum over all ordered pairs including the diagonal.  Two
degenerate cases cover everything implemented here: a single knot with integer
framing (the link signature term is the Levine-Tristram signature of the
knot), and a chain of unknots presenting a lens space (the link signature term
vanishes).  The result is always an integer; this is asserted on every call.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ._intutil import gcd
from .angles import RationalAngle
from .intlinalg import chain_linking_matrix, neg_continued_fraction, symmetric_signature
from .knots import KnotExpr
from .signatures import lt_signature


class UnsupportedCharacter(ValueError):
    """A chain colour is 0 or shares a factor with the character order, which
    the surgery formula's hypotheses exclude."""


class InvalidCharacter(ValueError):
    """The requested meridian image does not define a character (the closing
    surgery relation fails mod t)."""


class IntegralityError(ArithmeticError):
    """An evaluator produced a non-integer, which should be impossible."""


@dataclass(frozen=True)
class CgValue:
    """An integer Casson-Gordon signature value."""

    value: int

    def __int__(self) -> int:
        return self.value

    def __abs__(self) -> int:
        return abs(self.value)


def _as_integer(x: Fraction) -> CgValue:
    if x.denominator != 1:
        raise IntegralityError(f"signature defect came out non-integral: {x}")
    return CgValue(int(x))


@dataclass(frozen=True)
class ChainPresentation:
    """A chain-link surgery presentation with character colours.

    ``framings`` are the chain framings (all >= 2 except in the single-curve
    degenerate case, where any framing is allowed); ``colors`` the meridian
    exponents in [1, t-1], each coprime to ``char_order``; the surgery
    relations close up mod ``char_order``.
    """

    framings: tuple
    colors: tuple
    char_order: int

    def __post_init__(self):
        if len(self.framings) != len(self.colors):
            raise ValueError("framings and colors must have equal length")
        if not self.framings:
            raise ValueError("empty chain")
        if self.char_order < 2:
            raise ValueError("character order must be >= 2")
        t = self.char_order
        for n in self.colors:
            if not 1 <= n <= t - 1 or gcd(n, t) != 1:
                raise UnsupportedCharacter(
                    f"colour {n} is not a unit mod {t}; the surgery formula "
                    "does not apply")
        _check_closing(self.framings, self.colors, t)

    @classmethod
    def from_meridian(cls, t: int, a: int, framings) -> "ChainPresentation":
        """Colour the whole chain from the image a of the first meridian."""
        framings = tuple(int(f) for f in framings)
        colors = tuple(chain_colors(t, a, framings))
        return cls(framings=framings, colors=colors, char_order=t)


def _check_closing(framings, colors, t):
    last = framings[-1] * colors[-1] + (colors[-2] if len(colors) > 1 else 0)
    if last % t != 0:
        raise InvalidCharacter(
            f"meridian image does not define a character: closing relation "
            f"gives {last} != 0 mod {t}")


def chain_colors(t: int, a: int, framings) -> list:
    """Colours of the whole chain induced by sending the first meridian to a.

    Propagates the surgery relations n_{i+1} = -f_i*n_i - n_{i-1} (mod t) with
    n_0 = 0, representatives in [0, t-1], and verifies the closing relation.
    Raises :class:`UnsupportedCharacter` when a colour is 0 or not coprime to
    t, :class:`InvalidCharacter` when the closing relation fails.
    """
    if t < 2:
        raise ValueError("character order must be >= 2")
    if not 1 <= a <= t - 1:
        raise ValueError(f"meridian image must lie in [1, t-1]; got {a}")
    framings = list(framings)
    colors = []
    prev, cur = 0, a % t
    for f in framings[:-1]:
        colors.append(cur)
        prev, cur = cur, (-f * cur - prev) % t
    colors.append(cur)
    for n in colors:
        if n == 0 or gcd(n, t) != 1:
            raise UnsupportedCharacter(
                f"induced colour {n} is not a unit mod {t}; the surgery "
                "formula does not apply")
    _check_closing(framings, colors, t)
    return colors


def _chain_formula(framings, colors, t: int, link_signature_term: int) -> CgValue:
    lam = chain_linking_matrix(framings)
    nu = lam.rows
    upper_sum = sum(lam.entries[i][j] for i in range(nu) for j in range(i + 1, nu))
    sign_term = symmetric_signature(lam)
    double = sum((t - colors[i]) * colors[j] * lam.entries[i][j]
                 for i in range(nu) for j in range(nu))
    total = Fraction(link_signature_term) - upper_sum - sign_term \
        + Fraction(2 * double, t * t)
    return _as_integer(total)


def cg_lens(p: int, q: int, t: int, a: int) -> CgValue:
    """sigma of the lens space S^3_{p/q}(unknot) at the character sending the
    first chain meridian to exp(2*pi*i*a/t).

    The chain presentation comes from the negative continued fraction of p/q;
    its evident disc system kills the link signature term.
    """
    if t < 2 or not 1 <= a <= t - 1:
        raise ValueError("need t >= 2 and 1 <= a < t")
    framings = neg_continued_fraction(p, q)
    colors = chain_colors(t, a, framings)
    return _chain_formula(framings, colors, t, link_signature_term=0)


def cg_integer_surgery(K: KnotExpr, m: int, a: int) -> CgValue:
    """sigma of S^3_{m^2}(K) at the character of order m sending the meridian
    to exp(2*pi*i*a/m): equals sigma_K(e^{2pi i a/m}) - 1 + 2a(m-a)."""
    if m < 2:
        raise ValueError("need m >= 2")
    if not 1 <= a < m or gcd(a, m) != 1:
        raise ValueError(f"need 1 <= a < m with gcd(a, m) = 1; got a={a}, m={m}")
    sig = lt_signature(K, RationalAngle(a, m)).value
    return _as_integer(Fraction(sig - 1 + 2 * a * (m - a)))


def cg_rational_surgery(K: KnotExpr, m: int, q: int, a: int) -> CgValue:
    """sigma of S^3_{m^2/q}(K) at the order-m character determined by a:
    sigma_K(e^{2pi i a/m}) plus the lens-space term for L(m^2, -q)."""
    if m < 2:
        raise ValueError("need m >= 2")
    if q < 1:
        raise ValueError("need q >= 1")
    if gcd(m * m, q) != 1:
        raise ValueError(f"need gcd(m^2, q) = 1; got m={m}, q={q}")
    if not 1 <= a < m or gcd(a, m) != 1:
        raise ValueError(f"need 1 <= a < m with gcd(a, m) = 1; got a={a}, m={m}")
    sig = lt_signature(K, RationalAngle(a, m)).value
    lens = cg_lens(m * m, q, m, a)
    return _as_integer(Fraction(sig + lens.value))


def cg_connected_sum(values) -> CgValue:
    """Signature defects add under connected sum."""
    return CgValue(sum(int(v) for v in values))
