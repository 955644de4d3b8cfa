"""Levine-Tristram signatures at exact rational angles.

For a torus knot T(p,q) the signature at omega = exp(2*pi*i*x), 0 < x < 1, is
read off from lattice counts over S = {i/p + j/q : 1 <= i <= p-1,
1 <= j <= q-1}:

    sigma = -2 * (#{s in S : 1 < s < 1+x} - #{s in S : 0 < s < x})
            - (#{s in S : s = 1+x} - #{s in S : s = x})

The half-weight boundary terms implement the value-at-a-jump convention: at a
root of the Alexander polynomial the signature is the average of the two
one-sided limits.  Cables add the pattern's signature to the companion's at
the m-th power of the angle, and connected sums add.

Counting is never done by a double loop: windows are counted either by an
O(log) Euclidean floor-sum recursion or, for short integer windows adjacent to
the extremes of S, by an O(1) residue-class argument.  The second path is what
makes torus knots with parameters of millions of digits tractable.  An
independent Seifert-matrix oracle lives in :mod:`cgsig.hermitian`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ._intutil import floordiv, gcd, mod, mul
from .angles import RationalAngle
from .knots import Cable, KnotExpr, Sum, Torus, Unknot, is_alexander_root

# Above this bit size of p*q the generic Euclidean path is refused rather than
# left to run for an unbounded time; the special windows cover the use cases
# that actually produce such parameters.
_GENERIC_BIT_LIMIT = 1_000_000


@dataclass(frozen=True)
class SignatureValue:
    """A signature value together with whether the angle is a jump point.

    Away from jumps the value is even; at a jump it is the average of the
    neighbouring values (and odd for a torus knot).
    """

    value: int
    at_jump: bool


def floor_sum(n: int, m: int, a: int, b: int) -> int:
    """sum_{i=0}^{n-1} floor((a*i + b) / m) for m >= 1, any integers a, b.

    Euclidean-style recursion, O(log max(a, m)) arbitrary-precision steps.
    """
    if n < 0:
        raise ValueError("need n >= 0")
    if m <= 0:
        raise ValueError("need m >= 1")
    ans = 0
    if a < 0:
        a2 = a % m
        ans -= n * (n - 1) // 2 * ((a2 - a) // m)
        a = a2
    if b < 0:
        b2 = b % m
        ans -= n * ((b2 - b) // m)
        b = b2
    while True:
        if a >= m:
            ans += n * (n - 1) // 2 * (a // m)
            a %= m
        if b >= m:
            ans += n * (b // m)
            b %= m
        y_max = a * n + b
        if y_max < m:
            break
        n = y_max // m
        b = y_max % m
        m, a = a, m
    return ans


def _cumulative(p: int, q: int, bound: int) -> int:
    """#{(i,j) : 1 <= i <= p-1, 1 <= j <= q-1, i*q + j*p <= bound}."""
    if bound < p + q:
        return 0
    if mul(p, q).bit_length() > _GENERIC_BIT_LIMIT:
        raise RuntimeError(
            "lattice count outside the supported special windows with "
            "parameters this large; the Euclidean path would not terminate "
            "in reasonable time"
        )
    pq = p * q
    i_full = (bound - pq) // q      # i <= i_full get the full column q-1
    i_last = (bound - p) // q       # i > i_last get nothing
    full_rows = max(0, min(i_full, p - 1))
    total = full_rows * (q - 1)
    lo = max(1, i_full + 1)
    hi = min(p - 1, i_last)
    if lo <= hi:
        total += floor_sum(hi - lo + 1, p, -q, bound - lo * q)
    return total


def _count_window(p: int, q: int, lo_n: int, hi_n: int) -> int:
    """#{(i,j) in the box : lo_n <= i*q + j*p <= hi_n}, inclusive bounds.

    Dispatches between O(1) residue-class rules (short windows adjacent to the
    minimum p+q or to pq) and the generic floor-sum cumulative counts.
    Symmetric in (p, q).
    """
    if p > q:
        p, q = q, p
    pq = mul(p, q)
    lo_n = max(lo_n, p + q)
    hi_n = min(hi_n, 2 * pq - p - q)
    if lo_n > hi_n:
        return 0
    if lo_n <= pq <= hi_n:
        # No point sits exactly at pq; split so each half hugs one side.
        return _count_window(p, q, lo_n, pq - 1) + _count_window(p, q, pq + 1, hi_n)
    if hi_n < pq:
        # Reflect through (i,j) -> (p-i, q-j), which sends N to 2pq - N.
        lo_n, hi_n = 2 * pq - hi_n, 2 * pq - lo_n
    # Now pq < lo_n <= hi_n.
    if hi_n - pq <= q - p:
        # Every N in (pq, pq + (q-p)] with p not dividing N is hit exactly
        # once inside the box, and multiples of p are never hit.
        width = hi_n - lo_n + 1
        mult_p = floordiv(hi_n, p) - floordiv(lo_n - 1, p)
        return width - mult_p
    return _cumulative(p, q, hi_n) - _cumulative(p, q, lo_n - 1)


def _count_eq(p: int, q: int, n_val: int) -> int:
    """#{(i,j) in the box : i*q + j*p = n_val}; always 0 or 1."""
    if p > q:
        p, q = q, p
    pq = mul(p, q)
    if n_val < p + q or n_val > 2 * pq - p - q:
        return 0
    if n_val < pq:
        n_val = 2 * pq - n_val
    if n_val == pq:
        return 0
    if n_val - pq <= q - p:
        return 0 if mod(n_val, p) == 0 else 1
    if pq.bit_length() > _GENERIC_BIT_LIMIT:
        raise RuntimeError(
            "boundary count outside the supported special windows with "
            "parameters this large"
        )
    i0 = mod(n_val * pow(q, -1, p), p)
    if i0 == 0:
        return 0
    j = (n_val - i0 * q) // p
    return 1 if 1 <= j <= q - 1 else 0


def count_lattice(p: int, q: int, lo, hi, lo_strict: bool = True,
                  hi_strict: bool = True) -> int:
    """#{(i,j) : 1 <= i <= p-1, 1 <= j <= q-1, lo <?= i/p + j/q <?= hi}.

    Strictness of each endpoint is selectable; bounds are exact rationals with
    0 <= lo < hi <= 2.  Computed in O(log max(p,q)) big-integer steps.
    """
    if p < 2 or q < 2:
        raise ValueError("need p, q >= 2")
    if gcd(p, q) != 1:
        raise ValueError(f"need coprime parameters, got ({p}, {q})")
    lo, hi = Fraction(lo), Fraction(hi)
    if not (0 <= lo < hi <= 2):
        raise ValueError("need 0 <= lo < hi <= 2")
    pq = mul(p, q)
    lo_scaled = lo * pq
    hi_scaled = hi * pq
    # Integer inclusive bounds for N = i*q + j*p.
    if lo_strict:
        lo_n = floordiv(lo_scaled.numerator, lo_scaled.denominator) + 1
    else:
        lo_n = -floordiv(-lo_scaled.numerator, lo_scaled.denominator)
    if hi_strict:
        hi_n = -floordiv(-hi_scaled.numerator, hi_scaled.denominator) - 1
    else:
        hi_n = floordiv(hi_scaled.numerator, hi_scaled.denominator)
    return _count_window(p, q, lo_n, hi_n)


def _torus_signature(p: int, q: int, theta: RationalAngle) -> int:
    num, den = theta.num, theta.den
    pq = mul(p, q)
    scaled = mul(pq, num)
    # Largest integer strictly below pq*num/den.
    below = floordiv(scaled - 1, den)
    upper = _count_window(p, q, pq + 1, pq + below)
    lower = _count_window(p, q, 1, below)
    if mod(scaled, den) == 0:
        at_x = floordiv(scaled, den)
        eq_upper = _count_eq(p, q, pq + at_x)
        eq_lower = _count_eq(p, q, at_x)
    else:
        eq_upper = eq_lower = 0
    return -2 * (upper - lower) - (eq_upper - eq_lower)


def _signature_value(knot: KnotExpr, theta: RationalAngle) -> int:
    if isinstance(knot, Unknot):
        return 0
    if isinstance(knot, Torus):
        return _torus_signature(knot.p, knot.q, theta)
    if isinstance(knot, Cable):
        total = 0
        pattern = knot.pattern()
        if not isinstance(pattern, Unknot):
            total += _torus_signature(pattern.p, pattern.q, theta)
        inner = theta.power(knot.m)
        if not inner.is_trivial:
            total += _signature_value(knot.companion, inner)
        return total
    if isinstance(knot, Sum):
        return sum(_signature_value(part, theta) for part in knot.parts)
    raise TypeError(f"unknown knot expression {knot!r}")


def lt_signature(knot: KnotExpr, theta: RationalAngle) -> SignatureValue:
    """Levine-Tristram signature of a knot expression at a nontrivial angle.

    At Alexander roots the returned value is the average of the one-sided
    limits and ``at_jump`` is set.
    """
    if theta.is_trivial:
        raise ValueError("the signature is evaluated at nontrivial angles only")
    value = _signature_value(knot, theta)
    jump = is_alexander_root(knot, theta)
    if not jump:
        assert value % 2 == 0, "even-value invariant violated away from jumps"
    return SignatureValue(value, jump)
