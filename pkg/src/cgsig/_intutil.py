"""Integer helpers that stay fast on multi-million-digit operands.

CPython's built-in gcd and division are quadratic (or worse, for Fibonacci-like
pairs) at the sizes the torus-knot families produce, so anything that may touch
huge integers is routed through GMP when the operands are large enough to care.
All functions take and return plain ``int``.
"""

from __future__ import annotations

import math

try:
    from gmpy2 import gcd as _gmp_gcd, mpz
    _HAVE_GMP = True
except ImportError:  # pragma: no cover - gmpy2 is a declared dependency
    mpz = int
    _HAVE_GMP = False

# Below this many bits plain CPython arithmetic wins (no conversion overhead).
_GMP_BITS = 1 << 14


def _big(*xs: int) -> bool:
    return _HAVE_GMP and any(abs(x).bit_length() > _GMP_BITS for x in xs)


def gcd(a: int, b: int) -> int:
    if _big(a, b):
        return int(_gmp_gcd(mpz(a), mpz(b)))
    return math.gcd(a, b)


def floordiv(a: int, b: int) -> int:
    if _big(a, b):
        return int(mpz(a) // mpz(b))
    return a // b


def mod(a: int, b: int) -> int:
    if _big(a, b):
        return int(mpz(a) % mpz(b))
    return a % b


def mul(a: int, b: int) -> int:
    if _big(a, b):
        return int(mpz(a) * mpz(b))
    return a * b


def divides(d: int, n: int) -> bool:
    """Whether d | n (d > 0)."""
    return mod(n, d) == 0


def isqrt(n: int) -> int:
    return math.isqrt(n)


def is_perfect_square(n: int) -> bool:
    if n < 0:
        return False
    r = math.isqrt(n)
    return r * r == n
