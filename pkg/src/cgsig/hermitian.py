"""Seifert-matrix oracle for signature values.

This module is deliberately independent of the lattice-count evaluator: it
builds an honest Seifert matrix V of a torus knot from the fiber surface of
the positive braid (s_1 ... s_{p-1})^q and computes the signature of the
Hermitian form (1-w)V + (1-conj(w))V^T directly.

Sign determination is certified: floating eigenvalues (numpy, escalating to
mpmath) decide every eigenvalue whose distance to zero exceeds a backward
-error bound, and the number of exactly-zero eigenvalues is settled by the
rank of V - conj(w)V^T over the cyclotomic field - by exact field elimination
when the size gate allows it, otherwise by consensus of the matrix rank over
several prime fields F_P with P = 1 (mod m), each of which certifies a rank
lower bound.  Inconclusive computations raise; nothing is silently rounded.
"""

from __future__ import annotations

import math
from fractions import Fraction

import numpy as np

from .angles import RationalAngle
from .intlinalg import IntMatrix


class CertificationError(ArithmeticError):
    """Eigenvalue signs could not be certified within the precision ceiling."""


# Size gate n^3 * phi(m)^2 below which exact cyclotomic elimination is used
# for the zero-eigenvalue count; above it the multi-prime rank decides.
_EXACT_GATE = 400_000
_PRECISIONS = (53, 130, 280, 600, 1300)

# ----------------------------------------------------------------------
# Seifert matrices of positive braid closures.

# Linking conventions for the band-loop generators, calibrated against the
# Alexander-polynomial identity det(V - tV^T) = ±t^k Delta_{T(p,q)}(t) and
# frozen.  Same column, consecutive loops x below y: (V[x][y], V[y][x]).
_SAME_COLUMN = (1, 0)
# Adjacent columns, x in the left column: interleaving s1 < u1 < s2 < u2.
_LEFT_STARTS = (0, 1)
# Adjacent columns, interleaving u1 < s1 < u2 < s2.
_RIGHT_STARTS = (0, -1)


def seifert_matrix_positive_braid(word, strands: int) -> IntMatrix:
    """Seifert matrix of the closure of a positive braid word.

    ``word`` lists the generator index (1-based column) of each crossing; the
    fiber surface consists of ``strands`` discs joined by one band per
    crossing, and H_1 is generated by one loop per consecutive pair of bands
    in the same column.
    """
    if any(not 1 <= c < strands for c in word):
        raise ValueError("braid word letters must lie in [1, strands-1]")
    occurrences: dict = {}
    for t, c in enumerate(word):
        occurrences.setdefault(c, []).append(t)
    gens = []
    for c in sorted(occurrences):
        ts = occurrences[c]
        gens.extend((c, ts[a], ts[a + 1]) for a in range(len(ts) - 1))
    n = len(gens)
    V = [[0] * n for _ in range(n)]
    for i, (c, s1, s2) in enumerate(gens):
        V[i][i] = -1
        for j, (c2, u1, u2) in enumerate(gens):
            if i == j:
                continue
            if c2 == c and u1 == s2:
                V[i][j], V[j][i] = _SAME_COLUMN
            elif c2 == c + 1:
                if s1 < u1 < s2 < u2:
                    V[i][j], V[j][i] = _LEFT_STARTS
                elif u1 < s1 < u2 < s2:
                    V[i][j], V[j][i] = _RIGHT_STARTS
    return IntMatrix(V)


def seifert_matrix_torus(p: int, q: int, cap: int = 1000) -> IntMatrix:
    """Seifert matrix of T(p,q) from the braid (s_1...s_{p-1})^q, size
    (p-1)(q-1).  Capped because this is a test oracle, not the main path."""
    if p < 2 or q < 2 or math.gcd(p, q) != 1:
        raise ValueError("need coprime p, q >= 2")
    if p * q > cap:
        raise ValueError(f"oracle cap exceeded: pq = {p * q} > {cap}")
    word = [c for _ in range(q) for c in range(1, p)]
    return seifert_matrix_positive_braid(word, p)


# ----------------------------------------------------------------------
# Exact polynomial helpers over Z (dense coefficient lists, index = degree).

def _ptrim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _ptrim(out)


def _psub(a, b):
    out = [0] * max(len(a), len(b))
    for i, x in enumerate(a):
        out[i] += x
    for i, y in enumerate(b):
        out[i] -= y
    return _ptrim(out)


def _pdiv_exact(a, b):
    a = list(a)
    q = [0] * (len(a) - len(b) + 1) if len(a) >= len(b) else []
    while len(a) >= len(b) and a:
        c, e = a[-1], len(a) - len(b)
        if c % b[-1]:
            raise ArithmeticError("non-exact polynomial division")
        f = c // b[-1]
        q[e] = f
        for i, y in enumerate(b):
            a[e + i] -= f * y
        _ptrim(a)
    if a:
        raise ArithmeticError("non-exact polynomial division (remainder)")
    return _ptrim(q)


def _x_power_minus_one(n):
    return [-1] + [0] * (n - 1) + [1]


def torus_alexander_poly(p: int, q: int):
    """Coefficients of (t^{pq}-1)(t-1)/((t^p-1)(t^q-1))."""
    num = _pmul(_x_power_minus_one(p * q), _x_power_minus_one(1))
    return _pdiv_exact(_pdiv_exact(num, _x_power_minus_one(p)),
                       _x_power_minus_one(q))


def alexander_from_seifert(V: IntMatrix):
    """det(V - t V^T) as an exact integer polynomial (Bareiss over Z[t])."""
    n = V.rows
    a = [[_ptrim([V.entries[i][j], -V.entries[j][i]]) for j in range(n)]
         for i in range(n)]
    prev = [1]
    sign = 1
    for k in range(n - 1):
        if not a[k][k]:
            for r in range(k + 1, n):
                if a[r][k]:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return []
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = _pdiv_exact(
                    _psub(_pmul(a[i][j], a[k][k]), _pmul(a[i][k], a[k][j])),
                    prev)
            a[i][k] = []
        prev = a[k][k]
    return [sign * c for c in a[n - 1][n - 1]]


def poly_equal_up_to_units(a, b) -> bool:
    """Whether a = ±t^k b."""
    a, b = list(a), list(b)
    while a and a[0] == 0:
        a.pop(0)
    while b and b[0] == 0:
        b.pop(0)
    return a == b or [-c for c in a] == b


# ----------------------------------------------------------------------
# Cyclotomic polynomials and exact arithmetic in Q(zeta_m).

def _prime_factors(n: int):
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def euler_phi(n: int) -> int:
    out = n
    for p in _prime_factors(n):
        out -= out // p
    return out


_cyclotomic_cache: dict = {}


def cyclotomic_poly(m: int):
    """Integer coefficients of Phi_m, by dividing x^m - 1 by the proper
    cyclotomic factors."""
    if m in _cyclotomic_cache:
        return list(_cyclotomic_cache[m])
    poly = _x_power_minus_one(m)
    for d in range(1, m):
        if m % d == 0:
            poly = _pdiv_exact(poly, cyclotomic_poly(d))
    _cyclotomic_cache[m] = tuple(poly)
    return poly


class _Cyclotomic:
    """Arithmetic in Q(zeta_m) = Q[x]/Phi_m with dense Fraction coefficients."""

    def __init__(self, m: int):
        self.m = m
        self.phi_poly = cyclotomic_poly(m)
        self.deg = len(self.phi_poly) - 1
        # Reduction of x^k for k up to 2*deg-2, extended on demand.
        self._powers = [[Fraction(1) if i == k else Fraction(0)
                         for i in range(self.deg)] for k in range(self.deg)]

    def _power(self, k: int):
        while len(self._powers) <= k:
            prev = self._powers[-1]
            shifted = [Fraction(0)] + list(prev)
            top = shifted.pop()  # coefficient of x^deg
            if top:
                for i in range(self.deg):
                    shifted[i] -= top * self.phi_poly[i]
            self._powers.append(shifted)
        return self._powers[k]

    def zeta_power(self, e: int):
        e %= self.m
        return list(self._power(e))

    def zero(self):
        return [Fraction(0)] * self.deg

    def from_int(self, c: int):
        out = self.zero()
        out[0] = Fraction(c)
        return out

    def add(self, a, b):
        return [x + y for x, y in zip(a, b)]

    def sub(self, a, b):
        return [x - y for x, y in zip(a, b)]

    def scale(self, a, c):
        return [x * c for x in a]

    def mul(self, a, b):
        conv = [Fraction(0)] * (2 * self.deg - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        conv[i + j] += x * y
        out = self.zero()
        for k, c in enumerate(conv):
            if c:
                pk = self._power(k)
                for i in range(self.deg):
                    out[i] += c * pk[i]
        return out

    def is_zero(self, a) -> bool:
        return all(x == 0 for x in a)

    def inverse(self, a):
        """Inverse mod Phi_m by the extended Euclidean algorithm in Q[x]."""
        def trim(p):
            while p and p[-1] == 0:
                p.pop()
            return p

        def polydivmod(num, den):
            num = list(num)
            quo = [Fraction(0)] * max(0, len(num) - len(den) + 1)
            while len(num) >= len(den) and num:
                f = num[-1] / den[-1]
                e = len(num) - len(den)
                quo[e] = f
                for i, y in enumerate(den):
                    num[e + i] -= f * y
                trim(num)
            return quo, num

        r0 = [Fraction(c) for c in self.phi_poly]
        r1 = trim(list(a))
        if not r1:
            raise ZeroDivisionError("inverse of zero in the cyclotomic field")
        s0, s1 = [], [Fraction(1)]
        while True:
            quo, rem = polydivmod(r0, r1)
            if not rem:
                break
            # s_next = s0 - quo * s1
            prod = [Fraction(0)] * (len(quo) + len(s1) - 1) if quo and s1 else []
            for i, x in enumerate(quo):
                for j, y in enumerate(s1):
                    prod[i + j] += x * y
            s_next = [Fraction(0)] * max(len(s0), len(prod))
            for i, x in enumerate(s0):
                s_next[i] += x
            for i, x in enumerate(prod):
                s_next[i] -= x
            r0, r1 = r1, rem
            s0, s1 = s1, trim(s_next)
        # r1 is the gcd; must be a nonzero constant since Phi_m is irreducible.
        c = r1[0]
        inv = [x / c for x in s1]
        inv += [Fraction(0)] * (self.deg - len(inv))
        return inv[:self.deg]


def _nullity_cyclotomic(V: IntMatrix, theta: RationalAngle) -> int:
    """dim ker(V - conj(w) V^T) by exact Gaussian elimination over Q(zeta_m)."""
    field = _Cyclotomic(theta.den)
    wbar = field.zeta_power(-theta.num)
    n = V.rows
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            entry = field.from_int(V.entries[i][j])
            if V.entries[j][i]:
                entry = field.sub(entry, field.scale(wbar, V.entries[j][i]))
            row.append(entry)
        rows.append(row)
    rank = 0
    col = 0
    while col < n and rank < n:
        pivot = next((r for r in range(rank, n)
                      if not field.is_zero(rows[r][col])), None)
        if pivot is None:
            col += 1
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = field.inverse(rows[rank][col])
        rows[rank] = [field.mul(inv, e) for e in rows[rank]]
        for r in range(rank + 1, n):
            f = rows[r][col]
            if not field.is_zero(f):
                rows[r] = [field.sub(e, field.mul(f, pe))
                           for e, pe in zip(rows[r], rows[rank])]
        rank += 1
        col += 1
    return n - rank


# ----------------------------------------------------------------------
# Rank over F_P with P = 1 (mod m), zeta mapped to an order-m element.

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


_prime_cache: dict = {}


def _primes_one_mod(m: int, count: int):
    """Deterministic primes P = 1 (mod m) with P < 2^31 (for int64 products)."""
    cached = _prime_cache.get(m, [])
    if len(cached) >= count:
        return cached[:count]
    out = list(cached)
    k = (out[-1] // m + 1) if out else (1 << 29) // m + 1
    while len(out) < count:
        P = k * m + 1
        if P >= (1 << 31):
            raise CertificationError(f"no usable primes = 1 mod {m} below 2^31")
        if _is_prime(P):
            out.append(P)
        k += 1
    _prime_cache[m] = out
    return out[:count]


_generator_cache: dict = {}


def _order_m_element(m: int, P: int) -> int:
    key = (m, P)
    if key in _generator_cache:
        return _generator_cache[key]
    exponent = (P - 1) // m
    prime_divs = _prime_factors(m)
    for h in range(2, P):
        g = pow(h, exponent, P)
        if g != 1 and all(pow(g, m // ell, P) != 1 for ell in prime_divs):
            _generator_cache[key] = g
            return g
    raise CertificationError(f"no order-{m} element mod {P}")


def _rank_mod_p(A: np.ndarray, P: int) -> int:
    A = A.astype(np.int64) % P
    n_rows, n_cols = A.shape
    scratch = np.empty_like(A)
    rank = 0
    for col in range(n_cols):
        if rank == n_rows:
            break
        nz = np.nonzero(A[rank:, col])[0]
        if nz.size == 0:
            continue
        piv = rank + int(nz[0])
        if piv != rank:
            A[[rank, piv]] = A[[piv, rank]]
        inv = pow(int(A[rank, col]), P - 2, P)
        row = A[rank, col:]
        row *= inv
        row %= P
        below = A[rank + 1:, col]
        if below.size and below.any():
            block = A[rank + 1:, col:]
            tmp = scratch[:block.shape[0], :block.shape[1]]
            np.multiply.outer(below, row, out=tmp)
            block -= tmp
            block %= P
        rank += 1
    return rank


def _mod_p_matrix(V: IntMatrix, P: int) -> np.ndarray:
    key = ("modp", P)
    cached = V._cache.get(key)
    if cached is None:
        cached = np.array([[x % P for x in row] for row in V.entries],
                          dtype=np.int64)
        V._cache[key] = cached
    return cached


def _nullity_one_prime(V: IntMatrix, theta: RationalAngle, P: int) -> int:
    m = theta.den
    g = _order_m_element(m, P)
    wbar = pow(g, m - theta.num, P)
    Vp = _mod_p_matrix(V, P)
    A = (Vp - wbar * Vp.T) % P
    return V.rows - _rank_mod_p(A, P)


def _nullity_modular(V: IntMatrix, theta: RationalAngle,
                     expected: int | None = None) -> int:
    """Nullity by prime-field specialization.

    Each prime certifies a rank lower bound (nullity upper bound).  One prime
    agreeing with ``expected`` (the numeric near-zero count, itself an upper
    bound reached only by true zeros plus unresolved noise) is accepted;
    otherwise two primes must agree, with a third as tie-breaker.
    """
    m = theta.den
    primes = _primes_one_mod(m, 4)
    values = [_nullity_one_prime(V, theta, primes[0])]
    if expected is not None and values[0] == expected:
        return values[0]
    for P in primes[1:]:
        values.append(_nullity_one_prime(V, theta, P))
        for v in set(values):
            if values.count(v) >= 2:
                return v
    raise CertificationError(
        f"prime-field ranks disagree: nullity candidates {values}")


def _exact_nullity(V: IntMatrix, theta: RationalAngle,
                   expected: int | None = None) -> int:
    n = V.rows
    phi = euler_phi(theta.den)
    if n ** 3 * phi * phi <= _EXACT_GATE:
        return _nullity_cyclotomic(V, theta)
    return _nullity_modular(V, theta, expected=expected)


def _det_mod_p(A: np.ndarray, P: int) -> int:
    """Determinant of a square matrix over F_P (entries already reduced)."""
    A = A.astype(np.int64) % P
    n = A.shape[0]
    scratch = np.empty_like(A)
    det = 1
    for col in range(n):
        nz = np.nonzero(A[col:, col])[0]
        if nz.size == 0:
            return 0
        piv = col + int(nz[0])
        if piv != col:
            A[[col, piv]] = A[[piv, col]]
            det = P - det
        pivval = int(A[col, col])
        det = det * pivval % P
        inv = pow(pivval, P - 2, P)
        row = A[col, col:]
        row *= inv
        row %= P
        below = A[col + 1:, col]
        if below.size and below.any():
            block = A[col + 1:, col:]
            tmp = scratch[:block.shape[0], :block.shape[1]]
            np.multiply.outer(below, row, out=tmp)
            block -= tmp
            block %= P
    return det


class TorusAlexanderCertificate:
    """Certifies det(V - tV^T) = ±(t^{pq}-1)(t-1)/((t^p-1)(t^q-1)) for a
    torus-knot Seifert matrix by modular evaluation at random points
    (Schwartz-Zippel), then answers exact-nullity queries at roots of unity
    by order arithmetic on the factored target.

    The target has simple roots (the pq-th roots of unity that are neither
    p-th nor q-th roots), so the nullity of V - conj(w)V^T is the root
    indicator.  Use as the ``zero_decision`` argument of
    :func:`hermitian_signature` for fast certified sweeps.
    """

    def __init__(self, V: IntMatrix, p: int, q: int, points: int = 2):
        n = (p - 1) * (q - 1)
        if not V.is_square or V.rows != n:
            raise ValueError("matrix size does not match (p-1)(q-1)")
        self.p, self.q = p, q
        target = torus_alexander_poly(p, q)
        P = 2147483629  # largest prime < 2^31
        rng_state = 1234567 + 31 * p + q
        sign = None
        checked = 0
        while checked < points:
            rng_state = (1103515245 * rng_state + 12345) % (1 << 31)
            t0 = 2 + rng_state % (P - 3)
            rhs = 0
            for c in reversed(target):
                rhs = (rhs * t0 + c) % P
            if rhs == 0:
                continue  # t0 hit a root mod P; re-draw
            Vp = _mod_p_matrix(V, P)
            lhs = int(_det_mod_p((Vp - t0 * Vp.T) % P, P))
            if lhs == rhs:
                s = 1
            elif lhs == P - rhs:
                s = -1
            else:
                raise CertificationError(
                    f"Seifert matrix fails the Alexander determinant identity "
                    f"at t = {t0} mod {P}")
            if sign is None:
                sign = s
            elif sign != s:
                raise CertificationError(
                    "inconsistent sign in the Alexander determinant identity")
            checked += 1

    def nullity(self, V: IntMatrix, theta: RationalAngle) -> int:
        d = theta.den
        if d == 1:
            raise ValueError("trivial angle")
        if (self.p * self.q) % d == 0 and self.p % d != 0 and self.q % d != 0:
            return 1
        return 0


# ----------------------------------------------------------------------
# Certified signature.

def _numeric_eigenvalues(V: IntMatrix, theta: RationalAngle, prec: int):
    """Eigenvalues of (1-w)V + (1-conj(w))V^T and an error radius eta such
    that every true eigenvalue lies within eta of a computed one."""
    n = V.rows
    if prec == 53:
        Vf = V._cache.get("float")
        if Vf is None:
            Vf = np.array(V.entries, dtype=np.float64)
            V._cache["float"] = Vf
        w = np.exp(2j * np.pi * theta.num / theta.den)
        M = (1 - w) * Vf + (1 - w.conjugate()) * Vf.T
        evals = np.linalg.eigvalsh(M)
        norm = float(np.linalg.norm(M))
        eta = 64.0 * max(n, 4) * 2.0 ** -52 * max(norm, 1.0)
        return [float(x) for x in evals], eta
    import mpmath

    with mpmath.workprec(prec + 20):
        w = mpmath.e ** (2j * mpmath.pi * mpmath.mpf(theta.num) / theta.den)
        a, b = 1 - w, 1 - mpmath.conj(w)
        M = mpmath.zeros(n, n)
        for i in range(n):
            for j in range(n):
                M[i, j] = a * V.entries[i][j] + b * V.entries[j][i]
        evals = mpmath.mp.eighe(M, eigvals_only=True)
        norm = math.sqrt(sum(abs(complex(M[i, j])) ** 2
                             for i in range(n) for j in range(n)))
        eta = 64.0 * max(n, 4) * 2.0 ** (1 - prec) * max(norm, 1.0)
        return [float(x) for x in evals], eta


def hermitian_signature(V: IntMatrix, theta: RationalAngle,
                        zero_decision=None) -> int:
    """Signature of the Hermitian matrix (1-w)V + (1-conj(w))V^T at the
    nontrivial root of unity w given by theta.

    Certified: numeric eigenvalues decide signs outside an error band, the
    exact rank of V - conj(w)V^T over Q(zeta) decides how many eigenvalues
    are exactly zero, and precision escalates until the two accounts agree.
    ``zero_decision`` may supply an alternative exact nullity source (e.g. a
    :class:`TorusAlexanderCertificate`'s ``nullity``); the default is direct
    rank computation.  Raises :class:`CertificationError` at the precision
    ceiling.
    """
    if not V.is_square:
        raise ValueError("need a square matrix")
    if theta.is_trivial:
        raise ValueError("the Hermitian form degenerates at the trivial angle")
    n = V.rows
    if n == 0:
        return 0
    if all(x == 0 for row in V.entries for x in row):
        return 0
    nullity = None
    for prec in _PRECISIONS:
        evals, eta = _numeric_eigenvalues(V, theta, prec)
        pos = sum(1 for x in evals if x > eta)
        neg = sum(1 for x in evals if x < -eta)
        in_band = n - pos - neg
        if in_band == 0:
            return pos - neg
        if nullity is None:
            if zero_decision is not None:
                nullity = zero_decision(V, theta)
            else:
                nullity = _exact_nullity(V, theta, expected=in_band)
        if in_band == nullity:
            return pos - neg
    raise CertificationError(
        f"could not certify eigenvalue signs at precision {_PRECISIONS[-1]} "
        f"bits: {in_band} eigenvalues in the uncertainty band, exact nullity "
        f"{nullity}")
