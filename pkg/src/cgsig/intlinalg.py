"""Arbitrary-precision integer matrices: Smith normal form, determinants,
inertia, negative continued fractions and the surgery matrices built from
them.

Everything here is exact; matrices are small (homology presentations), so the
algorithms favour clarity and entry-size control over asymptotics.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction


class IntMatrix:
    """A rectangular matrix of arbitrary-precision integers.

    ``_cache`` holds derived representations (float/modular arrays) for
    consumers that treat the matrix as immutable after construction.
    """

    __slots__ = ("rows", "cols", "entries", "_cache")

    def __init__(self, entries):
        entries = [list(map(int, row)) for row in entries]
        self.rows = len(entries)
        self.cols = len(entries[0]) if entries else 0
        if any(len(row) != self.cols for row in entries):
            raise ValueError("ragged rows in matrix input")
        self.entries = entries
        self._cache = {}

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntMatrix":
        return cls([[0] * cols for _ in range(rows)])

    @classmethod
    def diagonal(cls, values) -> "IntMatrix":
        values = list(values)
        n = len(values)
        mat = cls.zeros(n, n)
        for i, v in enumerate(values):
            mat.entries[i][i] = int(v)
        return mat

    def __getitem__(self, idx):
        i, j = idx
        return self.entries[i][j]

    def __eq__(self, other):
        return isinstance(other, IntMatrix) and self.entries == other.entries

    def __repr__(self):
        return f"IntMatrix({self.entries!r})"

    def copy(self) -> "IntMatrix":
        return IntMatrix([row[:] for row in self.entries])

    def transpose(self) -> "IntMatrix":
        return IntMatrix([[self.entries[i][j] for i in range(self.rows)]
                          for j in range(self.cols)])

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ValueError("dimension mismatch in matrix product")
        out = [[sum(self.entries[i][k] * other.entries[k][j]
                    for k in range(self.cols))
                for j in range(other.cols)]
               for i in range(self.rows)]
        return IntMatrix(out)

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_symmetric(self) -> bool:
        return self.is_square and all(
            self.entries[i][j] == self.entries[j][i]
            for i in range(self.rows) for j in range(i))

    def determinant(self) -> int:
        """Exact determinant by fraction-free (Bareiss) elimination."""
        if not self.is_square:
            raise ValueError("determinant of a non-square matrix")
        n = self.rows
        if n == 0:
            return 1
        a = [row[:] for row in self.entries]
        sign = 1
        prev = 1
        for k in range(n - 1):
            if a[k][k] == 0:
                for r in range(k + 1, n):
                    if a[r][k] != 0:
                        a[k], a[r] = a[r], a[k]
                        sign = -sign
                        break
                else:
                    return 0
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
                a[i][k] = 0
            prev = a[k][k]
        return sign * a[n - 1][n - 1]


@dataclass(frozen=True)
class SnfResult:
    """Smith normal form D = U @ A @ V with unimodular U, V.

    ``invariant_factors`` are the diagonal entries > 1; ``ones`` counts the
    trivial factors and ``zeros`` the zero diagonal entries (free rank of the
    cokernel contribution from the diagonal part).
    """

    U: IntMatrix
    D: IntMatrix
    V: IntMatrix
    invariant_factors: tuple
    ones: int
    zeros: int


def smith_normal_form(A: IntMatrix) -> SnfResult:
    """Smith normal form over Z with transformation matrices.

    Pivots are chosen smallest-in-absolute-value to limit entry growth.
    """
    d = A.copy()
    rows, cols = d.rows, d.cols
    U = IntMatrix.identity(rows)
    V = IntMatrix.identity(cols)
    e = d.entries

    def swap_rows(i, j):
        if i != j:
            e[i], e[j] = e[j], e[i]
            U.entries[i], U.entries[j] = U.entries[j], U.entries[i]

    def swap_cols(i, j):
        if i != j:
            for row in e:
                row[i], row[j] = row[j], row[i]
            for row in V.entries:
                row[i], row[j] = row[j], row[i]

    def add_row(src, dst, factor):
        if factor:
            e[dst] = [x + factor * y for x, y in zip(e[dst], e[src])]
            U.entries[dst] = [x + factor * y
                              for x, y in zip(U.entries[dst], U.entries[src])]

    def add_col(src, dst, factor):
        if factor:
            for row in e:
                row[dst] += factor * row[src]
            for row in V.entries:
                row[dst] += factor * row[src]

    def negate_row(i):
        e[i] = [-x for x in e[i]]
        U.entries[i] = [-x for x in U.entries[i]]

    t = 0
    while t < min(rows, cols):
        # Smallest nonzero pivot in the trailing block; rescanning after
        # every reduction pass keeps the pivot (and entry growth) small.
        pivot = None
        best = None
        for i in range(t, rows):
            for j in range(t, cols):
                v = abs(e[i][j])
                if v and (best is None or v < best):
                    best, pivot = v, (i, j)
        if pivot is None:
            break
        swap_rows(t, pivot[0])
        swap_cols(t, pivot[1])
        changed = False
        for i in range(t + 1, rows):
            if e[i][t]:
                add_row(t, i, -(e[i][t] // e[t][t]))
                changed = changed or e[i][t] != 0
        for j in range(t + 1, cols):
            if e[t][j]:
                add_col(t, j, -(e[t][j] // e[t][t]))
                changed = changed or e[t][j] != 0
        if changed:
            continue  # a remainder smaller than the pivot exists; rescan
        # Divisibility: the pivot must divide every later entry; if not, mix
        # the offending row in and reduce again.
        fix = None
        for i in range(t + 1, rows):
            for j in range(t + 1, cols):
                if e[i][j] % e[t][t]:
                    fix = i
                    break
            if fix is not None:
                break
        if fix is not None:
            add_row(fix, t, 1)
            continue
        if e[t][t] < 0:
            negate_row(t)
        t += 1

    diag = [e[i][i] for i in range(min(rows, cols))]
    factors = tuple(x for x in diag if x > 1)
    ones = sum(1 for x in diag if x == 1)
    zeros = sum(1 for x in diag if x == 0)
    return SnfResult(U=U, D=d, V=V, invariant_factors=factors,
                     ones=ones, zeros=zeros)


@dataclass(frozen=True)
class CokernelInfo:
    is_cyclic: bool
    min_generators: int
    order: int | None  # None means infinite


def cokernel_analysis(A: IntMatrix) -> CokernelInfo:
    """Structure of Z^rows / (column span of A): cyclicity, minimal number of
    generators, and the order when finite."""
    snf = smith_normal_form(A)
    rank = snf.ones + len(snf.invariant_factors)
    free_rank = A.rows - rank
    min_generators = len(snf.invariant_factors) + free_rank
    if free_rank > 0:
        order = None
    else:
        order = math.prod(snf.invariant_factors)
    return CokernelInfo(is_cyclic=min_generators <= 1,
                        min_generators=min_generators,
                        order=order)


def neg_continued_fraction(p: int, q: int) -> list:
    """The unique expansion p/q = a1 - 1/(a2 - 1/(... - 1/an)) with all ai >= 2.

    Requires p > q >= 1 coprime.  Uses the ceiling-division recursion, which
    keeps every coefficient >= 2.
    """
    if q < 1 or p <= q:
        raise ValueError("need p > q >= 1")
    if math.gcd(p, q) != 1:
        raise ValueError(f"need coprime p, q; got ({p}, {q})")
    out = []
    while True:
        a = -((-p) // q)  # ceil(p/q)
        out.append(a)
        r = a * q - p
        if r == 0:
            break
        p, q = q, r
    assert all(a >= 2 for a in out)
    return out


def evaluate_neg_continued_fraction(coeffs) -> Fraction:
    """Evaluate [a1,...,an] back to a1 - 1/(a2 - ...)."""
    value = Fraction(coeffs[-1])
    for a in reversed(coeffs[:-1]):
        value = a - 1 / value
    return value


def chain_linking_matrix(framings) -> IntMatrix:
    """Tridiagonal linking matrix of a chain of unknots with given framings."""
    framings = list(framings)
    if not framings:
        raise ValueError("need at least one framing")
    n = len(framings)
    mat = IntMatrix.zeros(n, n)
    for i, f in enumerate(framings):
        mat.entries[i][i] = int(f)
        if i + 1 < n:
            mat.entries[i][i + 1] = 1
            mat.entries[i + 1][i] = 1
    return mat


def chain_determinant(framings) -> int:
    """Determinant of :func:`chain_linking_matrix` by the three-term
    continuant recursion (linear time; the dense elimination is cubic)."""
    prev2, prev1 = 1, 0
    for a in framings:
        prev2, prev1 = int(a) * prev2 - prev1, prev2
    return prev2


def plumbing_matrix_Q(a: int, n) -> IntMatrix:
    """Intersection matrix of the (v+2)-vertex plumbing-like diagram: first
    row (a+2, 2, 1,...,1), second row (2, 0,...,0), then one row per n_j with
    n_j^2 in its own slot."""
    n = [int(x) for x in n]
    if not n:
        raise ValueError("need at least one plumbed piece")
    v = len(n)
    size = v + 2
    mat = IntMatrix.zeros(size, size)
    mat.entries[0][0] = a + 2
    mat.entries[0][1] = mat.entries[1][0] = 2
    for j in range(v):
        mat.entries[0][j + 2] = mat.entries[j + 2][0] = 1
        mat.entries[j + 2][j + 2] = n[j] ** 2
    return mat


def symmetric_signature(A: IntMatrix) -> int:
    """Signature (positive minus negative eigenvalue count) of a symmetric
    integer matrix, computed exactly.

    Fast path: leading principal minors when all are nonzero (Jacobi).
    Fallback: congruence diagonalization over the rationals.
    """
    if not A.is_symmetric():
        raise ValueError("signature of a non-symmetric matrix")
    n = A.rows
    if n == 0:
        return 0
    minors = []
    ok = True
    for k in range(1, n + 1):
        sub = IntMatrix([row[:k] for row in A.entries[:k]])
        d = sub.determinant()
        if d == 0:
            ok = False
            break
        minors.append(d)
    if ok:
        signs = [1] + [1 if d > 0 else -1 for d in minors]
        return sum(1 if signs[i] * signs[i + 1] > 0 else -1 for i in range(n))
    return _inertia_by_congruence(A)


def _inertia_by_congruence(A: IntMatrix) -> int:
    """Signature via symmetric (congruence) Gaussian elimination over Q."""
    n = A.rows
    m = [[Fraction(x) for x in row] for row in A.entries]
    sig = 0

    def clear(k):
        nonlocal sig
        d = m[k][k]
        sig += 1 if d > 0 else -1
        for i in range(k + 1, n):
            f = m[i][k] / d
            if f:
                for j in range(k, n):
                    m[i][j] -= f * m[k][j]
                for j in range(k, n):
                    m[j][i] -= f * m[j][k]

    k = 0
    while k < n:
        if m[k][k] != 0:
            clear(k)
            k += 1
            continue
        # Find a usable diagonal entry or create one symmetrically.
        pivot = next((i for i in range(k + 1, n) if m[i][i] != 0), None)
        if pivot is not None:
            m[k], m[pivot] = m[pivot], m[k]
            for row in m:
                row[k], row[pivot] = row[pivot], row[k]
            clear(k)
            k += 1
            continue
        off = next((i for i in range(k + 1, n) if m[k][i] != 0), None)
        if off is None:
            k += 1  # zero row and column: a zero eigenvalue, contributes nothing
            continue
        # m[k][k] = m[off][off] = 0 but m[k][off] != 0: adding row and column
        # `off` into k produces 2*m[k][off] on the diagonal.
        for j in range(n):
            m[k][j] += m[off][j]
        for i in range(n):
            m[i][k] += m[i][off]
        clear(k)
        k += 1
    return sig
