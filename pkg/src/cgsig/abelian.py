"""Finite abelian groups, subgroup enumeration and character enumeration.

A group is a product of cyclic factors Z/d_1 x ... x Z/d_r (not necessarily in
invariant-factor form).  Subgroups correspond to integer lattices L with
diag(d) Z^r <= L <= Z^r; we enumerate the lattices of a given index by their
(unique) upper-triangular Hermite normal bases, which also makes
deduplication syntactic.  A slow closure-based enumeration is kept alongside
as an independent cross-check for small orders.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

from .angles import RationalAngle

#: Largest group order the library will work with.
ORDER_CAP = 10 ** 7
#: Largest order for which dense character enumeration is attempted.
ENUMERATION_CAP = 10 ** 6
MAX_FACTORS = 4


@dataclass(frozen=True)
class FiniteAbelianGroup:
    """Direct sum of cyclic groups Z/d_i, d_i >= 2."""

    factors: tuple

    def __post_init__(self):
        factors = tuple(int(d) for d in self.factors)
        if not factors or any(d < 2 for d in factors):
            raise ValueError("factors must all be >= 2")
        if len(factors) > MAX_FACTORS:
            raise ValueError(f"at most {MAX_FACTORS} cyclic factors supported")
        object.__setattr__(self, "factors", factors)
        if self.order > ORDER_CAP:
            raise ValueError(f"group order {self.order} exceeds cap {ORDER_CAP}")

    @property
    def rank(self) -> int:
        return len(self.factors)

    @property
    def order(self) -> int:
        return math.prod(self.factors)


@dataclass(frozen=True)
class Subgroup:
    """A subgroup, stored by the HNF basis of its preimage lattice in Z^r."""

    group: FiniteAbelianGroup
    hnf: tuple  # rows of the upper-triangular lattice basis
    order: int

    @property
    def generators(self) -> tuple:
        d = self.group.factors
        gens = []
        for row in self.hnf:
            g = tuple(x % di for x, di in zip(row, d))
            if any(g):
                gens.append(g)
        return tuple(gens)

    def index(self) -> int:
        return self.group.order // self.order

    def elements(self) -> frozenset:
        """All elements; intended for small groups (tests, verification)."""
        d = self.group.factors
        seen = {tuple([0] * len(d))}
        frontier = list(seen)
        gens = self.generators
        while frontier:
            cur = frontier.pop()
            for g in gens:
                nxt = tuple((c + x) % di for c, x, di in zip(cur, g, d))
                if nxt not in seen:
                    seen.add(nxt)
                    frontier.append(nxt)
        return frozenset(seen)


@dataclass(frozen=True)
class CharacterSpec:
    """A character of the group, given by one exact angle per cyclic factor:
    the generator of the i-th factor maps to exp(2*pi*i*values[i])."""

    values: tuple  # of RationalAngle

    @property
    def is_trivial(self) -> bool:
        return all(v.is_trivial for v in self.values)

    def order(self) -> int:
        return math.lcm(*(v.den for v in self.values))


def _hnf_rows(rows, ncols):
    """Hermite normal form (upper-triangular, row-style) of the lattice
    spanned by the given integer rows; returns a tuple of ncols rows."""
    mat = [list(r) for r in rows if any(r)]
    basis = []
    for col in range(ncols):
        nonzero = [r for r in mat if r[col] != 0]
        rest = [r for r in mat if r[col] == 0]
        # Reduce the column to a single gcd row; rows that lose their entry
        # in this column keep carrying information for later columns.
        while len(nonzero) > 1:
            nonzero.sort(key=lambda r: abs(r[col]))
            pivot = nonzero[0]
            keep = [pivot]
            for r in nonzero[1:]:
                f = r[col] // pivot[col]
                for j in range(col, ncols):
                    r[j] -= f * pivot[j]
                if r[col] != 0:
                    keep.append(r)
                elif any(r):
                    rest.append(r)
            nonzero = keep
        if nonzero:
            pivot = nonzero[0]
            if pivot[col] < 0:
                pivot = [-x for x in pivot]
            basis.append(pivot)
        else:
            basis.append(None)
        mat = rest
    # Replace missing pivots by zero rows (full-rank inputs never hit this).
    out = [row if row is not None else [0] * ncols for row in basis]
    # Reduce entries above each pivot.
    for j in range(ncols):
        pj = out[j][j]
        if pj == 0:
            continue
        for i in range(j):
            f = out[i][j] // pj
            if f:
                for k in range(j, ncols):
                    out[i][k] -= f * out[j][k]
    return tuple(tuple(r) for r in out)


def _lattice_contains(hnf, vector) -> bool:
    """Whether the row-lattice with upper-triangular basis hnf contains the
    integer vector."""
    r = len(vector)
    v = list(vector)
    for i in range(r):
        if v[i] == 0:
            continue
        if hnf[i][i] == 0 or v[i] % hnf[i][i] != 0:
            return False
        c = v[i] // hnf[i][i]
        for j in range(i, r):
            v[j] -= c * hnf[i][j]
    return all(x == 0 for x in v)


def _divisors(n: int) -> list:
    out = []
    for d in range(1, math.isqrt(n) + 1):
        if n % d == 0:
            out.append(d)
            if d * d != n:
                out.append(n // d)
    return sorted(out)


def enumerate_subgroups_of_index(G: FiniteAbelianGroup, k: int):
    """All subgroups of index k, each exactly once, as :class:`Subgroup`."""
    if k <= 0 or G.order % k != 0:
        raise ValueError(f"index {k} does not divide the group order {G.order}")
    r = G.rank
    d = G.factors
    out = []
    div_lists = [[h for h in _divisors(di)] for di in d]
    for diag in itertools.product(*div_lists):
        if math.prod(diag) != k:
            continue
        # Off-diagonal entries: h[i][j] in [0, diag[j]) for i < j, filtered by
        # the containment condition d_i * e_i in L.
        positions = [(i, j) for i in range(r) for j in range(i + 1, r)]
        ranges = [range(diag[j]) for (_, j) in positions]
        for offs in itertools.product(*ranges):
            rows = [[0] * r for _ in range(r)]
            for i in range(r):
                rows[i][i] = diag[i]
            for (i, j), v in zip(positions, offs):
                rows[i][j] = v
            hnf = tuple(tuple(row) for row in rows)
            if all(_lattice_contains(hnf, [d[i] if t == i else 0 for t in range(r)])
                   for i in range(r)):
                out.append(Subgroup(group=G, hnf=hnf, order=G.order // k))
    return out


def enumerate_subgroups_bruteforce(G: FiniteAbelianGroup):
    """Every subgroup of G, found by closing generator sets one element at a
    time; independent of the HNF enumeration.  Meant for order <= 10^4."""
    if G.order > 10 ** 4:
        raise ValueError("brute-force enumeration is capped at order 10^4")
    r = G.rank
    d = G.factors
    diag_rows = [[d[i] if j == i else 0 for j in range(r)] for i in range(r)]
    elements = list(itertools.product(*(range(di) for di in d)))

    def canonical(gen_rows):
        return _hnf_rows([list(g) for g in gen_rows] + diag_rows, r)

    trivial = canonical([])
    seen = {trivial}
    frontier = [trivial]
    while frontier:
        hnf = frontier.pop()
        for g in elements:
            new = canonical(list(hnf) + [list(g)])
            if new not in seen:
                seen.add(new)
                frontier.append(new)
    subs = []
    for hnf in seen:
        det = math.prod(hnf[i][i] for i in range(r))
        subs.append(Subgroup(group=G, hnf=hnf, order=G.order // det))
    return subs


def characters_vanishing_on(G: FiniteAbelianGroup, H: Subgroup):
    """All nontrivial characters of G that vanish on H (the characters of
    G/H pulled back); there are exactly |G|/|H| - 1 of them."""
    if H.group != G:
        raise ValueError("subgroup does not belong to this group")
    if G.order > ENUMERATION_CAP:
        raise ValueError("character enumeration capped at order 10^6")
    d = G.factors
    L = math.lcm(*d)
    weights = [L // di for di in d]
    gens = H.generators
    out = []
    for c in itertools.product(*(range(di) for di in d)):
        if not any(c):
            continue
        if all(sum(ci * gi * w for ci, gi, w in zip(c, g, weights)) % L == 0
               for g in gens):
            out.append(CharacterSpec(values=tuple(
                RationalAngle(ci, di) for ci, di in zip(c, d))))
    expected = G.order // H.order - 1
    assert len(out) == expected, f"character count {len(out)} != {expected}"
    return out
