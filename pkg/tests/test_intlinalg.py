import math
import random
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, strategies as st

from cgsig.intlinalg import (IntMatrix, chain_determinant,
                             chain_linking_matrix, cokernel_analysis,
                             evaluate_neg_continued_fraction,
                             neg_continued_fraction, plumbing_matrix_Q,
                             smith_normal_form, symmetric_signature)


class TestIntMatrix:
    def test_constructors(self):
        assert IntMatrix.identity(3).entries == [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
        assert IntMatrix.diagonal([4, 6]).entries == [[4, 0], [0, 6]]
        with pytest.raises(ValueError):
            IntMatrix([[1, 2], [3]])

    def test_product_and_transpose(self):
        a = IntMatrix([[1, 2], [3, 4]])
        b = IntMatrix([[0, 1], [1, 0]])
        assert (a @ b).entries == [[2, 1], [4, 3]]
        assert a.transpose().entries == [[1, 3], [2, 4]]

    def test_determinant(self):
        assert IntMatrix([[2, 1], [1, 1]]).determinant() == 1
        assert IntMatrix([[4, 2, 1], [2, 0, 0], [1, 0, 4225]]).determinant() == -16900
        assert IntMatrix.identity(4).determinant() == 1
        assert IntMatrix([[1, 2], [2, 4]]).determinant() == 0

    def test_determinant_matches_numpy_on_random(self):
        rng = random.Random(3)
        for _ in range(40):
            n = rng.randrange(1, 6)
            m = IntMatrix([[rng.randrange(-9, 10) for _ in range(n)]
                           for _ in range(n)])
            expected = round(np.linalg.det(np.array(m.entries, dtype=float)))
            assert m.determinant() == expected


def random_matrix(rng, rows, cols, bound):
    return IntMatrix([[rng.randrange(-bound, bound + 1) for _ in range(cols)]
                      for _ in range(rows)])


def assert_unimodular(m):
    assert abs(m.determinant()) == 1


class TestSmithNormalForm:
    def test_identity(self):
        snf = smith_normal_form(IntMatrix.identity(3))
        assert snf.D == IntMatrix.identity(3)
        assert snf.invariant_factors == ()
        assert snf.ones == 3

    def test_diag_4_6(self):
        snf = smith_normal_form(IntMatrix.diagonal([4, 6]))
        assert snf.invariant_factors == (2, 12)

    def test_plumbing_example(self):
        snf = smith_normal_form(IntMatrix([[4, 2, 1], [2, 0, 0], [1, 0, 4225]]))
        assert snf.invariant_factors == (16900,)
        assert snf.ones == 2

    def test_decomposition_random(self):
        rng = random.Random(42)
        for _ in range(200):
            rows, cols = rng.randrange(1, 7), rng.randrange(1, 7)
            a = random_matrix(rng, rows, cols, 30)
            snf = smith_normal_form(a)
            assert (snf.U @ a @ snf.V) == snf.D
            assert_unimodular(snf.U)
            assert_unimodular(snf.V)
            diag = [snf.D.entries[i][i] for i in range(min(rows, cols))]
            for x, y in zip(diag, diag[1:]):
                if x != 0:
                    assert y % x == 0
                else:
                    assert y == 0
            for i in range(rows):
                for j in range(cols):
                    if i != j:
                        assert snf.D.entries[i][j] == 0

    def test_decomposition_large_entries(self):
        rng = random.Random(1)
        for _ in range(10):
            a = random_matrix(rng, 8, 8, 10 ** 6)
            snf = smith_normal_form(a)
            assert (snf.U @ a @ snf.V) == snf.D
            assert_unimodular(snf.U)
            assert_unimodular(snf.V)


class TestCokernel:
    def test_examples(self):
        info = cokernel_analysis(IntMatrix.diagonal([2, 4]))
        assert (info.is_cyclic, info.min_generators, info.order) == (False, 2, 8)
        info = cokernel_analysis(IntMatrix([[49]]))
        assert (info.is_cyclic, info.min_generators, info.order) == (True, 1, 49)
        info = cokernel_analysis(plumbing_matrix_Q(2, [65]))
        assert (info.is_cyclic, info.min_generators, info.order) == (True, 1, 16900)

    def test_free_rank(self):
        info = cokernel_analysis(IntMatrix([[0, 0], [0, 0]]))
        assert info.order is None
        assert info.min_generators == 2
        info = cokernel_analysis(IntMatrix([[2, 0], [0, 0]]))
        assert info.order is None and info.min_generators == 2


class TestNegContinuedFraction:
    def test_examples(self):
        assert neg_continued_fraction(25, 4) == [7, 2, 2, 2]
        assert neg_continued_fraction(7, 1) == [7]
        assert neg_continued_fraction(7, 3) == [3, 2, 2]

    def test_rejects_bad_input(self):
        with pytest.raises(ValueError):
            neg_continued_fraction(4, 4)
        with pytest.raises(ValueError):
            neg_continued_fraction(6, 4)
        with pytest.raises(ValueError):
            neg_continued_fraction(3, 0)

    @given(st.integers(2, 2000), st.integers(1, 1999))
    def test_round_trip(self, p, q):
        if q >= p or math.gcd(p, q) != 1:
            return
        coeffs = neg_continued_fraction(p, q)
        assert all(a >= 2 for a in coeffs)
        assert evaluate_neg_continued_fraction(coeffs) == Fraction(p, q)

    def test_chain_determinant_identity_small(self):
        for p in range(2, 200):
            for q in range(1, p):
                if math.gcd(p, q) == 1:
                    assert chain_determinant(neg_continued_fraction(p, q)) == p

    def test_continuant_matches_dense_determinant(self):
        rng = random.Random(77)
        for _ in range(60):
            framings = [rng.randrange(-5, 9) for _ in
                        range(rng.randrange(1, 9))]
            assert chain_determinant(framings) == \
                chain_linking_matrix(framings).determinant()


class TestChainMatrix:
    def test_examples(self):
        m = chain_linking_matrix([7, 2, 2, 2])
        assert m.entries == [[7, 1, 0, 0], [1, 2, 1, 0], [0, 1, 2, 1],
                             [0, 0, 1, 2]]
        assert m.determinant() == 25
        assert chain_linking_matrix([9]).entries == [[9]]
        assert chain_linking_matrix([3, 2, 2]).determinant() == 7


class TestPlumbingMatrix:
    def test_displayed_example(self):
        assert plumbing_matrix_Q(2, [65]).entries == \
            [[4, 2, 1], [2, 0, 0], [1, 0, 4225]]

    def test_two_pieces(self):
        q = plumbing_matrix_Q(1, [3, 5])
        assert q.rows == 4
        assert abs(q.determinant()) == 900  # (2*3*5)^2

    def test_determinant_identity_random(self):
        rng = random.Random(9)
        for _ in range(30):
            v = rng.randrange(1, 5)
            n = [rng.randrange(2, 20) for _ in range(v)]
            a = rng.randrange(-6, 7)
            det = plumbing_matrix_Q(a, n).determinant()
            assert abs(det) == (2 * math.prod(n)) ** 2

    def test_cyclic_homology_criterion(self):
        # Pairwise-coprime odd n_j and a of opposite parity to v give a
        # cyclic cokernel of order (2 * prod n_j)^2.
        rng = random.Random(17)
        tried = 0
        while tried < 25:
            v = rng.randrange(1, 5)
            pool = [n for n in range(3, 50, 2)]
            rng.shuffle(pool)
            n = []
            for candidate in pool:
                if all(math.gcd(candidate, x) == 1 for x in n):
                    n.append(candidate)
                if len(n) == v:
                    break
            a = rng.randrange(-5, 6)
            if (a - v) % 2 == 0:
                a += 1
            info = cokernel_analysis(plumbing_matrix_Q(a, n))
            assert info.is_cyclic, (a, n)
            assert info.order == (2 * math.prod(n)) ** 2
            tried += 1


class TestSymmetricSignature:
    def test_definite_chains(self):
        for framings in ([2], [7, 2, 2, 2], [3, 2, 2]):
            assert symmetric_signature(chain_linking_matrix(framings)) == \
                len(framings)

    def test_known_values(self):
        assert symmetric_signature(IntMatrix([[-4, 2], [2, -4]])) == -2
        assert symmetric_signature(IntMatrix([[0, 1], [1, 0]])) == 0
        assert symmetric_signature(IntMatrix([[1, 0], [0, -1]])) == 0
        assert symmetric_signature(IntMatrix([[2, 3], [3, 2]])) == 0

    def test_zero_minor_fallback(self):
        # Leading minor vanishes; the congruence fallback must handle it.
        assert symmetric_signature(IntMatrix([[0, 2], [2, 0]])) == 0
        assert symmetric_signature(IntMatrix([[0, 0, 1], [0, 2, 0],
                                              [1, 0, 0]])) == 1

    def test_against_numpy_random(self):
        rng = random.Random(23)
        for _ in range(120):
            n = rng.randrange(1, 7)
            m = [[0] * n for _ in range(n)]
            for i in range(n):
                for j in range(i, n):
                    m[i][j] = m[j][i] = rng.randrange(-5, 6)
            mat = IntMatrix(m)
            evals = np.linalg.eigvalsh(np.array(m, dtype=float))
            expected = int((evals > 1e-9).sum() - (evals < -1e-9).sum())
            assert symmetric_signature(mat) == expected, m

    def test_rejects_asymmetric(self):
        with pytest.raises(ValueError):
            symmetric_signature(IntMatrix([[1, 2], [3, 4]]))
