import math

import pytest

from cgsig.casson_gordon import CgValue
from cgsig.intlinalg import IntMatrix
from cgsig.knots import Torus, Unknot, parse
from cgsig.obstructions import (VERDICT_OBSTRUCTED, VERDICT_PASS,
                                character_extends, family_lower_bound,
                                fib_family, fibonacci, fusion_bound_minmax,
                                fusion_bound_via_surgery,
                                generator_one_handle_bound,
                                lens_surgery_parameter, odd_handle_lower_bound,
                                one_handle_obstruction_integer,
                                one_handle_obstruction_rational)


class TestIntegerSweep:
    def test_obstructed_example(self):
        report = one_handle_obstruction_integer(parse("T(4,25)"), 10)
        assert report.verdict == VERDICT_OBSTRUCTED and report.obstructed
        witnesses = dict(report.witnesses)
        assert witnesses[1] == 2 and witnesses[3] == 2
        assert not report.skipped

    def test_unknot_passes(self):
        report = one_handle_obstruction_integer(Unknot(), 2)
        assert report.verdict == VERDICT_PASS
        assert report.witnesses == ()

    def test_family_knot_obstructed(self):
        report = one_handle_obstruction_integer(parse("T(25,169)"), 65)
        assert report.obstructed
        assert (1, 2) in report.witnesses

    def test_witness_pair_symmetry(self):
        for knot, m in [(parse("T(4,25)"), 10), (parse("T(2,3)"), 5),
                        (parse("T(3,5)"), 6)]:
            report = one_handle_obstruction_integer(knot, m)
            witnesses = dict(report.witnesses)
            for a, value in witnesses.items():
                assert witnesses.get(m - a) == value

    def test_obstructed_iff_witnesses(self):
        for knot, m in [(Unknot(), 2), (parse("T(4,25)"), 10)]:
            report = one_handle_obstruction_integer(knot, m)
            assert report.obstructed == bool(report.witnesses)

    def test_witnesses_recheck_by_single_evaluation(self):
        from cgsig.casson_gordon import cg_integer_surgery
        knot, m = parse("T(4,25)"), 10
        report = one_handle_obstruction_integer(knot, m)
        for a, value in report.witnesses:
            assert cg_integer_surgery(knot, m, a).value == value
            assert abs(value) > 1


class TestRationalSweep:
    def test_lens_25_21_passes(self):
        report = one_handle_obstruction_rational(Unknot(), 5, 4)
        assert report.verdict == VERDICT_PASS
        assert report.witnesses == () and report.skipped == ()

    def test_q_one_matches_integer(self):
        a = one_handle_obstruction_rational(parse("T(4,25)"), 10, 1)
        b = one_handle_obstruction_integer(parse("T(4,25)"), 10)
        assert a.verdict == b.verdict and a.witnesses == b.witnesses

    def test_lens_9_obstructed(self):
        report = one_handle_obstruction_rational(Unknot(), 3, 1)
        assert report.obstructed
        assert (1, 3) in report.witnesses

    def test_partial_pass_when_characters_skipped(self):
        # L(4,3): the only order-2 character induces a zero colour, so the
        # sweep evaluates nothing and must say so.
        report = one_handle_obstruction_rational(Unknot(), 2, 3)
        assert report.verdict == "pass (partial)"
        assert report.witnesses == ()
        assert len(report.skipped) == 1 and report.skipped[0][0] == 1


class TestScalarBounds:
    def test_odd_handle_lower_bound(self):
        assert odd_handle_lower_bound(CgValue(2)) == 1
        assert odd_handle_lower_bound(CgValue(0)) == 0
        assert odd_handle_lower_bound(-7) == 6

    def test_character_extends(self):
        assert character_extends(100, 5)
        assert not character_extends(100, 4)
        with pytest.raises(ValueError, match="square"):
            character_extends(99, 3)

    def test_generator_bound(self):
        assert generator_one_handle_bound(IntMatrix.diagonal([2, 2])) == 1
        assert generator_one_handle_bound(IntMatrix.diagonal([2, 2, 2, 2])) == 2
        assert generator_one_handle_bound(IntMatrix([[49]])) == 1


class TestFusionBounds:
    def test_lens_conversion(self):
        assert lens_surgery_parameter(25, 6) == 19
        assert lens_surgery_parameter(4, 3) == 1
        assert lens_surgery_parameter(25, 21) == 4

    def test_prime_power_summand_gives_nothing(self):
        assert fusion_bound_minmax([(25, 6)]) == 0
        assert fusion_bound_minmax([(9, 4)]) == 0

    def test_two_summand_example(self):
        # The unique index-65 subgroup; the order-65 characters reach
        # |sigma| = 2, so the min-max bound is 2 - 1 = 1.
        assert fusion_bound_minmax([(25, 6), (169, 144)]) == 1

    def test_non_square_rejected(self):
        with pytest.raises(ValueError, match="square"):
            fusion_bound_minmax([(25, 6), (169, 144), (3, 1)])

    def test_monotone_under_zero_contribution_summands(self):
        # Adding a prime-power-cover summand (all values in [-1, 1]) cannot
        # push the bound above the sum of per-summand maxima minus one.
        base = fusion_bound_minmax([(25, 6)])
        combined = fusion_bound_minmax([(25, 6), (9, 4)])
        assert base == 0 and combined <= base + 1
        assert combined == 1

    def test_via_surgery(self):
        assert fusion_bound_via_surgery(parse("T(25,169)"), 65) == 2
        assert fusion_bound_via_surgery(parse("T(4,25)"), 10) == 2
        assert fusion_bound_via_surgery(Unknot(), 2) == 1


class TestFibonacci:
    def test_values(self):
        assert [fibonacci(n) for n in range(9)] == [0, 1, 1, 2, 3, 5, 8, 13, 21]

    def test_gcd_identity(self):
        assert math.gcd(fibonacci(10), fibonacci(15)) == fibonacci(5) == 5
        assert math.gcd(fibonacci(12), fibonacci(18)) == fibonacci(6)

    def test_family_indices(self):
        fam = fib_family(2)
        assert fam.p == (5, 209)
        assert fam.n[0] == 65
        assert fam.knots[0] == Torus(25, 169)

    def test_family_invariants(self):
        fam = fib_family(2)
        for n in fam.n:
            assert n % 2 == 1
        assert math.gcd(fam.n[0], fam.n[1]) == 1

    def test_family_cap(self):
        with pytest.raises(ValueError):
            fib_family(4)
        with pytest.raises(ValueError):
            fib_family(0)


class TestFamilyLowerBound:
    def test_v1(self):
        bound, cert = family_lower_bound(1)
        assert bound == 1
        assert [c.value for c in cert] == [2]

    def test_certificate_totals(self):
        for v in (1, 2):
            bound, cert = family_lower_bound(v)
            assert bound == 2 * v - 1
            assert sum(c.value for c in cert) == 2 * v
