import pytest
from hypothesis import given, strategies as st

from cgsig.angles import RationalAngle, normalize, order, power


def test_normalize_reduces():
    assert normalize(2, 20) == RationalAngle(1, 10)
    assert normalize(0, 7) == RationalAngle(0, 1)
    assert normalize(-3, 10) == RationalAngle(7, 10)


def test_zero_denominator_rejected():
    with pytest.raises(ValueError):
        RationalAngle(1, 0)
    with pytest.raises(ValueError):
        RationalAngle(1, -5)


def test_power():
    assert power(RationalAngle(1, 20), 2) == RationalAngle(1, 10)
    assert power(RationalAngle(1, 10), 10).is_trivial
    assert power(RationalAngle(3, 10), -1) == RationalAngle(7, 10)


def test_order():
    assert order(RationalAngle(1, 10)) == 10
    assert order(RationalAngle(0, 1)) == 1
    assert order(RationalAngle(2, 10)) == 5


def test_parse():
    assert RationalAngle.parse("1/10") == RationalAngle(1, 10)
    assert RationalAngle.parse(" 4/20 ") == RationalAngle(1, 5)
    assert str(RationalAngle.parse("-3/10")) == "7/10"
    with pytest.raises(ValueError):
        RationalAngle.parse("1")
    with pytest.raises(ValueError):
        RationalAngle.parse("a/b")


angles = st.builds(RationalAngle,
                   st.integers(min_value=-10 ** 6, max_value=10 ** 6),
                   st.integers(min_value=1, max_value=10 ** 6))


@given(angles)
def test_normalize_idempotent(theta):
    assert RationalAngle(theta.num, theta.den) == theta
    assert 0 <= theta.num < theta.den or (theta.num, theta.den) == (0, 1)


@given(angles, st.integers(-50, 50), st.integers(-50, 50))
def test_power_composes(theta, j, k):
    assert theta.power(j).power(k) == theta.power(j * k)


@given(angles)
def test_power_by_order_is_trivial(theta):
    assert theta.power(theta.order).is_trivial


@given(angles)
def test_conjugate_preserves_order(theta):
    assert theta.conjugate().order == theta.order
