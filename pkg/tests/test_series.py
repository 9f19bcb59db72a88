from fractions import Fraction

import pytest

from cutshuffle.series import SeriesRing, binomial_coefficient


def test_geometric_inverse():
    R = SeriesRing(["x"], max_degree=3)
    x = R.var("x")
    assert repr((1 - x).inverse()) == "1 + x + x^2 + x^3"


def test_rational_power_matches_binomial_series():
    R = SeriesRing(["x"], max_degree=4)
    s = (1 + R.var("x")).power(Fraction(1, 2))
    assert [s.coeff(x=i) for i in range(5)] == [binomial_coefficient(Fraction(1, 2), i) for i in range(5)]
    assert s * s == 1 + R.var("x")


def test_negative_integer_power_is_inverse():
    R = SeriesRing(["x", "y"], max_degree=5)
    f = 1 - R.var("x") - R.var("y") ** 2
    assert f.power(-3) * f ** 3 == R.one()


def test_weights_and_caps_truncate():
    R = SeriesRing(["a1", "a2"], weights={"a2": 2}, max_degree=4, caps={"a1": 2})
    s = (1 - R.var("a1")).inverse() * (1 - R.var("a2")).inverse()
    assert s.coeff(a1=2, a2=1) == 1
    assert s.coeff(a1=3) == 0
    assert s.coeff(a2=3) == 0


def test_substitute_and_scale():
    R = SeriesRing(["x", "u"], weights={"u": 0}, max_degree=3)
    s = (1 - R.var("u") * R.var("x")).inverse()
    assert s.substitute("u", 1) == (1 - R.var("x")).inverse()
    assert s.scale_variables({"x": 2}).coeff(x=2, u=2) == 4


def test_power_needs_unit_constant():
    R = SeriesRing(["x"], max_degree=3)
    with pytest.raises((ValueError, ZeroDivisionError)):
        R.var("x").power(Fraction(1, 2))


def test_mismatched_rings_rejected():
    a, b = SeriesRing(["x"], max_degree=2), SeriesRing(["x"], max_degree=2)
    with pytest.raises(ValueError):
        a.var("x") + b.var("x")
