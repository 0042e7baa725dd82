from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from locgentle import Monomial, NonExpandable, Polynomial, RationalFunction, TruncatedSeries, parse_monomial, \
    parse_polynomial, series_expand

q, t = Polynomial.var("q"), Polynomial.var("t")
mq = Monomial.var("q")

small = st.builds(
    lambda num, dens: RationalFunction(num, dens),
    st.sampled_from([parse_polynomial(s) for s in ["1", "q", "1 + q", "2*t - q", "q*t + 1", "0"]]),
    st.lists(st.tuples(st.sampled_from([1, -1]), st.sampled_from([mq, Monomial.var("t"), parse_monomial("q^2*t")])),
             max_size=2),
)


def test_geometric_and_rendering():
    g = RationalFunction.geometric(parse_monomial("q^6*t^5"))
    assert str(g) == "1 / (1 - q^6*t^5)"
    assert str(RationalFunction(1, [(-1, mq)])) == "1 / (1 + q)"


def test_cancellation():
    r = RationalFunction(1 - q ** 2, [(1, mq)])
    assert r.is_polynomial()
    assert r.as_polynomial() == 1 + q


def test_cross_multiplied_equality():
    a = RationalFunction((1 + q ** 3) ** 2, [(1, parse_monomial("q^6"))])
    b = RationalFunction(1 + q ** 3, [(1, parse_monomial("q^3"))])
    assert a.equals(b)
    assert not a.equals(RationalFunction(1 + q ** 3, [(1, mq)]))


@given(small, small, small)
def test_field_axioms(a, b, c):
    assert (a + b).equals(b + a)
    assert ((a + b) + c).equals(a + (b + c))
    assert (a * (b + c)).equals(a * b + a * c)
    assert (a - a).is_zero()


@given(small, st.integers(2, 5))
def test_evaluate_matches_fraction_arithmetic(a, v):
    b = a * a + a
    x = a.evaluate({"q": v, "t": v + 1})
    assert b.evaluate({"q": v, "t": v + 1}) == x * x + x


def test_substitute_sign_change():
    r = RationalFunction(t, [(1, parse_monomial("q*t"))])
    s = r.substitute({"t": -t})
    assert s.equals(RationalFunction(-t, [(-1, parse_monomial("q*t"))]))


def test_substitute_rejects_non_monomial_image():
    r = RationalFunction(1, [(1, mq)])
    with pytest.raises(ValueError):
        r.substitute({"q": 1 + t})


def test_series_geometric():
    s = series_expand(RationalFunction.geometric(mq), None, 4)
    assert s.poly == parse_polynomial("1 + q + q^2 + q^3 + q^4")


def test_series_product_of_expansions():
    a = RationalFunction(1 + q, [(1, parse_monomial("q*t"))])
    b = RationalFunction(t, [(-1, parse_monomial("t^2"))])
    dw = {"q": 0, "t": 1}
    N = 7
    assert series_expand(a * b, dw, N) == series_expand(a, dw, N) * series_expand(b, dw, N)


def test_non_expandable():
    with pytest.raises(NonExpandable):
        series_expand(RationalFunction.geometric(mq), {"q": 0, "t": 1}, 5)


def test_truncated_series_mixing():
    a = TruncatedSeries(1 + q ** 4, 4)
    b = TruncatedSeries(q ** 3, 3)
    assert (a + b).bound == 3
    assert (a + b).poly == 1 + q ** 3
    with pytest.raises(ValueError):
        a + TruncatedSeries(1, 4, {"q": 2})


def test_evaluate_returns_fraction():
    r = RationalFunction(1, [(1, mq)])
    assert r.evaluate({"q": 3}) == Fraction(-1, 2)


def test_series_of_golden_entry():
    r = RationalFunction(parse_polynomial("q*t + q^4*t^3"), [(1, parse_monomial("q^6*t^5"))])
    assert series_expand(r, {"q": 0, "t": 1}, 4).poly == parse_polynomial("q*t + q^4*t^3")
    assert series_expand(RationalFunction(0), None, 3).poly.is_zero()


def test_equals_ignores_representation():
    a = RationalFunction(1 + q ** 3, [(1, parse_monomial("q^6"))])
    b = RationalFunction(1, [(1, parse_monomial("q^3"))])
    c = RationalFunction(1 + q, [(1, mq), (-1, mq)])
    assert a.equals(b) and b.equals(a)
    assert c.equals(RationalFunction(1, [(1, mq)]))
