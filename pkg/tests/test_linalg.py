from itertools import combinations, permutations
from math import gcd

import pytest
from hypothesis import given, settings, strategies as st

from locgentle import Monomial, Polynomial, RationalFunction, determinant, parse_polynomial, smith_invariants
from locgentle.linalg import bareiss_det

entries = st.sampled_from([parse_polynomial(s) for s in
                           ["0", "1", "-1", "q", "t", "1 + q", "2*q*t - 1", "q^2", "x_a - t", "3"]])


def cofactor_det(m):
    """Leibniz expansion; independent of the elimination code."""
    n = len(m)
    total = Polynomial()
    for perm in permutations(range(n)):
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = Polynomial.coerce(-1 if inv % 2 else 1)
        for i, j in enumerate(perm):
            term = term * m[i][j]
        total = total + term
    return total


@st.composite
def square(draw, max_n=4):
    n = draw(st.integers(1, max_n))
    return [[draw(entries) for _ in range(n)] for _ in range(n)]


@settings(max_examples=60, deadline=None)
@given(square())
def test_bareiss_matches_leibniz(m):
    assert bareiss_det(m) == cofactor_det(m)


def test_bareiss_needs_pivoting():
    m = [[Polynomial(), Polynomial.coerce(1)], [Polynomial.coerce(1), Polynomial()]]
    assert bareiss_det(m) == Polynomial.coerce(-1)


def test_rational_determinant():
    g = RationalFunction.geometric(Monomial.var("q"))
    one = RationalFunction(1)
    det = determinant([[g, one], [one, g]])
    # 1/(1-q)^2 - 1 = (2q - q^2)/(1-q)^2
    assert det.equals(RationalFunction(parse_polynomial("2*q - q^2"), [(1, Monomial.var("q"))] * 2))


def determinantal_divisor_invariants(m):
    """d_k = gcd of k-minors; invariants are d_k / d_{k-1}."""
    n, cols = len(m), len(m[0])
    out, prev = [], 1
    for k in range(1, min(n, cols) + 1):
        g = 0
        for rs in combinations(range(n), k):
            for cs in combinations(range(cols), k):
                sub = [[Polynomial.coerce(m[r][c]) for c in cs] for r in rs]
                g = gcd(g, cofactor_det(sub).constant_term())
        if g == 0:
            out += [0] * (min(n, cols) - k + 1)
            break
        out.append(g // prev)
        prev = g
    return out


@settings(max_examples=80, deadline=None)
@given(st.integers(1, 4).flatmap(lambda n: st.integers(1, 4).flatmap(
    lambda c: st.lists(st.lists(st.integers(-6, 6), min_size=c, max_size=c), min_size=n, max_size=n))))
def test_smith_matches_determinantal_divisors(m):
    assert smith_invariants(m) == determinantal_divisor_invariants(m)


def test_smith_known_values():
    assert smith_invariants([[2, 4, 4], [-6, 6, 12], [10, -4, -16]]) == [2, 6, 12]
    assert smith_invariants([[0, 0], [0, 0]]) == [0, 0]
