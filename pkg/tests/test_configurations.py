import pytest

from locgentle import (
    SecantConfiguration,
    count_closed,
    count_closed_up_to_dihedral,
    critical_quiver_from,
    det_elimination,
    enumerate_Pn,
    enumerate_Pn_prime,
    hz_a_n1,
    hz_polynomial_check,
    is_closed,
    is_critical,
    minimal_cycles,
)
from locgentle.configurations import NotClosed, double_factorial, hz_coefficients, product_with_rotation


@pytest.mark.parametrize("n", range(1, 6))
def test_involution_count(n):
    assert len(enumerate_Pn(n)) == double_factorial(2 * n - 1)


def test_rejects_bad_pairings():
    with pytest.raises(ValueError):
        SecantConfiguration(2, (2, 1, 3, 4))
    with pytest.raises(ValueError):
        SecantConfiguration(2, (2, 3, 1, 4))


def test_composition_convention():
    c = SecantConfiguration.from_pairs(2, [(1, 3), (2, 4)])
    # gamma first: 1 -> 2, then mu: 2 -> 4
    assert product_with_rotation(c)[0] == 4
    assert is_closed(c)


@pytest.mark.parametrize("n, expected", [(1, 0), (2, 1), (3, 0), (4, 21), (5, 0)])
def test_closed_counts(n, expected):
    assert hz_a_n1(n) == expected
    assert count_closed(n) == expected


def test_odd_has_no_closed():
    for n in (1, 3, 5):
        assert not any(is_closed(c) for c in enumerate_Pn_prime(n))


def test_small_coefficients():
    assert hz_coefficients(2) == {1: 1, 3: 2}


@pytest.mark.parametrize("n", range(1, 6))
def test_hz_polynomial(n):
    assert hz_polynomial_check(n)


def test_dihedral_invariance():
    for n in (2, 4):
        closed = [c for c in enumerate_Pn_prime(n) if is_closed(c)]
        m = 2 * n
        for c in closed:
            rot = SecantConfiguration.from_pairs(n, [(i % m + 1, j % m + 1) for i, j in c.pairs()])
            ref = SecantConfiguration.from_pairs(n, [((-i) % m + 1, (-j) % m + 1) for i, j in c.pairs()])
            assert is_closed(rot) and is_closed(ref)
        orbits = count_closed_up_to_dihedral(n)
        assert orbits <= len(closed) <= 4 * n * orbits
    assert count_closed_up_to_dihedral(2) == 1
    assert count_closed_up_to_dihedral(3) == 0


@pytest.mark.parametrize("n", [2, 4])
def test_critical_quivers(n):
    for c in enumerate_Pn_prime(n):
        if not is_closed(c):
            continue
        lgq, w = critical_quiver_from(c)
        assert is_critical(lgq)
        assert len(lgq.vertices) % 2 == 0
        zc, ic = minimal_cycles(lgq, w)
        assert zc[0].weight == ic[0].weight and zc[0].length == 2 * n
        assert det_elimination(lgq, w).equals(1)


def test_open_configuration_rejected():
    c = next(c for c in enumerate_Pn_prime(4) if not is_closed(c))
    with pytest.raises(NotClosed):
        critical_quiver_from(c)


def test_single_chord_coefficients():
    assert hz_coefficients(1) == {2: 1}
    assert enumerate_Pn_prime(1) == []
    assert [str(c) for c in enumerate_Pn_prime(2)] == ["(1 3)(2 4)"]


def _isomorphic(a, b):
    from itertools import permutations
    if len(a.vertices) != len(b.vertices) or len(a.arrows) != len(b.arrows):
        return False
    for vp in permutations(b.vertices):
        vmap = dict(zip(a.vertices, vp))
        for ap in permutations([x.id for x in b.arrows]):
            amap = dict(zip([x.id for x in a.arrows], ap))
            if all(vmap[x.source] == b.source(amap[x.id]) and vmap[x.target] == b.target(amap[x.id])
                   for x in a.arrows) and {(amap[x], amap[y]) for x, y in a.relations} == set(b.relations):
                return True
    return False


def test_two_chord_quiver_matches_example(quiver_dir):
    from conftest import load
    c = SecantConfiguration.from_pairs(2, [(1, 3), (2, 4)])
    built, _ = critical_quiver_from(c)
    example, _ = load("critical2.quiver")
    assert _isomorphic(built, example)
