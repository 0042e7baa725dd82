import pytest

from locgentle import Quiver, dual, euler_characteristic_check, gldim_finite, minimal_cycles, resolution, validate
from locgentle.koszul import UnknownVertex


def test_loop_resolution_is_periodic():
    lp = validate(Quiver.build([1], [("e", 1, 1)], [("e", "e")]))
    res = resolution(lp, "1", 5)
    assert not res.finite
    assert [res.vertices(d) for d in range(5)] == [["1"]] * 5
    assert not gldim_finite(lp)


def test_free_loop_is_finite():
    lp = validate(Quiver.build([1], [("e", 1, 1)]))
    res = resolution(lp, "1", 5)
    assert res.finite and len(res) == 2
    assert res.terms[1] == (("1", -1),)
    assert gldim_finite(lp)


def test_chain_without_relations():
    q = validate(Quiver.build([1, 2], [("a", 1, 2)]))
    assert resolution(q, "1", 4).terms == ((("1", 0),), (("2", -1),))
    assert resolution(q, "2", 4).terms == ((("2", 0),),)


def test_dual_of_reduced_triangle_is_infinite(reduced_triangle):
    lgq, _ = reduced_triangle
    d = dual(lgq)
    for v in d.vertices:
        assert not resolution(d, v, 12).finite
    assert gldim_finite(lgq) and not gldim_finite(d)


def test_unknown_vertex(reduced_triangle):
    with pytest.raises(UnknownVertex):
        resolution(reduced_triangle[0], "9", 3)


def test_gldim_matches_resolutions(generated):
    for lgq in generated:
        every = all(resolution(lgq, v, 3 * len(lgq.arrows) + 2).finite for v in lgq.vertices)
        assert gldim_finite(lgq) == every == (minimal_cycles(lgq)[0] == [])


def test_euler_characteristic(generated, reduced_triangle):
    assert euler_characteristic_check(reduced_triangle[0], 10)
    for lgq in generated[:20]:
        assert euler_characteristic_check(lgq, 10)
