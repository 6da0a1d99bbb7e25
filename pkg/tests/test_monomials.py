import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from edgepowers import monomials as mo
from edgepowers.monomials import MonomialIdeal

N = 4


def mono(n=N, top=3):
    return st.tuples(*[st.integers(0, top)] * n)


def ideals(n=N, top=3, max_size=5):
    return st.lists(mono(n, top), min_size=0, max_size=max_size).map(
        lambda gs: mo.minimalize(gs, n) if gs else mo.zero_ideal(n))


def brute_contains(I, u):
    return any(all(a <= b for a, b in zip(g, u)) for g in I.gens)


def all_monomials(n, dmax):
    return [u for d in range(dmax + 1) for u in mo.monomials_of_degree(n, d)]


def test_colon_mono():
    assert mo.colon_mono((2, 1, 0), (1, 0, 1)) == (1, 1, 0)
    assert mo.colon_mono((1, 2, 3), (1, 2, 3)) == (0, 0, 0)
    assert mo.colon_mono((0, 1, 1), (1, 1, 0)) == (0, 0, 1)


def test_basic_operations():
    x1, x2 = MonomialIdeal(2, ((1, 0),)), MonomialIdeal(2, ((0, 1),))
    assert mo.intersect(x1, x2).gens == ((1, 1),)
    K3 = mo.minimalize([(1, 1, 0), (0, 1, 1), (1, 0, 1)])
    assert mo.gen_degree_set(mo.power(K3, 2)) == {4}
    I = mo.minimalize([(1, 0, 0), (0, 1, 1)])
    assert mo.graded_component(I, 2).gens == ((2, 0, 0), (1, 1, 0), (1, 0, 1), (0, 1, 1))
    assert mo.graded_component(I, 0).is_zero
    J = MonomialIdeal(2, ((1, 1),))
    assert mo.alpha(J) == mo.max_gen_degree(J) == 2 and mo.gen_degree_set(J) == {2}


def test_power_of_triangle_by_expansion():
    K3 = mo.minimalize([(1, 1, 0), (0, 1, 1), (1, 0, 1)])
    expanded = {mo.mul(a, b) for a, b in itertools.product(K3.gens, repeat=2)}
    assert set(mo.power(K3, 2).gens) == expanded


def test_zero_ideal_handling():
    Z = mo.zero_ideal(3)
    with pytest.raises(mo.ZeroIdealError):
        mo.alpha(Z)
    assert mo.ideal_sum(Z, Z).is_zero
    assert mo.product(Z, mo.unit_ideal(3)).is_zero
    assert mo.intersect(Z, mo.unit_ideal(3)).is_zero
    assert mo.graded_component(Z, 3).is_zero


def test_ambient_mismatch():
    with pytest.raises(mo.AmbientMismatch):
        mo.ideal_sum(mo.unit_ideal(2), mo.unit_ideal(3))
    with pytest.raises(mo.AmbientMismatch):
        mo.contains(mo.unit_ideal(2), (1, 1, 1))
    with pytest.raises(mo.AmbientMismatch):
        mo.minimalize([(1, 0), (1, 0, 0)])


def test_overflow_is_an_error():
    with pytest.raises(OverflowError):
        mo.minimalize([(mo.MAX_EXPONENT + 1, 0)])
    big = mo.minimalize([(mo.MAX_EXPONENT, 0)])
    with pytest.raises(OverflowError):
        mo.product(big, big)


@settings(max_examples=150, deadline=None)
@given(ideals())
def test_minimalize_idempotent_and_antichain(I):
    assert mo.minimalize(I.gens, N).gens == I.gens
    for a, b in itertools.permutations(I.gens, 2):
        assert not mo.divides(a, b)
    assert list(I.gens) == sorted(I.gens, key=mo.grlex_key)


@settings(max_examples=120, deadline=None)
@given(ideals(), ideals(), st.lists(mono(top=5), max_size=8))
def test_membership_consistency(I, J, us):
    S, P, X = mo.ideal_sum(I, J), mo.product(I, J), mo.intersect(I, J)
    for u in us:
        assert mo.contains(I, u) == brute_contains(I, u)
        assert mo.contains(X, u) == (mo.contains(I, u) and mo.contains(J, u))
        assert mo.contains(S, u) == (mo.contains(I, u) or mo.contains(J, u))
    for a, b in itertools.product(I.gens, J.gens):
        assert mo.contains(P, mo.mul(a, b))


@settings(max_examples=60, deadline=None)
@given(ideals(3, 2, 4), ideals(3, 2, 4), ideals(3, 2, 4))
def test_intersection_laws(I, J, K):
    assert mo.equals(mo.intersect(I, J), mo.intersect(J, I))
    assert mo.equals(mo.intersect(mo.intersect(I, J), K), mo.intersect(I, mo.intersect(J, K)))


@settings(max_examples=60, deadline=None)
@given(ideals(3, 2, 3), st.integers(1, 3))
def test_power_recursion(I, k):
    assert mo.equals(mo.power(I, k), mo.product(mo.power(I, k - 1), I))


@settings(max_examples=80, deadline=None)
@given(ideals(3, 3, 4), st.integers(0, 5))
def test_graded_component(I, d):
    C = mo.graded_component(I, d)
    brute = [u for u in mo.monomials_of_degree(3, d) if brute_contains(I, u)]
    assert set(C.gens) == set(brute)
    assert all(mo.degree(g) == d for g in C.gens)
    if not I.is_zero and d >= mo.max_gen_degree(I):
        assert mo.equals(mo.graded_component(C, d + 1), mo.graded_component(I, d + 1))


@settings(max_examples=80, deadline=None)
@given(ideals(3, 3, 4), mono(3, 3))
def test_colon_ideal(I, v):
    Q = mo.colon_ideal(I, v)
    for u in all_monomials(3, 4):
        assert mo.contains(Q, u) == mo.contains(I, mo.mul(u, v))


def test_monomial_array_matches_list():
    for n, d in [(1, 3), (3, 0), (3, 4), (5, 2)]:
        assert [tuple(r) for r in mo.monomial_array(n, d).tolist()] == mo.monomials_of_degree(n, d)


def test_relabel_round_trip():
    perm = (3, 1, 2)
    u = (5, 6, 7)
    assert mo.relabel(u, perm) == (7, 5, 6)
    assert mo.unrelabel(mo.relabel(u, perm), perm) == u


@settings(max_examples=60, deadline=None)
@given(ideals())
def test_text_and_json_round_trip(I):
    assert mo.equals(mo.parse_ideal(mo.format_ideal(I)), I)
    assert mo.equals(mo.ideal_from_json(mo.ideal_to_json(I)), I)


def test_text_format_details():
    I = mo.parse_ideal("n=3\nx1^2 x2\nx3\n")
    assert I.gens == ((0, 0, 1), (2, 1, 0))
    assert mo.parse_ideal("n=2\n0\n").is_zero
    for bad in ["x1\n", "n=2\n", "n=2\nx3\n", "n=2\ny1\n"]:
        with pytest.raises(ValueError):
            mo.parse_ideal(bad)
