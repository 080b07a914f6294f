from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from gmd.monomial_ideal import MonomialIdeal, component_ideal, intersect_all
from gmd.monomials import divides, monomials_of_degree


def M(*gens, s=None):
    s = s or len(gens[0])
    return MonomialIdeal(s, gens)


def test_minimalize():
    assert M((1, 0), (1, 1)).gens == ((1, 0),)
    assert set(M((3, 0, 0), (0, 1, 1)).gens) == {(3, 0, 0), (0, 1, 1)}
    with pytest.raises(ValueError):
        MonomialIdeal(2, [])


def test_colon():
    I = M((2, 0), (1, 1), (0, 2))
    assert I.colon((1, 0)) == M((1, 0), (0, 1))
    assert I.colon_ideal(M((1, 0), (0, 1))) == M((1, 0), (0, 1))


def test_decompositions():
    assert M((1, 1)).associated_primes == ((0,), (1,))
    comps = M((3, 0, 0), (0, 1, 1)).irreducible_components
    got = {frozenset(c.items()) for c in comps}
    assert got == {frozenset({0: 3, 1: 1}.items()), frozenset({0: 3, 2: 1}.items())}
    emb = M((2, 0), (1, 1))
    assert emb.associated_primes == ((0,), (0, 1))
    assert not emb.is_unmixed()
    assert M((1, 1)).is_unmixed()


def test_q_example_primes(q_example):
    Mq = q_example.initial_ideal()
    assert Mq.associated_primes == ((0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3))
    assert Mq.is_unmixed()
    assert q_example.unmixed().holds()


def test_standard_monomials():
    I = M((3, 0, 0), (0, 1, 1))
    assert sorted(I.standard_monomials(1)) == sorted(monomials_of_degree(3, 1))
    assert len(I.standard_monomials(3)) == 6
    assert MonomialIdeal.unit(3).standard_monomials(2) == []


# ------------------------------------------------------------------ properties

gens3 = st.lists(st.tuples(*[st.integers(0, 3)] * 3).filter(any), min_size=1, max_size=5)


def members(I, d):
    return {m for m in monomials_of_degree(I.s, d) if I.contains(m)}


@settings(max_examples=80, deadline=None)
@given(gens3)
def test_decomposition_reintersects(gens):
    I = MonomialIdeal(3, gens)
    comps = [component_ideal(3, c) for c in I.irreducible_components]
    assert intersect_all(comps) == I
    # irredundant
    for k in range(len(comps)):
        rest = comps[:k] + comps[k + 1:]
        if rest:
            assert intersect_all(rest) != I


@settings(max_examples=80, deadline=None)
@given(gens3)
def test_minimal_generators_form_antichain(gens):
    I = MonomialIdeal(3, gens)
    for a in I.gens:
        for b in I.gens:
            assert a == b or not divides(a, b)
    for g in gens:
        assert I.contains(g)


@settings(max_examples=60, deadline=None)
@given(gens3, st.tuples(*[st.integers(0, 2)] * 3))
def test_colon_definition(gens, m):
    I = MonomialIdeal(3, gens)
    J = I.colon(m)
    for d in range(5):
        for u in monomials_of_degree(3, d):
            um = tuple(a + b for a, b in zip(u, m))
            assert J.contains(u) == I.contains(um)


@settings(max_examples=60, deadline=None)
@given(gens3)
def test_standard_monomials_complement(gens):
    I = MonomialIdeal(3, gens)
    for d in range(6):
        std = set(I.standard_monomials(d))
        assert std == set(monomials_of_degree(3, d)) - members(I, d)
