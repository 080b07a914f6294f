import random
from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from gmd.fields import GF, QQ
from gmd.groebner import (Ideal, colon, find_regular_linear_form, ideal_equal, initial_ideal,
                          intersect, is_regular_element, minimal_generators, normal_form,
                          reduced_groebner)
from gmd.monomial_ideal import MonomialIdeal
from gmd.polynomial import PolyRing

from oracles import macaulay_hilbert, s_polynomial


def ring(n, field=GF(3), order="grevlex"):
    return PolyRing([f"t{i + 1}" for i in range(n)], field, order)


def test_normal_form_single_step():
    R = ring(6)
    f = R.parse("t1*t6 - t3*t4")
    # under lex t1*t6 leads, so one step rewrites it
    L = R.with_order("lex")
    assert normal_form(L.parse("t1*t6"), [L.parse("t1*t6 - t3*t4")]) == L.parse("t3*t4")
    assert normal_form(f, [f]).is_zero()


def test_normal_form_divisible():
    R = ring(3, QQ)
    gb = reduced_groebner(Ideal(R, ["t1^3", "t2*t3"]))
    assert normal_form(R.parse("t2^2*t3"), gb).is_zero()


def test_monomial_basis_is_itself():
    R = ring(3, QQ)
    gb = reduced_groebner(Ideal(R, ["t1^3", "t2*t3"]))
    assert sorted(str(g) for g in gb) == ["t1^3", "t2*t3"]


def test_lex_linear_example():
    R = ring(3, QQ, "lex")
    gb = reduced_groebner(Ideal(R, ["t1 - t2", "t2 - t3"]))
    assert {str(g) for g in gb} == {"t1 - t3", "t2 - t3"}
    for f, g in combinations(gb, 2):
        assert normal_form(s_polynomial(f, g), gb).is_zero()


def test_determinantal_hilbert(determinantal):
    hd = determinantal.hilbert_data()
    assert (hd.dim, hd.degree, hd.cm_regularity) == (4, 4, 2)
    assert determinantal.hilbert_function(1) == 6
    assert determinantal.hilbert_function(2) == 19
    M = initial_ideal(determinantal)
    assert M.hilbert_function(1) == 6 and M.hilbert_function(2) == 19


def test_initial_ideal_examples():
    R = ring(2, QQ, "lex")
    assert initial_ideal(Ideal(R, ["t1 + t2"])).gens == ((1, 0),)
    M = initial_ideal(Ideal(R, ["t1^2", "t1*t2"]))
    assert set(M.gens) == {(2, 0), (1, 1)}


def test_ideal_equal_examples():
    R = ring(2)
    assert ideal_equal(Ideal(R, ["t1", "t2"]), Ideal(R, ["t2", "t1 + t2"]))
    assert not ideal_equal(Ideal(R, ["t1^2"]), Ideal(R, ["t1"]))


def test_intersect_examples():
    R = ring(3)
    I = Ideal(R, ["t1^2 + t2*t3", "t3^2"])
    assert ideal_equal(intersect(I, I), I)
    assert ideal_equal(intersect(Ideal(R, ["t1"]), Ideal(R, ["t2"])), Ideal(R, ["t1*t2"]))


def test_colon_examples():
    R = ring(2)
    I = Ideal(R, ["t1^2", "t1*t2", "t2^2"])
    assert ideal_equal(colon(I, R.parse("t1")), Ideal(R, ["t1", "t2"]))
    J = Ideal(R, ["t1^3 + t2^3"])
    assert ideal_equal(colon(J, R.parse("t1")), J)
    with pytest.raises(ZeroDivisionError):
        colon(I, R.zero())


def test_regular_elements(q_example):
    R = q_example.ring
    assert is_regular_element(q_example, R.parse("t1 + t2 + t3 + t4"))
    h, _ = find_regular_linear_form(q_example)
    assert h is not None and is_regular_element(q_example, h)
    S = ring(2)
    assert not is_regular_element(Ideal(S, ["t1*t2"]), S.parse("t1"))
    m = Ideal(S, ["t1", "t2"])
    assert not is_regular_element(m, S.parse("t1 + t2"))
    assert find_regular_linear_form(m)[0] is None


def test_regular_form_ten_points(ten_points_ideal):
    # every linear form over F_3 vanishes at one of the ten points
    h, tried = find_regular_linear_form(ten_points_ideal)
    assert h is None and tried == 13


def test_minimal_generators(determinantal):
    R = ring(2)
    got = minimal_generators(Ideal(R, ["t1", "t1^2", "t2"]))
    assert sorted(map(str, got)) == ["t1", "t2"]
    S = ring(3, QQ)
    assert len(minimal_generators(Ideal(S, ["t1^3", "t2*t3"]))) == 2
    assert len(minimal_generators(determinantal)) == 2 == determinantal.height()
    assert determinantal.complete_intersection().holds()


def test_q_example_degree_additivity(q_example):
    from gmd.parsing import load_ideal_file
    from conftest import data_path
    f = load_ideal_file(data_path("q_example.ideal"))
    comps = [Ideal(q_example.ring, c) for c in f.components]
    # every component has height 3, so degrees add up
    assert all(C.dim == 1 for C in comps)
    assert q_example.degree == sum(C.degree for C in comps) == 537


# ---------------------------------------------------------------- properties

R3 = ring(3, GF(3))
forms = st.builds(
    lambda d, cs: R3.from_terms(dict(zip(
        [m for m in __import__("gmd.monomials", fromlist=["x"]).monomials_of_degree(3, d)], cs))),
    st.integers(1, 2), st.lists(st.integers(0, 2), min_size=6, max_size=6))


def _nonzero(fs):
    return [f for f in fs if not f.is_zero()]


@settings(max_examples=40, deadline=None)
@given(st.lists(forms, min_size=1, max_size=3))
def test_groebner_criterion(fs):
    fs = _nonzero(fs)
    if not fs:
        return
    I = Ideal(R3, fs)
    gb = I.groebner_basis()
    for f, g in combinations(gb, 2):
        assert normal_form(s_polynomial(f, g), gb).is_zero()
    for f in fs:
        assert normal_form(f, gb).is_zero()
    lms = [g.leading_monomial for g in gb]
    assert len(MonomialIdeal(3, lms).gens) == len(gb)
    for g in gb:
        assert g.leading_coefficient == 1


@settings(max_examples=30, deadline=None)
@given(st.lists(forms, min_size=1, max_size=3))
def test_hilbert_function_matches_macaulay_matrix(fs):
    fs = _nonzero(fs)
    if not fs:
        return
    I = Ideal(R3, fs)
    for d in range(4):
        assert I.hilbert_function(d) == macaulay_hilbert(R3, fs, d)


@settings(max_examples=25, deadline=None)
@given(st.lists(forms, min_size=1, max_size=2), forms, forms)
def test_colon_chain(fs, f, g):
    fs = _nonzero(fs)
    if not fs or f.is_zero() or g.is_zero():
        return
    I = Ideal(R3, fs)
    assert ideal_equal(colon(I, f * g), colon(colon(I, f), g))
    J = colon(I, f)
    for h in J.groebner_basis():
        assert I.contains(h * f)


@settings(max_examples=25, deadline=None)
@given(st.lists(forms, min_size=1, max_size=2), st.lists(forms, min_size=1, max_size=2))
def test_intersection_membership(fs, gs):
    fs, gs = _nonzero(fs), _nonzero(gs)
    if not fs or not gs:
        return
    I, J = Ideal(R3, fs), Ideal(R3, gs)
    K = intersect(I, J)
    for h in K.groebner_basis():
        assert I.contains(h) and J.contains(h)
    for f in fs:
        for g in gs:
            assert K.contains(f * g)


def test_order_does_not_change_the_ideal():
    rng = random.Random(3)
    R = ring(3, GF(5))
    for _ in range(5):
        fs = [R.from_terms({(rng.randint(0, 2), rng.randint(0, 2), 0): rng.randint(1, 4),
                            (0, rng.randint(0, 2), rng.randint(0, 2)): rng.randint(1, 4)})
              for _ in range(2)]
        I = Ideal(R, fs)
        for kind in ("lex", "grlex"):
            L = R.with_order(kind)
            J = Ideal(L, [L.from_terms(f.terms) for f in fs])
            for g in I.groebner_basis():
                assert J.contains(L.from_terms(g.terms))


def test_property_provenance():
    R = ring(2)
    # redundant generators do not hide radicality
    assert Ideal(R, ["t1", "t1^2", "t2"]).radical().holds()
    assert not Ideal(R, ["t1^2", "t2"]).radical().holds()
    # a graded ideal of finite colength has only the irrelevant prime
    U = Ideal(R, ["t1^2 + t2^2", "t1*t2"]).unmixed()
    assert U.holds() and U.provenance == "verified"
