from math import comb

from hypothesis import given, settings, strategies as st

from gmd.hilbert import hilbert_data_monomial, hilbert_function_monomial, hilbert_numerator
from gmd.monomial_ideal import MonomialIdeal
from gmd.monomials import monomials_of_degree


def test_numerator_examples():
    assert hilbert_numerator(MonomialIdeal(2, [(1, 0)])) == [1, -1]
    assert hilbert_numerator(None, 3) == [1]
    hd = hilbert_data_monomial(MonomialIdeal(3, [(3, 0, 0), (0, 1, 1)]))
    assert hd.dim == 1 and hd.degree == 6 and hd.cm_regularity == 3
    assert sum(hd.h_vector) == 6


def test_zero_ideal_function():
    assert hilbert_function_monomial(None, 2, 3) == 6


def test_determinantal(determinantal):
    hd = determinantal.hilbert_data()
    assert hd.dim == 4 and hd.degree == 4 and hd.cm_regularity == 2
    assert hd.h_vector == (1, 2, 1)


def test_q_example(q_example):
    hd = q_example.hilbert_data()
    assert hd.dim == 1 and hd.degree == 537 and hd.cm_regularity == 19
    assert hd.hilbert_function(19) == hd.hilbert_function(40) == 537


def test_ten_points(ten_points_ideal):
    hd = ten_points_ideal.hilbert_data()
    assert hd.degree == 10 and hd.cm_regularity == 4
    assert [hd.hilbert_function(d) for d in range(6)] == [1, 3, 6, 9, 10, 10]
    assert hd.reg_index == 4


gens = st.lists(st.tuples(*[st.integers(0, 3)] * 3).filter(any), min_size=1, max_size=5)


@settings(max_examples=80, deadline=None)
@given(gens)
def test_series_counts_standard_monomials(g):
    I = MonomialIdeal(3, g)
    hd = hilbert_data_monomial(I)
    for d in range(9):
        brute = sum(1 for m in monomials_of_degree(3, d) if not I.contains(m))
        assert hilbert_function_monomial(I, d) == brute
        assert hd.hilbert_function(d) == brute


@settings(max_examples=80, deadline=None)
@given(gens)
def test_polynomial_agrees_beyond_reg_index(g):
    hd = hilbert_data_monomial(MonomialIdeal(3, g))
    n = hd.reg_index
    for d in range(n, n + 6):
        assert hd.hilbert_function(d) == hd.hilbert_polynomial(d)
    if n > 0:
        assert hd.hilbert_function(n - 1) != hd.hilbert_polynomial(n - 1)
    if hd.dim >= 1:
        big = 30
        lead = hd.hilbert_polynomial(big) - hd.hilbert_polynomial(big - 1) if hd.dim == 2 else None
        if hd.dim == 1:
            assert hd.hilbert_polynomial(big) == hd.degree
        elif lead is not None:
            assert lead == hd.degree


@settings(max_examples=50, deadline=None)
@given(gens)
def test_dimension_from_growth(g):
    hd = hilbert_data_monomial(MonomialIdeal(3, g))
    # H(d) grows like deg * d^(k-1) / (k-1)!
    k = hd.dim
    if k == 0:
        assert hd.hilbert_function(40) == 0
    else:
        d = 60
        approx = hd.degree * comb(d + k - 1, k - 1)
        assert abs(hd.hilbert_function(d) - approx) <= approx // 2 + 100
