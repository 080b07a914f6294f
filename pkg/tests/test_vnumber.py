import pytest

from gmd.fields import GF
from gmd.groebner import Ideal
from gmd.points import ProjectivePointSet, generate_projective_space, point_prime, vanishing_ideal
from gmd.polynomial import PolyRing
from gmd.vnumber import (cayley_bacharach, local_v_number, reg_delta, reg_delta_brute,
                         socle_degree, socle_degree_by_colon, socle_dimensions, v_number)

from corpus import build
from oracles import separator_degree


def test_q_example(q_example):
    vn = v_number(q_example)
    assert vn.v == 12
    locs = {tuple(sorted(str(g) for g in P.generators)): v for P, v in vn.locals}
    assert locs == {("t2", "t3", "t4"): 12, ("t1", "t3", "t4"): 15,
                    ("t1", "t2", "t4"): 18, ("t1", "t2", "t3"): 18}
    assert socle_degree(q_example) == 10
    assert socle_degree_by_colon(q_example) == 10
    assert not cayley_bacharach(q_example, vn=vn)


def test_ten_points(ten_points, ten_points_ideal):
    primes = [point_prime(P, ten_points_ideal.ring) for P in ten_points]
    vn = v_number(ten_points_ideal, primes)
    assert vn.v == 3
    assert reg_delta(ten_points_ideal, primes) == 3
    assert reg_delta_brute(ten_points_ideal, 5) == 3
    assert not cayley_bacharach(ten_points_ideal, primes)


def test_maximal_ideal_convention():
    R = PolyRing(["t1", "t2"], GF(3))
    m = Ideal(R, ["t1", "t2"])
    assert v_number(m).v == 0
    assert socle_degree(m) == 0


def test_prime_convention():
    R = PolyRing(["t1", "t2", "t3"], GF(3))
    P = Ideal(R, ["t1", "t2"])
    assert reg_delta(P) == 1
    assert v_number(P).v == 1


def test_full_projective_space_is_cayley_bacharach():
    X = generate_projective_space(2, 3)
    I = vanishing_ideal(X)
    primes = [point_prime(P, I.ring) for P in X]
    assert cayley_bacharach(I, primes)


def test_socle_dimensions_artinian():
    R = PolyRing(["t1", "t2"], GF(5))
    J = Ideal(R, ["t1^2", "t2^3"])
    # socle of K[t1,t2]/(t1^2,t2^3) is spanned by t1*t2^2
    assert socle_dimensions(J, 3) == [0, 0, 0, 1]


def test_point_prime_examples():
    R = PolyRing(["t1", "t2", "t3"], GF(3))
    from gmd.groebner import ideal_equal
    assert ideal_equal(point_prime((1, 0, 0), R), Ideal(R, ["t2", "t3"]))
    assert ideal_equal(point_prime((1, 1, 1), R), Ideal(R, ["t1 - t2", "t2 - t3"]))
    assert ideal_equal(point_prime((0, 1, 2), R), Ideal(R, ["t1", "2*t2 - t3"]))


POINT_SETS = [inst for inst in build() if inst.points is not None][:18]


@pytest.mark.parametrize("inst", POINT_SETS, ids=lambda i: i.name)
def test_local_v_numbers_are_separator_degrees(inst):
    X, I = inst.points, inst.ideal
    if len(X) == 1:
        return
    for P in X.points:
        assert local_v_number(I, point_prime(P, I.ring)) == separator_degree(X, P)


@pytest.mark.parametrize("inst", POINT_SETS + [i for i in build() if i.points is None][:10],
                         ids=lambda i: i.name)
def test_socle_routes_agree(inst):
    from gmd.groebner import find_regular_linear_form
    h, _ = find_regular_linear_form(inst.ideal)
    if h is None:
        pytest.skip("no regular linear form over the base field")
    assert socle_degree(inst.ideal, h) == socle_degree_by_colon(inst.ideal, h)
