import random

import pytest

from gmd.fields import GF, QQ
from gmd.groebner import Ideal, colon, ideal_equal
from gmd.invariants import (GMD, InfiniteFieldError, InvariantMatrix, default_budget,
                            delta_upper_bound_linear_products, enumerate_subspaces, matrix)
from gmd.points import ProjectivePointSet, generate_projective_space, vanishing_ideal
from gmd.polynomial import PolyRing

from corpus import build

MONO_FP = [["3", "5", "6", "inf", "inf", "inf"],
           ["2", "3", "4", "5", "6", "inf"],
           ["1", "2", "3", "4", "5", "6"]]


def over(I, p):
    R = PolyRing(I.ring.variables, GF(p), I.ring.order)
    return Ideal(R, [R.from_terms(g.terms) for g in I.generators])


def test_subspace_counts(determinantal):
    assert sum(1 for _ in enumerate_subspaces(determinantal, 1, 1)) == 364
    R = PolyRing(["t1", "t2"], GF(2))
    I = Ideal(R, ["t1^2", "t2^2"])
    fams = list(enumerate_subspaces(I, 1, 1))
    assert sorted(str(F[0]) for F in fams) == ["t1", "t1 + t2", "t2"]
    assert list(enumerate_subspaces(I, 1, 3)) == []


def test_monomial_fp_matrix(monomial_example):
    m = matrix(monomial_example, 3, 6, kind="fp")
    assert m.values() == MONO_FP
    # delta over any field equals fp; auto picks the footprint shortcut
    assert matrix(monomial_example, 3, 6, kind="delta").values() == MONO_FP


@pytest.mark.parametrize("p", [2, 3])
def test_monomial_delta_is_fp_by_enumeration(monomial_example, p):
    I = over(monomial_example, p)
    g = GMD(I, method="primes", budget=5000)
    for d in (1, 2):
        for r in range(1, 7):
            e, f = g.delta(d, r), g.footprint(d, r)
            if not e.skipped:
                assert e.display() == f.display()


def test_monomial_witness(monomial_example):
    R = monomial_example.ring
    e = GMD(monomial_example).delta(3, 4)
    assert e.value == 4
    F = [R.parse(s) for s in ("t1^2*t2", "t1*t2^2", "t1*t3^2", "t1^2*t3")]
    assert monomial_example.add(F).degree == 2
    assert not ideal_equal(colon(monomial_example, Ideal(R, F)), monomial_example)
    W = e.witness
    assert len(W) == 4 and monomial_example.add(W).degree == 2


def test_determinantal_rows(determinantal):
    g = GMD(determinantal)
    assert [g.footprint(1, r).display() for r in range(1, 8)] == ["1", "3", "4", "4", "4", "4", "inf"]
    assert [g.footprint(2, r).display() for r in range(1, 8)] == ["1", "1", "1", "1", "2", "3", "3"]
    assert [g.delta(1, r).value for r in (1, 2, 3)] == [3, 3, 4]
    assert g.hyp(1, 1).value == 1


def test_hyp_ten_points(ten_points_ideal):
    assert GMD(ten_points_ideal).hyp(1, 1).value == 4


def test_vasconcelos_examples():
    R = PolyRing(["t1", "t2"], GF(3))
    I = Ideal(R, ["t1^2", "t1*t2", "t2^2"])
    F = Ideal(R, ["t1", "t2"])
    c = colon(I, F)
    lhs = (0 if c.is_unit() else c.degree) + I.add(F.generators).degree
    assert lhs == 2 != I.degree == 3
    P = Ideal(R.__class__(["t1", "t2", "t3"], GF(3)), ["t1", "t2"])
    assert GMD(P).vasconcelos(1, 1).value == 1


def test_matrix_shapes(determinantal):
    m = matrix(determinantal, 1, 1, kind="fp")
    assert m.values() == [["1"]]
    again = InvariantMatrix.from_json(m.to_json())
    assert again.table() == m.table()


def test_upper_bound_linear_products(determinantal):
    b = delta_upper_bound_linear_products(determinantal, 1, 2)
    assert b is not None and b >= 3
    assert delta_upper_bound_linear_products(determinantal, 1, 7) is None


def test_budget_skip_and_env(monkeypatch, ten_points_ideal):
    e = GMD(ten_points_ideal, budget=10).delta(2, 2)
    assert e.skipped and e.display() == "skip"
    monkeypatch.setenv("GMD_BUDGET", "123")
    assert default_budget() == 123
    monkeypatch.setenv("GMD_BUDGET", "lots")
    with pytest.raises(ValueError):
        default_budget()


def test_infinite_field_delta_rejected(determinantal):
    R = PolyRing(determinantal.ring.variables, QQ)
    I = Ideal(R, [R.from_terms(g.terms) for g in determinantal.generators])
    with pytest.raises(InfiniteFieldError):
        GMD(I).delta(1, 1)


def test_beyond_is_inf(ten_points_ideal):
    g = GMD(ten_points_ideal)
    e = g.delta(1, 4)
    assert e.beyond and e.display() == "inf"
    assert g.delta(1, 3).value == 10


def test_threads_deterministic(ten_points_ideal):
    a = GMD(ten_points_ideal, threads=1).delta(2, 2)
    b = GMD(ten_points_ideal, threads=4).delta(2, 2)
    assert (a.value, [str(f) for f in a.witness]) == (b.value, [str(f) for f in b.witness])


def test_points_example_values(ten_points_ideal):
    g = GMD(ten_points_ideal)
    assert [g.delta(d, 1).value for d in range(1, 5)] == [6, 3, 1, 1]


# ------------------------------------------------------ engine agreement

def _small_point_sets():
    rng = random.Random(7)
    out = []
    for p, s in [(2, 3), (3, 2), (3, 3), (2, 3), (3, 3)]:
        pool = list(generate_projective_space(p, s).points)
        out.append(ProjectivePointSet(p, s, rng.sample(pool, min(len(pool), rng.randint(3, 6)))))
    return out


@pytest.mark.parametrize("X", _small_point_sets(), ids=lambda X: f"GF{X.p}-n{len(X)}")
def test_engines_agree(X):
    I = vanishing_ideal(X)
    engines = {m: GMD(I, method=m, budget=400) for m in ("points", "primes", "extend", "colon")}
    compared = 0
    for d in (1, 2):
        for r in (1, 2):
            got = {m: (g.delta(d, r).display(), g.hyp(d, r).display()) for m, g in engines.items()}
            vals = {v for v in got.values() if "skip" not in v}
            assert len(vals) <= 1, got
            compared += len(vals)
            th = engines["primes"].vasconcelos(d, r)
            de = engines["primes"].delta(d, r)
            if not th.skipped and not de.skipped:
                assert th.value == de.value
    assert compared >= 2


def test_fp_lower_bound_and_witness_on_corpus():
    for inst in build()[::6]:
        g = GMD(inst.ideal, budget=3000)
        for d in (1, 2):
            for r in (1, 2):
                e, f = g.delta(d, r), g.footprint(d, r)
                if e.skipped or e.beyond:
                    continue
                assert f.value <= e.value
                if e.witness:
                    K = inst.ideal.add(e.witness)
                    assert inst.ideal.degree - (0 if K.is_unit() else K.degree) == e.value
