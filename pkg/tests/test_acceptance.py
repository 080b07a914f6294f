"""Acceptance criteria, one test each; every test prints a single PASS/FAIL line."""

import time

import pytest

from gmd.checks import FAIL, PASS, ci_probe, property_checks
from gmd.fields import GF
from gmd.groebner import Ideal, colon, ideal_equal
from gmd.invariants import GMD
from gmd.parsing import load_ideal_file
from gmd.points import (BudgetExceeded, code, generalized_hamming_weight, load_points,
                        point_prime, vanishing_ideal)
from gmd.polynomial import PolyRing
from gmd.vnumber import reg_delta, socle_degree, v_number

from conftest import data_path
from corpus import build, hyp_all_forms


@pytest.fixture
def verdict(capsys):
    def emit(n, title, ok, started, limit, detail=""):
        secs = time.perf_counter() - started
        ok = ok and secs < limit
        line = f"criterion {n} [{title}]: {'PASS' if ok else 'FAIL'} ({secs:.1f}s, limit {limit}s)"
        with capsys.disabled():
            print("\n" + line + (f" {detail}" if detail else ""))
        assert ok, line + " " + detail
    return emit


@pytest.fixture(scope="module")
def corpus():
    return build()


def test_criterion_1_determinantal(verdict):
    t0 = time.perf_counter()
    I = load_ideal_file(data_path("determinantal.ideal")).ideal()
    hd = I.hilbert_data()
    g = GMD(I)
    fp1 = [g.footprint(1, r).display() for r in range(1, 8)]
    fp2 = [g.footprint(2, r).display() for r in range(1, 8)]
    row = [g.delta(1, r).value for r in range(1, 6)]
    got = (hd.cm_regularity, hd.degree, I.hilbert_function(1), I.hilbert_function(2), fp1, fp2, row)
    want = (2, 4, 6, 19, ["1", "3", "4", "4", "4", "4", "inf"], ["1", "1", "1", "1", "2", "3", "3"],
            [3, 3, 4, 4, 4])
    verdict(1, "determinantal example", got == want, t0, 180, "" if got == want else f"got {got}")


def test_criterion_2_monomial(verdict):
    t0 = time.perf_counter()
    base = load_ideal_file(data_path("monomial.ideal")).ideal()
    expected = [["3", "5", "6", "inf", "inf", "inf"],
             ["2", "3", "4", "5", "6", "inf"],
             ["1", "2", "3", "4", "5", "6"]]
    problems = []
    fp = GMD(base).matrix("fp", 3, 6).values()
    if fp != expected:
        problems.append(f"fp {fp}")
    for field in (None, GF(2), GF(3)):
        for kind in ("grevlex", "lex", "grlex"):
            R = PolyRing(base.ring.variables, field or base.ring.field, kind)
            I = Ideal(R, [R.from_terms(f.terms) for f in base.generators])
            # over a finite field delta is enumerated through the primes of I, not read off fp
            g = GMD(I, method="primes", budget=100_000) if field else GMD(I)
            dm = g.matrix("delta", 3, 6).values()
            if dm != g.matrix("fp", 3, 6).values() or dm != expected:
                problems.append(f"{field} {kind}: {dm}")
    R = base.ring
    F = [R.parse(s) for s in ("t1^2*t2", "t1*t2^2", "t1*t3^2", "t1^2*t3")]
    e = GMD(base).delta(3, 4)
    if e.value != 4 or base.add(F).degree != 2 or ideal_equal(colon(base, Ideal(R, F)), base):
        problems.append("delta(3,4) witness")
    verdict(2, "monomial example", not problems, t0, 30, "; ".join(problems))


def test_criterion_3_q_example(verdict):
    t0 = time.perf_counter()
    I = load_ideal_file(data_path("q_example.ideal")).ideal()
    primes = I.associated_primes()
    names = sorted(tuple(sorted(str(g) for g in P.generators)) for P in primes)
    vn = v_number(I)
    locs = {tuple(sorted(str(g) for g in P.generators)): v for P, v in vn.locals}
    got = (socle_degree(I), vn.v, [locs[k] for k in [("t2", "t3", "t4"), ("t1", "t3", "t4"),
                                                       ("t1", "t2", "t4"), ("t1", "t2", "t3")]],
           I.hilbert_data().cm_regularity, I.unmixed().holds(), names)
    want = (10, 12, [12, 15, 18, 18], 19, True,
            [("t1", "t2", "t3"), ("t1", "t2", "t4"), ("t1", "t3", "t4"), ("t2", "t3", "t4")])
    verdict(3, "Q example", got == want, t0, 120, "" if got == want else f"got {got}")


def test_criterion_4_ten_points(verdict):
    t0 = time.perf_counter()
    X = load_points(data_path("ten_points.points"))
    I = vanishing_ideal(X)
    R = I.ring
    J = Ideal(R, ["t1*t2^2 - t1^2*t2", "t1*t3^3 - t1^3*t3", "t2*t3^3 - t2^3*t3"])
    primes = [point_prime(P, R) for P in X]
    g = GMD(I)
    ideal_side = GMD(I, method="primes", budget=5000)
    # the r = 1 column is the minimum distance: always computed on both sides
    column = GMD(I, method="primes", budget=100_000)
    problems = []
    if not ideal_equal(I, J):
        problems.append("vanishing ideal")
    if (v_number(I, primes).v, reg_delta(I, primes), I.hilbert_data().cm_regularity) != (3, 3, 4):
        problems.append("v / reg(delta) / reg")
    if [g.delta(d, 1).value for d in range(1, 5)] != [6, 3, 1, 1]:
        problems.append("delta_X(d)")
    agreed = 0
    for d in range(1, 5):
        C = code(X, d, I)
        for r in range(1, C.dimension + 1):
            try:
                w = generalized_hamming_weight(C, r, budget=200_000)
            except BudgetExceeded:
                continue
            for e in (g.delta(d, r), (column if r == 1 else ideal_side).delta(d, r)):
                if not e.skipped and e.value != w:
                    problems.append(f"cell ({d},{r}): code {w}, ideal {e.value} [{e.method}]")
            agreed += 1
    if any(column.delta(d, 1).skipped for d in range(1, 5)):
        problems.append("ideal-side r=1 column not computed")
    verdict(4, "ten-point example", not problems, t0, 120,
            f"{agreed} code/ideal cells compared" + ("; " + "; ".join(problems) if problems else ""))


def test_criterion_5_property_corpus(verdict, corpus):
    t0 = time.perf_counter()
    failures = []
    exercised = set()
    for inst in corpus:
        rep = property_checks(inst.ideal, d_max=3, r_max=2, budget=20_000, check_budget=500)
        for res in rep.results:
            if res.status == FAIL:
                failures.append(f"{inst.name}: {res.name}: {res.detail}")
            elif res.status == PASS:
                exercised.add(res.name)
    required = {"fp <= delta", "delta rows non-decreasing", "delta columns non-increasing",
                "strict column decrease", "delta = vasconcelos", "singleton bound",
                "delta(d, H(d)) = deg", "delta = fp (monomial)", "reg(delta) = v",
                "s <= v_p <= reg", "weight hierarchy laws"}
    missing = required - exercised
    ok = len(corpus) >= 50 and not failures and not missing
    detail = f"{len(corpus)} instances, {len(failures)} violations"
    if missing:
        detail += f"; never exercised: {sorted(missing)}"
    if failures:
        detail += "; " + "; ".join(failures[:5])
    verdict(5, "property corpus", ok, t0, 900, detail)


def test_criterion_6_cross_oracle(verdict, corpus):
    t0 = time.perf_counter()
    problems = []
    cells = forms = 0
    for inst in corpus:
        if inst.points is None:
            continue
        X, I = inst.points, inst.ideal
        ideal_side = GMD(I, method="primes", budget=3000)
        g = GMD(I)
        for d in (1, 2, 3):
            C = code(X, d, I)
            for r in range(1, C.dimension + 1):
                try:
                    w = generalized_hamming_weight(C, r, budget=3000)
                except BudgetExceeded:
                    continue
                e = ideal_side.delta(d, r)
                if e.skipped:
                    continue
                cells += 1
                if e.value != w:
                    problems.append(f"{inst.name} ({d},{r}): code {w}, ideal {e.value}")
            h = hyp_all_forms(X, d)
            if h is not None:
                forms += 1
                if h != g.hyp(d, 1).value:
                    problems.append(f"{inst.name} hyp({d},1): forms {h}, engine {g.hyp(d, 1).value}")
    ok = not problems and cells > 0 and forms > 0
    verdict(6, "cross-oracle", ok, t0, 900,
            f"{cells} weight cells, {forms} all-forms checks" + ("; " + "; ".join(problems[:5]) if problems else ""))


def test_criterion_7_ci_probe(verdict, corpus):
    t0 = time.perf_counter()
    X = load_points(data_path("ci_quadrics.points"))
    I = vanishing_ideal(X)
    problems = []
    if I.complete_intersection().provenance != "verified":
        problems.append("quadric set not a verified complete intersection")
    rep = ci_probe(I)
    c = rep.c
    proven = {r.d: r for r in rep.rows if "2^(c-" in r.name}
    for d in sorted({1, c - 1, c}):
        row = proven.get(d)
        if row is None or row.kind != "theorem" or row.status != "satisfied":
            problems.append(f"2^(c-d) bound at d={d}: {row}")
    checked = 0
    for inst in corpus:
        J = inst.ideal
        if not J.complete_intersection().holds():
            continue
        degs = sorted(f.degree() for f in J.minimal_generators())
        if len(set(degs)) != 1 or degs[0] < 2:
            continue
        e, cc = degs[0], J.height()
        delta1 = GMD(J).delta(1, 1)
        checked += 1
        if delta1.skipped or delta1.value < e ** cc - e ** (cc - 1):
            problems.append(f"{inst.name}: delta(1)={delta1.display()} < {e ** cc - e ** (cc - 1)}")
    ok = not problems and checked > 0
    verdict(7, "CI probe", ok, t0, 300,
            f"c={c}, {checked} equigenerated corpus CIs" + ("; " + "; ".join(problems) if problems else ""))
