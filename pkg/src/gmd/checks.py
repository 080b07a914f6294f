"""Property suite and complete-intersection probe.

Every check is evaluated only when its hypotheses hold.  A hypothesis is
"verified" when it was computed (monomial ideals, point sets, Groebner data) and
"asserted" when it rests on a user flag or user-supplied primes.  A failing check
whose hypotheses are all verified is a genuine counterexample.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import prod
from typing import Optional

from .groebner import Ideal, find_regular_linear_form
from .invariants import GMD
from .vnumber import BoundExceeded, NoRegularForm, socle_degree, v_number

PASS, FAIL, SKIP = "pass", "fail", "skipped"

# candidates allowed per cell on the colon-based cross route (one Groebner basis each)
CHECK_BUDGET = 3000


@dataclass
class CheckResult:
    name: str
    status: str
    detail: str = ""
    verified: bool = True       # all hypotheses verified (not merely asserted)
    cells: int = 0

    @property
    def counterexample(self) -> bool:
        return self.status == FAIL and self.verified

    def to_json(self) -> dict:
        return {"name": self.name, "status": self.status, "detail": self.detail,
                "hypotheses": "verified" if self.verified else "asserted", "cells": self.cells}


@dataclass
class CheckReport:
    results: list = field(default_factory=list)
    hypotheses: dict = field(default_factory=dict)

    def add(self, res: CheckResult):
        self.results.append(res)
        return res

    def by_name(self, name: str) -> CheckResult:
        return next(r for r in self.results if r.name == name)

    @property
    def failures(self) -> list:
        return [r for r in self.results if r.status == FAIL]

    @property
    def counterexamples(self) -> list:
        return [r for r in self.results if r.counterexample]

    def to_json(self) -> dict:
        return {"hypotheses": self.hypotheses, "checks": [r.to_json() for r in self.results]}


class _Tally:
    """Collects cell outcomes for one check; the first violation is kept."""

    def __init__(self, name, verified=True):
        self.name = name
        self.verified = verified
        self.cells = 0
        self.skipped = 0
        self.violation = None
        self.notes = []

    def ok(self, cond: bool, where: str):
        self.cells += 1
        if not cond and self.violation is None:
            self.violation = where

    def skip(self, n=1):
        self.skipped += n

    def result(self) -> CheckResult:
        extra = f"; {self.skipped} cells over budget" if self.skipped else ""
        notes = ("; " + "; ".join(self.notes)) if self.notes else ""
        if self.violation is not None:
            return CheckResult(self.name, FAIL, f"violated at {self.violation}{extra}{notes}",
                               self.verified, self.cells)
        if self.cells == 0:
            return CheckResult(self.name, SKIP, f"no computable cells{extra}", self.verified, 0)
        return CheckResult(self.name, PASS, f"{self.cells} cells{extra}{notes}", self.verified, self.cells)


def _skip(name, why) -> CheckResult:
    return CheckResult(name, SKIP, f"hypothesis not established: {why}")


class _Context:
    """Hypotheses and shared caches for one ideal."""

    def __init__(self, I: Ideal, budget, primes, find_form=True, check_budget=CHECK_BUDGET):
        self.I = I
        self.budget = budget
        self.check_budget = check_budget
        self.finite = I.ring.field.finite
        self.user_primes = primes
        self.unmixed = I.unmixed()
        self.radical = I.radical()
        self.dim = I.dim
        self.deg = I.degree
        if primes is not None:
            self.primes, self.primes_prov = primes, "asserted"
        else:
            self.primes = I.associated_primes()
            self.primes_prov = "verified" if self.primes is not None else None
        self.linear_primes = self.primes is not None and all(P.is_prime_linear() for P in self.primes)
        self.is_prime = I.is_prime_linear()
        self.h = None
        self.forms_tried = 0
        if find_form and I.homogeneous and not I.is_unit():
            self.h, self.forms_tried = find_regular_linear_form(I)
        self.default = GMD(I, budget=budget, primes=primes)
        self._genuine = None

    def verified(self, *props) -> bool:
        return all(p == "verified" for p in props)

    @property
    def geramita(self) -> bool:
        return self.unmixed.holds() and self.dim == 1 and self.linear_primes

    @property
    def geramita_verified(self) -> bool:
        return self.verified(self.unmixed.provenance, self.primes_prov)

    def genuine(self) -> GMD:
        """A GMD whose delta is a real enumeration (never the footprint shortcut)
        and whose Vasconcelos values come from colon ideals."""
        if self._genuine is None:
            method = "primes" if self.primes is not None else "extend"
            cap = self.default.budget if self.budget is None else self.budget
            self._genuine = GMD(self.I, budget=min(cap, self.check_budget), method=method,
                                primes=self.user_primes)
        return self._genuine

    def enumerated(self) -> GMD:
        """delta by enumeration; the default engine unless it would use the footprint."""
        if self.default.resolve_method("delta") == "fp":
            return self.genuine()
        return self.default

    def hypotheses(self) -> dict:
        return {"unmixed": str(self.unmixed), "radical": str(self.radical),
                "dim": self.dim, "degree": self.deg,
                "linear_primes": (f"yes ({self.primes_prov})" if self.linear_primes else
                                  "unknown" if self.primes is None else "no"),
                "regular_linear_form": str(self.h) if self.h is not None else
                f"none found ({self.forms_tried} forms tried)"}


def property_checks(I: Ideal, d_max: int = 3, r_max: int = 3, budget: Optional[int] = None,
                    primes: Optional[list] = None, check_budget: int = CHECK_BUDGET) -> CheckReport:
    ctx = _Context(I, budget, primes, check_budget=check_budget)
    rep = CheckReport(hypotheses=ctx.hypotheses())
    if not ctx.finite:
        if I.is_monomial():
            rep.add(_check_fp_rows(ctx, d_max, r_max))
        else:
            rep.add(_skip("delta checks", "enumeration requires a finite field"))
        rep.add(_check_socle_vs_local(ctx))
        return rep
    for fn in (_check_fp_le_delta, _check_delta_range, _check_row_monotone,
               _check_column_monotone, _check_full_rank, _check_theta,
               _check_singleton, _check_geil_carvalho):
        rep.add(fn(ctx, d_max, r_max))
    rep.add(_check_reg_delta(ctx))
    rep.add(_check_socle_vs_local(ctx))
    if I.points is not None:
        rep.add(_check_hierarchy(ctx, d_max))
        rep.add(_check_strict_column(ctx, d_max, r_max))
        rep.add(_check_code_vs_ideal(ctx, d_max, r_max))
    return rep


def _cells(d_max, r_max):
    for d in range(1, d_max + 1):
        for r in range(1, r_max + 1):
            yield d, r


def _check_fp_le_delta(ctx, d_max, r_max):
    name = "fp <= delta"
    if not ctx.unmixed.holds():
        return _skip(name, "unmixed")
    t = _Tally(name, ctx.verified(ctx.unmixed.provenance))
    g = ctx.enumerated()
    for d, r in _cells(d_max, r_max):
        if r > g.H(d):
            continue
        fp, de = ctx.default.footprint(d, r), g.delta(d, r)
        if fp.skipped or de.skipped:
            t.skip()
            continue
        t.ok(fp.value <= de.value, f"(d,r)=({d},{r}): fp={fp.value} delta={de.value}")
    return t.result()


def _check_delta_range(ctx, d_max, r_max):
    name = "1 <= delta <= deg"
    if not ctx.unmixed.holds():
        return _skip(name, "unmixed")
    t = _Tally(name, ctx.verified(ctx.unmixed.provenance))
    for d, r in _cells(d_max, r_max):
        e = ctx.default.delta(d, r)
        if e.skipped:
            t.skip()
            continue
        t.ok(1 <= e.value <= ctx.deg, f"(d,r)=({d},{r}): delta={e.value}")
    return t.result()


def _check_row_monotone(ctx, d_max, r_max):
    name = "delta rows non-decreasing"
    if not ctx.unmixed.holds():
        return _skip(name, "unmixed")
    t = _Tally(name, ctx.verified(ctx.unmixed.provenance))
    for d in range(1, d_max + 1):
        for r in range(1, r_max):
            a, b = ctx.default.delta(d, r), ctx.default.delta(d, r + 1)
            if a.skipped or b.skipped:
                t.skip()
                continue
            t.ok(a.value <= b.value, f"d={d}, r={r}: {a.value} > {b.value}")
    return t.result()


def _check_column_monotone(ctx, d_max, r_max):
    name = "delta columns non-increasing"
    if not ctx.unmixed.holds():
        return _skip(name, "unmixed")
    if ctx.h is None:
        return _skip(name, f"regular linear form ({ctx.forms_tried} forms tried)")
    t = _Tally(name, ctx.verified(ctx.unmixed.provenance))
    for r in range(1, r_max + 1):
        for d in range(1, d_max):
            a, b = ctx.default.delta(d, r), ctx.default.delta(d + 1, r)
            if a.skipped or b.skipped:
                t.skip()
                continue
            t.ok(a.value >= b.value >= 1, f"r={r}, d={d}: {a.value} < {b.value}")
    return t.result()


def _check_full_rank(ctx, d_max, r_max):
    name = "delta(d, H(d)) = deg"
    if not ctx.unmixed.holds():
        return _skip(name, "unmixed")
    if ctx.dim < 1:
        return _skip(name, "dim >= 1")
    t = _Tally(name, ctx.verified(ctx.unmixed.provenance))
    for d in range(1, d_max + 1):
        e = ctx.default.delta(d, ctx.default.H(d))
        if e.skipped:
            t.skip()
            continue
        t.ok(e.value == ctx.deg, f"d={d}: delta={e.value}, deg={ctx.deg}")
    return t.result()


def _check_theta(ctx, d_max, r_max):
    name = "delta = vasconcelos"
    if not (ctx.unmixed.holds() and ctx.radical.holds()):
        return _skip(name, "unmixed and radical")
    t = _Tally(name, ctx.verified(ctx.unmixed.provenance, ctx.radical.provenance))
    g = ctx.genuine()
    for d, r in _cells(d_max, r_max):
        if r > g.H(d):
            continue
        a, b = g.delta(d, r), g.vasconcelos(d, r)
        if a.skipped or b.skipped:
            t.skip()
            continue
        t.ok(a.value == b.value, f"(d,r)=({d},{r}): delta={a.value} theta={b.value}")
    return t.result()


def _check_singleton(ctx, d_max, r_max):
    name = "singleton bound"
    if not ctx.geramita:
        return _skip(name, "Geramita (unmixed, dim 1, linear associated primes)")
    if ctx.h is None:
        return _skip(name, f"regular linear form ({ctx.forms_tried} forms tried)")
    t = _Tally(name, ctx.geramita_verified)
    for d in range(1, d_max + 1):
        e = ctx.default.delta(d, 1)
        if e.skipped:
            t.skip()
            continue
        bound = ctx.deg - ctx.default.H(d) + 1
        t.ok(e.value <= bound, f"d={d}: delta={e.value} > {bound}")
    return t.result()


def _check_geil_carvalho(ctx, d_max, r_max):
    name = "delta = fp (monomial)"
    if not ctx.I.is_monomial():
        return _skip(name, "monomial ideal")
    if not ctx.unmixed.holds():
        return _skip(name, "unmixed")
    t = _Tally(name)
    g = ctx.genuine()
    for d, r in _cells(d_max, r_max):
        a, b = g.delta(d, r), ctx.default.footprint(d, r)
        if a.skipped or b.skipped:
            t.skip()
            continue
        t.ok(a.value == b.value and a.beyond == b.beyond,
             f"(d,r)=({d},{r}): delta={a.display()} fp={b.display()}")
    return t.result()


def _check_fp_rows(ctx, d_max, r_max):
    # infinite field: only the footprint side is computable; still check its bounds
    name = "1 <= fp <= deg"
    t = _Tally(name)
    if not ctx.unmixed.holds() or not ctx.I.initial_ideal().is_unmixed():
        return _skip(name, "unmixed initial ideal")
    for d, r in _cells(d_max, r_max):
        e = ctx.default.footprint(d, r)
        if e.skipped:
            t.skip()
            continue
        t.ok(1 <= e.value <= ctx.deg, f"(d,r)=({d},{r}): fp={e.value}")
    return t.result()


def _check_reg_delta(ctx):
    name = "reg(delta) = v"
    if not (ctx.unmixed.holds() and ctx.linear_primes):
        return _skip(name, "unmixed with linear associated primes")
    if ctx.is_prime and ctx.dim == 0:
        return _skip(name, "I is the maximal ideal")
    verified = ctx.verified(ctx.unmixed.provenance, ctx.primes_prov)
    try:
        vn = v_number(ctx.I, ctx.primes)
    except BoundExceeded as exc:
        return CheckResult(name, SKIP, str(exc), verified)
    t = _Tally(name, verified)
    radical = ctx.radical.holds()
    values = []
    top = vn.v + 1 if radical else vn.v
    for d in range(1, top + 1):
        e = ctx.default.delta(d, 1)
        if e.skipped:
            t.skip()
            return _partial(t, f"delta({d}) over budget")
        values.append(e.value)
    first_one = next((d for d, x in enumerate(values, 1) if x == 1), None)
    if ctx.is_prime:
        t.ok(vn.v == 1 and values[0] == 1, f"prime ideal: v={vn.v}, delta(1)={values[0]}")
        return t.result()
    t.ok(first_one == vn.v, f"v={vn.v}, least d with delta(d)=1 is {first_one} ({values})")
    if radical:
        strict = all(a > b for a, b in zip(values[:vn.v], values[1:vn.v]))
        t.ok(strict and values[-1] == 1, f"delta(1..{top})={values} not strictly decreasing to 1")
    t.notes.append(f"v={vn.v}, delta(1..{top})={tuple(values)}")
    return t.result()


def _partial(t: _Tally, why: str) -> CheckResult:
    res = t.result()
    if res.status == PASS:
        res.detail += f" ({why})"
    elif res.status == SKIP:
        res.detail = why
    return res


def _check_socle_vs_local(ctx):
    name = "s <= v_p <= reg"
    if not ctx.geramita:
        return _skip(name, "Geramita (unmixed, dim 1, linear associated primes)")
    if ctx.is_prime:
        return _skip(name, "I is not prime")
    verified = ctx.geramita_verified
    reg = ctx.I.hilbert_data().cm_regularity
    try:
        vn = v_number(ctx.I, ctx.primes)
    except BoundExceeded as exc:
        return CheckResult(name, SKIP, str(exc), verified)
    t = _Tally(name, verified)
    locs = vn.local_values()
    if reg is None:
        t.notes.append("regularity not available")
    else:
        for P, vp in vn.locals:
            t.ok(vp <= reg, f"v_p={vp} > reg={reg} for {P}")
    if ctx.h is None:
        t.notes.append(f"socle degree not computed: no regular linear form ({ctx.forms_tried} forms tried)")
    else:
        try:
            s = socle_degree(ctx.I, ctx.h)
        except (NoRegularForm, ValueError) as exc:
            t.notes.append(f"socle degree not computed: {exc}")
        else:
            for P, vp in vn.locals:
                t.ok(s <= vp, f"s={s} > v_p={vp} for {P}")
            note = f"s={s}, v={vn.v}, locals={tuple(locs)}, reg={reg}"
            if s < vn.v:
                note += " (s < v strictly)"
            t.notes.append(note)
    return t.result()


def hierarchy_laws(wh: list, n: int) -> Optional[str]:
    """None when a weight hierarchy obeys the standard laws, else the first violation."""
    k = len(wh)
    known = [(r, x) for r, x in enumerate(wh, 1) if x is not None]
    for (r1, a), (r2, b) in zip(known, known[1:]):
        if r2 == r1 + 1 and not a < b:
            return f"delta_{r1}={a} >= delta_{r2}={b}"
    for r, x in known:
        if not r <= x <= n - k + r:
            return f"delta_{r}={x} outside [{r}, {n - k + r}]"
        if not 1 <= x <= n:
            return f"delta_{r}={x} outside [1, {n}]"
    if wh and wh[0] == n - k + 1:
        for r, x in known:
            if x != n - k + r:
                return f"MDS code but delta_{r}={x} != {n - k + r}"
    return None


def _check_hierarchy(ctx, d_max):
    from .points import weight_hierarchy
    name = "weight hierarchy laws"
    t = _Tally(name)
    X = ctx.I.points
    for d in range(1, d_max + 1):
        wh = weight_hierarchy(X, d, ctx.default.budget, ctx.I)
        if any(x is None for x in wh):
            t.skip(sum(x is None for x in wh))
        bad = hierarchy_laws(wh, len(X))
        t.ok(bad is None, f"d={d}: {bad}")
    return t.result()


def _check_strict_column(ctx, d_max, r_max):
    from .points import column_decrease_check
    name = "strict column decrease"
    t = _Tally(name)
    for r in range(1, r_max + 1):
        col = []
        for d in range(1, d_max + 1):
            e = ctx.default.delta(d, r)
            if e.skipped:
                t.skip()
            col.append(None if (e.skipped or e.beyond) else e.value)
        if sum(x is not None for x in col) < 2:
            continue
        t.ok(column_decrease_check(col, r), f"r={r}: {col}")
    return t.result()


def _check_code_vs_ideal(ctx, d_max, r_max):
    from .points import BudgetExceeded, code, generalized_hamming_weight
    name = "code weight = delta"
    t = _Tally(name)
    for d in range(1, d_max + 1):
        C = code(ctx.I.points, d, ctx.I)
        for r in range(1, min(r_max, C.dimension) + 1):
            e = ctx.default.delta(d, r)
            try:
                w = generalized_hamming_weight(C, r, ctx.default.budget)
            except BudgetExceeded:
                t.skip()
                continue
            if e.skipped:
                t.skip()
                continue
            t.ok(w == e.value, f"(d,r)=({d},{r}): code={w} ideal={e.value}")
    return t.result()


# ------------------------------------------------------ complete intersections

@dataclass
class ProbeRow:
    name: str
    kind: str        # "theorem" or "conjecture"
    d: int
    r: int
    quantity: str
    bound: int
    value: Optional[int]
    status: str      # satisfied / violated / not computable
    verified: bool = True

    def to_json(self) -> dict:
        return dict(self.__dict__)


@dataclass
class ProbeReport:
    c: int
    degrees: list
    ci: str
    rows: list = field(default_factory=list)
    notes: list = field(default_factory=list)

    @property
    def violations(self) -> list:
        return [r for r in self.rows if r.status == "violated"]

    @property
    def counterexamples(self) -> list:
        return [r for r in self.violations if r.kind == "theorem" and r.verified]

    def to_json(self) -> dict:
        return {"c": self.c, "degrees": self.degrees, "complete_intersection": self.ci,
                "rows": [r.to_json() for r in self.rows], "notes": self.notes}


def general_ci_bound(degs: list, d: int) -> Optional[int]:
    """(d_{k+1} - l) d_{k+2} ... d_c where d = sum_{i<=k}(d_i - 1) + l, 1 <= l <= d_{k+1} - 1."""
    acc = 0
    for k, dk in enumerate(degs):
        if d - acc <= dk - 1:
            ell = d - acc
            return (dk - ell) * prod(degs[k + 1:])
        acc += dk - 1
    return None


def ci_probe(I: Ideal, budget: Optional[int] = None, primes: Optional[list] = None) -> ProbeReport:
    ctx = _Context(I, budget, primes, find_form=False)
    ci = I.complete_intersection()
    degs = sorted(g.degree() for g in I.minimal_generators())
    c = I.height()
    rep = ProbeReport(c, degs, str(ci))
    if not ci.holds():
        rep.notes.append("not a complete intersection; nothing to probe")
        return rep
    if not ctx.finite:
        rep.notes.append("enumeration requires a finite field")
        return rep
    ci_ok = ci.provenance == "verified"
    lin = ctx.linear_primes
    lin_ok = ctx.primes_prov == "verified"
    g = ctx.default

    def value(kind, d, r=1):
        e = g.entry(kind, d, r)
        return None if e.skipped else e.value

    def row(name, kind, d, r, quantity, bound, upper, verified):
        v = value(quantity, d, r)
        if v is None:
            status = "not computable"
        elif (v <= bound) if upper else (v >= bound):
            status = "satisfied"
        else:
            status = "violated"
        rep.rows.append(ProbeRow(name, kind, d, r, quantity, bound, v, status, verified))

    if not lin:
        rep.notes.append("associated primes not known to be linear; bounds need that hypothesis")
        return rep
    unm = ctx.unmixed
    hyp_ok = ci_ok and lin_ok and unm.provenance == "verified"

    e = degs[0]
    if len(set(degs)) == 1 and e >= 2 and unm.holds():
        row("hyp(1) <= e^(c-1)", "theorem", 1, 1, "hyp", e ** (c - 1), True, hyp_ok)
        row("delta(1) >= e^c - e^(c-1)", "theorem", 1, 1, "delta", e ** c - e ** (c - 1), False, hyp_ok)
        for r in range(2, c + 1):
            row(f"hyp(1,{r}) <= e^(c-{r})", "theorem", 1, r, "hyp", e ** (c - r), True, hyp_ok)
            row(f"delta(1,{r}) >= e^c - e^(c-{r})", "theorem", 1, r, "delta",
                e ** c - e ** (c - r), False, hyp_ok)
    if c == 2 and len(degs) == 2 and degs[0] >= 2:
        e1, e2 = degs
        row("hyp(1) <= e_2", "theorem", 1, 1, "hyp", e2, True, ci_ok and lin_ok)
        row("delta(1) >= e_1 e_2 - e_2", "theorem", 1, 1, "delta", e1 * e2 - e2, False, ci_ok and lin_ok)

    if ctx.dim == 1 and degs[0] >= 2 and len(degs) == c:
        if all(x == 2 for x in degs):
            for d in range(1, c + 1):
                proven = d in (1, c - 1, c)
                row(f"delta({d}) >= 2^(c-{d})", "theorem" if proven else "conjecture", d, 1,
                    "delta", 2 ** (c - d), False, ci_ok)
        row("delta(1) >= (d_1 - 1) d_2 ... d_c", "conjecture", 1, 1, "delta",
            (degs[0] - 1) * prod(degs[1:]), False, ci_ok)
        top = sum(x - 1 for x in degs) - 1
        for d in range(1, top + 1):
            b = general_ci_bound(degs, d)
            if b is not None:
                row(f"delta({d}) >= (d_(k+1) - l) d_(k+2) ... d_c", "conjecture", d, 1,
                    "delta", b, False, ci_ok)
        if I.points is not None:
            reg = I.hilbert_data().cm_regularity
            if reg is not None:
                for d in range(1, reg):
                    row(f"delta({d}) >= reg - {d} + 1", "theorem", d, 1, "delta", reg - d + 1,
                        False, ci_ok)
    if not rep.rows:
        rep.notes.append("no bound applies to these generator degrees")
    return rep
