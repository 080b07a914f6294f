"""Buchberger's algorithm and ideal operations built on it.

Internally polynomials are plain dicts {exponent tuple: coefficient}; basis
elements are kept monic so reduction never divides.
"""

from __future__ import annotations

import heapq
import threading
from dataclasses import dataclass
from itertools import product
from typing import Iterable, Optional, Sequence

from .fields import RationalField
from .hilbert import HilbertData, hilbert_data_monomial
from .monomial_ideal import MonomialIdeal
from .monomials import EliminationOrder, divides, lcm
from .polynomial import PolyRing, Polynomial


# ------------------------------------------------------------------ raw core

class _Basis:
    """Growing list of monic reducers with a divisor lookup memo."""

    def __init__(self, order, field):
        self.order = order
        self.field = field
        self.p = field.p if field.finite else 0
        self.lms: list = []
        self.tails: list = []   # tail terms [(e, c), ...], decreasing
        self.sugar: list = []
        self._memo: dict = {}

    def add(self, terms: dict, sugar: int) -> int:
        key = self.order.key
        items = sorted(terms.items(), key=lambda t: key(t[0]), reverse=True)
        lm, lc = items[0]
        if lc != 1:
            inv = self.field.inv(lc)
            p = self.p
            items = [(e, (c * inv) % p if p else c * inv) for e, c in items]
        self.lms.append(lm)
        self.tails.append(items[1:])
        self.sugar.append(sugar)
        return len(self.lms) - 1

    def divisor(self, e, active=None) -> Optional[int]:
        memo = self._memo
        hit = memo.get(e)
        start = 0
        if hit is not None:
            idx, checked = hit
            if idx is not None and (active is None or idx in active):
                return idx
            if idx is None:
                start = checked
        lms = self.lms
        for i in range(start, len(lms)):
            if active is not None and i not in active:
                continue
            m = lms[i]
            for a, b in zip(m, e):
                if a > b:
                    break
            else:
                memo[e] = (i, i)
                return i
        if active is None:
            memo[e] = (None, len(lms))
        return None

    def reduce(self, acc: dict, active=None) -> dict:
        """Full reduction of ``acc`` (consumed); returns the remainder."""
        if not acc:
            return {}
        negkey = self.order.neg_key
        p = self.p
        heap = [(negkey(e), e) for e in acc]
        heapq.heapify(heap)
        inheap = set(acc)
        rem = {}
        lms, tails = self.lms, self.tails
        push, pop = heapq.heappush, heapq.heappop
        while heap:
            _, e = pop(heap)
            inheap.discard(e)
            c = acc.pop(e, None)
            if c is None:
                continue
            i = self.divisor(e, active)
            if i is None:
                rem[e] = c
                continue
            q = tuple(a - b for a, b in zip(e, lms[i]))
            for e2, c2 in tails[i]:
                m = tuple(a + b for a, b in zip(e2, q))
                v = acc.get(m, 0) - c * c2
                if p:
                    v %= p
                if v:
                    acc[m] = v
                    if m not in inheap:
                        inheap.add(m)
                        push(heap, (negkey(m), m))
                else:
                    acc.pop(m, None)
        return rem

    def spoly(self, i: int, j: int) -> dict:
        L = lcm(self.lms[i], self.lms[j])
        p = self.p
        acc: dict = {}
        qi = tuple(a - b for a, b in zip(L, self.lms[i]))
        for e, c in self.tails[i]:
            acc[tuple(a + b for a, b in zip(e, qi))] = c
        qj = tuple(a - b for a, b in zip(L, self.lms[j]))
        for e, c in self.tails[j]:
            m = tuple(a + b for a, b in zip(e, qj))
            v = acc.get(m, 0) - c
            if p:
                v %= p
            if v:
                acc[m] = v
            else:
                acc.pop(m, None)
        return acc

    def terms(self, i: int) -> dict:
        d = {self.lms[i]: self.field.one}
        d.update(self.tails[i])
        return d


def _coprime(a, b):
    for x, y in zip(a, b):
        if x and y:
            return False
    return True


def groebner_raw(polys: Iterable[dict], order, field, seed: Sequence[dict] = (),
                 degree_bound: Optional[int] = None) -> list:
    """Reduced Groebner basis (monic dicts, decreasing leading monomials).

    ``seed`` must already be a Groebner basis; pairs inside it are skipped.
    ``degree_bound`` drops S-pairs whose lcm has larger total degree, which for
    homogeneous input yields a basis that is exact up to that degree.
    """
    B = _Basis(order, field)
    key = order.key
    G: list = []
    pairs: dict = {}
    heap: list = []

    def update(h):
        nonlocal G
        lh = B.lms[h]
        C = list(G)
        D = []
        while C:
            g1 = C.pop()
            L1 = lcm(lh, B.lms[g1])
            if _coprime(lh, B.lms[g1]):
                D.append(g1)
                continue
            if any(divides(lcm(lh, B.lms[g2]), L1) for g2 in C) or \
               any(divides(lcm(lh, B.lms[g2]), L1) for g2 in D):
                continue
            D.append(g1)
        for (a, b), L in list(pairs.items()):
            if divides(lh, L) and lcm(B.lms[a], lh) != L and lcm(B.lms[b], lh) != L:
                del pairs[(a, b)]
        for g in D:
            if _coprime(lh, B.lms[g]):
                continue
            L = lcm(lh, B.lms[g])
            if degree_bound is not None and sum(L) > degree_bound:
                continue
            pr = (g, h)
            pairs[pr] = L
            sug = max(B.sugar[g] + sum(L) - sum(B.lms[g]), B.sugar[h] + sum(L) - sum(lh))
            heapq.heappush(heap, (sug, key(L), pr))
        G = [g for g in G if not divides(lh, B.lms[g])]
        G.append(h)

    for f in seed:
        if f:
            G.append(B.add(dict(f), max(sum(e) for e in f)))

    def insert(acc: dict, sugar: int):
        r = B.reduce(acc)
        if r:
            update(B.add(r, sugar))

    def step():
        sug, _, pr = heapq.heappop(heap)
        if pairs.pop(pr, None) is not None:
            insert(B.spoly(*pr), sug)

    todo = [dict(f) for f in polys if f]
    todo.sort(key=lambda f: max(sum(e) for e in f))
    for f in todo:
        deg = max(sum(e) for e in f)
        # for graded input, finish lower-degree pairs before the next generator
        while heap and heap[0][0] < deg:
            step()
        insert(f, deg)
    while heap:
        step()

    # interreduce
    active = set(G)
    out = []
    for g in G:
        active.discard(g)
        acc = dict(B.tails[g])
        tail = B.reduce(acc, active)
        active.add(g)
        t = {B.lms[g]: field.one}
        t.update(tail)
        out.append(t)
    out.sort(key=lambda t: key(max(t, key=key)), reverse=True)
    return out


# --------------------------------------------------------------- Ideal type

@dataclass(frozen=True)
class Property:
    value: Optional[bool]
    provenance: Optional[str]   # "verified", "asserted" or None when unknown

    def holds(self) -> bool:
        return bool(self.value)

    def __str__(self):
        if self.value is None:
            return "unknown"
        return f"{'yes' if self.value else 'no'} ({self.provenance})"


UNKNOWN = Property(None, None)


class Ideal:
    """A graded (or arbitrary) ideal with lazily computed, cached Groebner data."""

    def __init__(self, ring: PolyRing, generators: Iterable, *, unmixed=None, radical=None,
                 ci=None, _gb=None, _seed=None, points=None, linear_prime=False):
        gens = []
        for g in generators:
            if not isinstance(g, Polynomial):
                g = ring.parse(g) if isinstance(g, str) else ring.constant(g)
            if g.ring != ring:
                raise ValueError("ring mismatch")
            if g:
                gens.append(g)
        if not gens:
            raise ValueError("the zero ideal is not allowed")
        self.ring = ring
        self.generators = tuple(gens)
        self.homogeneous = all(g.is_homogeneous() for g in gens)
        self.points = points
        self._assert = {"unmixed": unmixed, "radical": radical, "ci": ci}
        self._linear = linear_prime or all(g.degree() == 1 and g.is_homogeneous() for g in gens)
        self._lock = threading.RLock()
        self._gb = _gb
        self._seed = _seed
        self._initial = None
        self._hilbert = None
        self._hilbert_base = None
        self._props: dict = {}
        self._mingens = None

    def __repr__(self):
        return f"Ideal({', '.join(str(g) for g in self.generators)})"

    def __str__(self):
        return "(" + ", ".join(str(g) for g in self.generators) + ")"

    # -------------------------------------------------------------- caches
    def groebner_basis(self) -> list:
        if self._gb is None:
            with self._lock:
                if self._gb is None:
                    ring = self.ring
                    seed = self._seed or ()
                    raw = groebner_raw([g.terms for g in self.generators], ring.order,
                                       ring.field, seed=seed)
                    self._gb = [Polynomial(ring, t) for t in raw]
        return self._gb

    def initial_ideal(self) -> MonomialIdeal:
        if self._initial is None:
            with self._lock:
                if self._initial is None:
                    lms = [g.leading_monomial for g in self.groebner_basis()]
                    self._initial = MonomialIdeal(self.ring.s, lms)
        return self._initial

    def is_monomial(self) -> bool:
        return all(g.is_monomial() for g in self.generators)

    def is_unit(self) -> bool:
        return self.initial_ideal().is_unit()

    def contains(self, f) -> bool:
        if not isinstance(f, Polynomial):
            f = self.ring.parse(f) if isinstance(f, str) else self.ring.constant(f)
        return not normal_form(f, self.groebner_basis())

    __contains__ = contains

    def add(self, polys: Iterable[Polynomial]) -> "Ideal":
        """I + (polys), reusing this ideal's Groebner basis as a seed."""
        polys = [f for f in polys if f]
        gb = self.groebner_basis()
        return Ideal(self.ring, list(gb) + polys, _seed=[g.terms for g in gb])

    def _base_hilbert(self) -> HilbertData:
        # Hilbert data without any Cohen-Macaulay claim; enough for dim and degree
        if self._hilbert_base is None:
            with self._lock:
                if self._hilbert_base is None:
                    self._hilbert_base = hilbert_data_monomial(self.initial_ideal(),
                                                               cohen_macaulay=False)
        return self._hilbert_base

    def hilbert_data(self, cohen_macaulay: Optional[bool] = None) -> HilbertData:
        if cohen_macaulay is not None:
            return hilbert_data_monomial(self.initial_ideal(), cohen_macaulay=cohen_macaulay)
        if self._hilbert is None:
            cm = self.cohen_macaulay_established()
            with self._lock:
                if self._hilbert is None:
                    self._hilbert = hilbert_data_monomial(self.initial_ideal(), cohen_macaulay=cm)
        return self._hilbert

    def cohen_macaulay_established(self) -> bool:
        dim = self.dim
        if dim == 0:
            return True
        if self.complete_intersection().holds():
            return True
        return dim == 1 and self.unmixed().holds()

    @property
    def dim(self) -> int:
        return self._base_hilbert().dim

    @property
    def degree(self) -> int:
        return self._base_hilbert().degree

    def height(self) -> int:
        return self.ring.s - self.dim

    def hilbert_function(self, d: int) -> int:
        return self.hilbert_data().hilbert_function(d)

    # ------------------------------------------------------- property flags
    def _prop(self, name, compute):
        if name not in self._props:
            with self._lock:
                if name not in self._props:
                    self._props[name] = compute()
        return self._props[name]

    def unmixed(self) -> Property:
        def compute():
            if self.is_monomial():
                return Property(MonomialIdeal(self.ring.s, [g.leading_monomial for g in self.generators]).is_unmixed(), "verified")
            if self.points is not None or self._linear:
                return Property(True, "verified")
            if self.homogeneous and self.dim == 0:
                # the irrelevant ideal is the only associated prime
                return Property(True, "verified")
            if self.homogeneous and self.complete_intersection().value is True \
                    and self.complete_intersection().provenance == "verified":
                return Property(True, "verified")
            if self._assert["unmixed"] is not None:
                return Property(bool(self._assert["unmixed"]), "asserted")
            if self.complete_intersection().holds():
                return Property(True, "asserted")
            return UNKNOWN
        return self._prop("unmixed", compute)

    def radical(self) -> Property:
        def compute():
            if self.is_monomial():
                return Property(self.initial_ideal().is_squarefree(), "verified")
            if self.points is not None or self._linear:
                return Property(True, "verified")
            if self._assert["radical"] is not None:
                return Property(bool(self._assert["radical"]), "asserted")
            return UNKNOWN
        return self._prop("radical", compute)

    def complete_intersection(self) -> Property:
        def compute():
            if self.homogeneous:
                ok = len(self.minimal_generators()) == self.height()
                if ok or self._assert["ci"] is None:
                    return Property(ok, "verified")
            if self._assert["ci"] is not None:
                return Property(bool(self._assert["ci"]), "asserted")
            return UNKNOWN
        return self._prop("ci", compute)

    def is_prime_linear(self) -> bool:
        return self._linear

    def minimal_generators(self) -> list:
        if self._mingens is None:
            self._mingens = minimal_generators(self)
        return self._mingens

    def associated_primes(self):
        """Associated primes when they can be determined (monomial or point-set ideals)."""
        if self.is_monomial():
            M = MonomialIdeal(self.ring.s, [g.leading_monomial for g in self.generators])
            return [Ideal(self.ring, [self.ring.gen(i) for i in p]) for p in M.associated_primes]
        if self.points is not None:
            from .points import point_prime
            return [point_prime(P, self.ring) for P in self.points.points]
        if self._linear:
            return [self]
        return None

    def describe_flags(self) -> dict:
        return {"homogeneous": self.homogeneous,
                "unmixed": str(self.unmixed()),
                "radical": str(self.radical()),
                "complete_intersection": str(self.complete_intersection())}


# ------------------------------------------------------------ operations

def _check_ring(*items):
    ring = items[0].ring
    for it in items[1:]:
        if it.ring != ring:
            raise ValueError("ring mismatch")
    return ring


def normal_form(f: Polynomial, basis: Sequence[Polynomial]) -> Polynomial:
    """Remainder of f on division by ``basis``; the basis need not be a Groebner basis."""
    ring = f.ring
    for b in basis:
        if b.ring != ring:
            raise ValueError("ring mismatch")
    B = _Basis(ring.order, ring.field)
    for b in basis:
        if b:
            B.add(b.terms, b.degree())
    return Polynomial(ring, B.reduce(dict(f.terms)))


def reduced_groebner(I: Ideal) -> list:
    return I.groebner_basis()


def initial_ideal(I: Ideal) -> MonomialIdeal:
    return I.initial_ideal()


def ideal_equal(I: Ideal, J: Ideal) -> bool:
    if I.ring != J.ring:
        raise ValueError("ring mismatch")
    a = I.groebner_basis()
    b = J.groebner_basis()
    return len(a) == len(b) and all(x.terms == y.terms for x, y in zip(a, b))


def intersect(I: Ideal, J: Ideal) -> Ideal:
    ring = _check_ring(I, J)
    if I.is_monomial() and J.is_monomial():
        M = MonomialIdeal(ring.s, [g.leading_monomial for g in I.generators]).intersect(
            MonomialIdeal(ring.s, [g.leading_monomial for g in J.generators]))
        return Ideal(ring, [ring.monomial(m) for m in M.gens])
    order = EliminationOrder(1, ring.order)
    polys = []
    for f in I.generators:
        polys.append({(1,) + e: c for e, c in f.terms.items()})
    for g in J.generators:
        t = {(0,) + e: c for e, c in g.terms.items()}
        for e, c in g.terms.items():
            t[(1,) + e] = ring.field.norm(-c)
        polys.append(t)
    gb = groebner_raw(polys, order, ring.field)
    kept = [{e[1:]: c for e, c in t.items()} for t in gb if all(e[0] == 0 for e in t)]
    kept.sort(key=lambda t: ring.order.key(max(t, key=ring.order.key)), reverse=True)
    basis = [Polynomial(ring, t) for t in kept]
    return Ideal(ring, basis, _gb=basis)


def divide_exact(g: Polynomial, f: Polynomial) -> Polynomial:
    ring = g.ring
    field = ring.field
    lm_f, lc_f = f.leading_monomial, f.leading_coefficient
    inv = field.inv(lc_f)
    q = ring.zero()
    r = g
    while r:
        lm_r = r.leading_monomial
        if not divides(lm_f, lm_r):
            raise ValueError("division is not exact")
        t = ring.monomial(tuple(a - b for a, b in zip(lm_r, lm_f)),
                          field.norm(r.leading_coefficient * inv))
        q = q + t
        r = r - t * f
    return q


def colon(I: Ideal, J) -> Ideal:
    """(I : J) for a polynomial or an ideal J."""
    if isinstance(J, Ideal):
        _check_ring(I, J)
        out = None
        for g in J.generators:
            c = colon(I, g)
            out = c if out is None else intersect(out, c)
        return out
    f = J
    if f.ring != I.ring:
        raise ValueError("ring mismatch")
    if not f:
        raise ZeroDivisionError("colon by the zero polynomial")
    ring = I.ring
    if I.is_monomial() and f.is_monomial():
        M = MonomialIdeal(ring.s, [g.leading_monomial for g in I.generators]).colon(f.leading_monomial)
        return Ideal(ring, [ring.monomial(m) for m in M.gens])
    K = intersect(I, Ideal(ring, [f]))
    return Ideal(ring, [divide_exact(g, f) for g in K.groebner_basis()])


def is_regular_element(I: Ideal, h: Polynomial, method: str = "auto") -> bool:
    """h is regular on S/I, i.e. (I : h) = I.

    For homogeneous data the test compares Hilbert series:
    HS(S/(I,h)) = (1 - x^deg h) HS(S/I) exactly when h is regular.
    """
    if not h:
        raise ZeroDivisionError("the zero polynomial is never regular")
    if method == "auto" and I.points is not None and h.is_homogeneous():
        return all(h.evaluate(P) != 0 for P in I.points.points)
    if method in ("auto", "hilbert") and I.homogeneous and h.is_homogeneous():
        from .hilbert import _mul, _one_minus_xk, hilbert_numerator
        if I.is_unit():
            return True
        J = I.add([h])
        if J.is_unit():
            return False
        lhs = hilbert_numerator(J.initial_ideal())
        rhs = _mul(hilbert_numerator(I.initial_ideal()), _one_minus_xk(h.degree()))
        return lhs == rhs
    return ideal_equal(colon(I, h), I)


def find_regular_linear_form(I: Ideal, bound: int = 2):
    """First regular linear form in the documented search order, or None.

    Returns (form or None, number of forms tried).
    """
    ring = I.ring
    s = ring.s
    tried = 0
    seen = set()
    if ring.field.finite:
        candidates = (v for v in product(range(ring.field.p), repeat=s)
                      if any(v) and v[next(i for i, x in enumerate(v) if x)] == 1)
    else:
        def gen():
            yield (1,) * s
            rng = [0] + [x for k in range(1, bound + 1) for x in (k, -k)]
            for v in product(rng, repeat=s):
                if any(v) and v[next(i for i, x in enumerate(v) if x)] > 0:
                    yield v
        candidates = gen()
    for v in candidates:
        if v in seen:
            continue
        seen.add(v)
        tried += 1
        h = ring.from_terms({tuple(int(i == j) for j in range(s)): c
                             for i, c in enumerate(v) if c})
        if is_regular_element(I, h):
            return h, tried
    return None, tried


def minimal_generators(I: Ideal) -> list:
    """Subset of the generators, by increasing degree, skipping members of the ideal of those kept."""
    if not I.homogeneous:
        raise ValueError("minimal generators need homogeneous generators")
    ring = I.ring
    kept: list = []
    gb_terms: list = []
    for g in sorted(I.generators, key=lambda f: f.degree()):
        if kept:
            if not normal_form(g, [Polynomial(ring, t) for t in gb_terms]):
                continue
        kept.append(g)
        gb_terms = groebner_raw([g.terms], ring.order, ring.field, seed=gb_terms)
    return kept


def ideal_from_strings(ring: PolyRing, gens: Sequence[str], **flags) -> Ideal:
    return Ideal(ring, [ring.parse(g) for g in gens], **flags)


def is_rational(ring: PolyRing) -> bool:
    return isinstance(ring.field, RationalField)
