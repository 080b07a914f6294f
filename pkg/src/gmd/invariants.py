"""delta, hyp, footprint and Vasconcelos functions of a graded ideal.

For a degree d and r >= 1 the candidates are r-dimensional subspaces F of
S_d / I_d, written in the basis of degree-d standard monomials.  F counts when
(I : (F)) != I.  Such F form a family closed under taking subspaces, and
(I : (F)) != I exactly when (F) lies in an associated prime.  Both facts drive
the enumeration strategies below.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from typing import Optional

import numpy as np

from .groebner import Ideal, _Basis, colon, ideal_equal
from .hilbert import hilbert_data_monomial
from .linalg import nullspace_mod, rref_mod
from .monomial_ideal import MonomialIdeal
from .subspaces import (batch_supports, gaussian_binomial, rref_batches, rref_key, rref_matrices,
                        span_vectors, support_masks)

DEFAULT_BUDGET = 10 ** 7
KINDS = ("delta", "fp", "hyp", "vasconcelos")
METHODS = ("auto", "points", "primes", "extend", "colon", "fp")


def default_budget() -> int:
    env = os.environ.get("GMD_BUDGET")
    if env:
        try:
            return int(float(env))
        except ValueError:
            raise ValueError(f"GMD_BUDGET must be a number, got {env!r}") from None
    return DEFAULT_BUDGET


class InfiniteFieldError(ValueError):
    pass


@dataclass
class Entry:
    kind: str
    d: int
    r: int
    value: Optional[int]
    family_empty: bool = False
    beyond: bool = False          # r > H_I(d)
    skipped: bool = False
    witness: Optional[list] = None
    candidates: int = 0
    method: str = ""

    def display(self) -> str:
        if self.skipped:
            return "skip"
        if self.beyond:
            return "inf"
        return str(self.value)

    def to_json(self) -> dict:
        out = {"d": self.d, "r": self.r,
               "value": None if (self.beyond or self.skipped) else self.value,
               "family_empty": self.family_empty}
        if self.skipped:
            out["skipped"] = True
        if self.witness:
            out["witness"] = [str(w) for w in self.witness]
        return out


@dataclass
class _Cell:
    hyp: Optional[int]            # max deg S/(I,F); None when the family is empty
    theta: Optional[int]          # min deg S/(I:(F))
    witness: Optional[list]
    candidates: int
    method: str
    skipped: bool = False
    beyond: bool = False


@dataclass
class InvariantMatrix:
    kind: str
    order: str
    d_max: int
    r_max: int
    entries: dict = field(default_factory=dict)

    def row(self, d: int) -> list:
        return [self.entries[(d, r)] for r in range(1, self.r_max + 1)]

    def values(self) -> list:
        return [[e.display() for e in self.row(d)] for d in range(1, self.d_max + 1)]

    def table(self) -> str:
        width = max(4, *(len(e.display()) for e in self.entries.values()))
        head = "d\\r " + " ".join(str(r).rjust(width) for r in range(1, self.r_max + 1))
        lines = [head]
        for d in range(1, self.d_max + 1):
            lines.append(str(d).ljust(4) + " ".join(e.display().rjust(width) for e in self.row(d)))
        return "\n".join(lines)

    def to_json(self) -> dict:
        return {"kind": self.kind, "order": self.order, "d_max": self.d_max, "r_max": self.r_max,
                "entries": [self.entries[k].to_json() for k in sorted(self.entries)]}

    @classmethod
    def from_json(cls, data: dict) -> "InvariantMatrix":
        m = cls(data["kind"], data["order"], data["d_max"], data["r_max"])
        for e in data["entries"]:
            beyond = e["value"] is None and not e.get("skipped", False)
            m.entries[(e["d"], e["r"])] = Entry(
                data["kind"], e["d"], e["r"], e["value"], e["family_empty"], beyond,
                e.get("skipped", False), e.get("witness"))
        return m


def _rref_stream_key(rows) -> tuple:
    """Position of an RREF matrix in the rref_matrices stream order."""
    pivots = tuple(next(i for i, x in enumerate(row) if x) for row in rows)
    piv = set(pivots)
    free = tuple(x for row, pv in zip(rows, pivots) for c, x in enumerate(row) if c > pv and c not in piv)
    return pivots, free


class GMD:
    """Per-ideal cache of standard monomials, candidate families and cell results."""

    def __init__(self, I: Ideal, budget: Optional[int] = None, method: str = "auto",
                 primes: Optional[list] = None, threads: int = 1):
        if method not in METHODS:
            raise ValueError(f"unknown method {method!r}")
        if not I.homogeneous:
            raise ValueError("a graded ideal is required")
        self.I = I
        self.ring = I.ring
        self.field = I.ring.field
        self.budget = default_budget() if budget is None else budget
        self.method = method
        self.user_primes = primes
        self.threads = threads
        self._std: dict = {}
        self._cells: dict = {}
        self._fp: dict = {}
        self._qual: dict = {}

    # ---------------------------------------------------------- basics
    @property
    def degree(self) -> int:
        return self.I.degree

    def std(self, d: int) -> list:
        if d not in self._std:
            monos = self.I.initial_ideal().standard_monomials(d)
            self._std[d] = sorted(monos, key=self.ring.order.key, reverse=True)
        return self._std[d]

    def H(self, d: int) -> int:
        return len(self.std(d))

    def poly(self, d: int, vec):
        return self.ring.from_terms({m: int(c) for m, c in zip(self.std(d), vec) if int(c)})

    def primes(self):
        if self.user_primes is not None:
            return self.user_primes
        return self.I.associated_primes()

    def resolve_method(self, kind: str = "delta") -> str:
        m = self.method
        finite = self.field.finite
        if m == "auto":
            if self.I.is_monomial() and (kind == "delta" or not finite):
                return "fp"
            if not finite:
                raise InfiniteFieldError("delta over an infinite field is only available for monomial ideals")
            if self.I.points is not None:
                return "points"
            if self.user_primes is not None or self.I.is_prime_linear():
                return "primes"
            if self.I.is_monomial():
                return "primes"
            return "extend"
        if m == "fp":
            if not self.I.is_monomial():
                raise ValueError("the footprint shortcut needs a monomial ideal")
            return m
        if not finite:
            raise InfiniteFieldError("enumeration requires finite field")
        if m == "points" and self.I.points is None:
            raise ValueError("no point set attached to this ideal")
        return m

    # ------------------------------------------------------ public cells
    def delta(self, d: int, r: int) -> Entry:
        return self._entry("delta", d, r)

    def hyp(self, d: int, r: int) -> Entry:
        return self._entry("hyp", d, r)

    def vasconcelos(self, d: int, r: int) -> Entry:
        return self._entry("vasconcelos", d, r)

    def footprint(self, d: int, r: int) -> Entry:
        return self._entry("fp", d, r)

    def entry(self, kind: str, d: int, r: int) -> Entry:
        if kind not in KINDS:
            raise ValueError(f"unknown kind {kind!r}")
        return self._entry(kind, d, r)

    def _entry(self, kind, d, r) -> Entry:
        if d < 1 or r < 1:
            raise ValueError("d and r must be positive")
        deg = self.degree
        if kind == "fp":
            cell = self._fp_cell(d, r)
        else:
            method = self.resolve_method(kind)
            if method == "fp":
                cell = self._fp_cell(d, r)
            else:
                cell = self._cell(d, r, method, need_theta=(kind == "vasconcelos"))
        e = Entry(kind, d, r, None, cell.hyp is None, cell.beyond, cell.skipped,
                  cell.witness, cell.candidates, cell.method)
        if cell.skipped:
            e.family_empty = False
            return e
        if kind == "hyp":
            e.value = 0 if cell.hyp is None else cell.hyp
        elif kind == "vasconcelos":
            e.value = deg if cell.hyp is None else cell.theta
        else:
            e.value = deg if cell.hyp is None else deg - cell.hyp
        return e

    # ---------------------------------------------------- footprint cells
    def _fp_cell(self, d, r) -> _Cell:
        key = (d, r)
        if key in self._fp:
            return self._fp[key]
        M = self.I.initial_ideal()
        std = self.std(d)
        H = len(std)
        if r > H:
            cell = _Cell(None, None, None, 0, "fp", beyond=True)
            self._fp[key] = cell
            return cell
        groups = []
        for p in M.associated_primes:
            idx = [k for k, m in enumerate(std) if any(m[i] for i in p)]
            if len(idx) >= r:
                groups.append(idx)
        need = sum(_comb(len(g), r) for g in groups)
        if need > self.budget:
            cell = _Cell(None, None, None, need, "fp", skipped=True)
            self._fp[key] = cell
            return cell
        best, wit = None, None
        seen = set()
        for idx in groups:
            for sub in combinations(idx, r):
                if sub in seen:
                    continue
                seen.add(sub)
                v = hilbert_data_monomial(M.add(std[k] for k in sub), cohen_macaulay=False).degree
                if best is None or v > best or (v == best and sub < wit):
                    best, wit = v, sub
        witness = [self.ring.monomial(std[k]) for k in wit] if wit is not None else None
        cell = _Cell(best, None, witness, len(seen), "fp")
        self._fp[key] = cell
        return cell

    # ----------------------------------------------------- delta cells
    def _cell(self, d, r, method, need_theta=False) -> _Cell:
        key = (d, r, method)
        cached = self._cells.get(key)
        if cached is not None and (not need_theta or cached.theta is not None or cached.hyp is None
                                   or cached.skipped):
            return cached
        H = self.H(d)
        if r > H:
            cell = _Cell(None, None, None, 0, method, beyond=True)
        elif method == "points":
            cell = self._points_cell(d, r)
        elif method == "primes":
            cell = self._primes_cell(d, r, need_theta)
        else:
            cell = self._extend_cell(d, r, need_theta, force_colon=(method == "colon"))
        cell.method = method
        self._cells[key] = cell
        return cell

    def _points_cell(self, d, r) -> _Cell:
        from .points import evaluation_matrix
        X = self.I.points
        p = X.p
        n = len(X)
        std = self.std(d)
        E = evaluation_matrix(std, X)
        kernels = [nullspace_mod(E[:, j:j + 1].T, p) for j in range(n)]
        kernels = [K for K in kernels if K.shape[0] >= r]
        need = sum(gaussian_binomial(K.shape[0], r, p) for K in kernels)
        if need > self.budget:
            return _Cell(None, None, None, need, "points", skipped=True)

        def scan(K):
            # subspaces of the kernel at one point: all of them vanish there
            best, wit_key, wit = -1, None, None
            KE = K @ E % p
            masks = support_masks(KE, p)
            for batch in rref_batches(K.shape[0], r, p):
                if masks is not None:
                    zeros = n - batch_supports(batch, masks, p)
                else:
                    ev = np.einsum("brk,kn->brn", batch, KE) % p
                    zeros = n - np.count_nonzero(ev.any(axis=1), axis=1)
                top = int(zeros.max())
                if top < best:
                    continue
                for b in np.nonzero(zeros == top)[0]:
                    F = rref_key(batch[b] @ K % p, p)
                    k = _rref_stream_key(F)
                    if top > best or k < wit_key:
                        best, wit_key, wit = top, k, F
            return best, wit_key, wit

        if self.threads > 1 and len(kernels) > 1:
            with ThreadPoolExecutor(max_workers=self.threads) as pool:
                parts = list(pool.map(scan, kernels))
        else:
            parts = [scan(K) for K in kernels]
        parts = [x for x in parts if x[1] is not None]
        if not parts:
            return _Cell(None, None, None, need, "points")
        best = max(x[0] for x in parts)
        _, _, wit = min((x for x in parts if x[0] == best), key=lambda x: x[1])
        witness = [self.poly(d, row) for row in wit]
        return _Cell(best, n - best, witness, need, "points")

    def _prime_subspace(self, d: int, P: Ideal) -> np.ndarray:
        """Basis (rows, standard-monomial coordinates) of the image of P_d in S_d / I_d."""
        p = self.field.p
        std = self.std(d)
        index = {m: k for k, m in enumerate(std)}
        gb = self.I.groebner_basis()
        B = _Basis(self.ring.order, self.field)
        for g in gb:
            B.add(g.terms, g.degree())
        rows = []
        from .monomials import monomials_of_degree
        for l in P.generators:
            for u in monomials_of_degree(self.ring.s, d - 1):
                acc = {}
                for e, c in l.terms.items():
                    m = tuple(a + b for a, b in zip(e, u))
                    acc[m] = (acc.get(m, 0) + c) % p
                acc = {m: c for m, c in acc.items() if c}
                rem = B.reduce(acc)
                vec = [0] * len(std)
                for m, c in rem.items():
                    vec[index[m]] = int(c)
                rows.append(vec)
        if not rows:
            return np.zeros((0, len(std)), dtype=np.int64)
        R, _ = rref_mod(np.array(rows, dtype=np.int64), p)
        return R

    def _value(self, d, F_rows, need_theta):
        polys = [self.poly(d, row) for row in F_rows]
        J = self.I.add(polys)
        hyp = J.degree if not J.is_unit() else 0
        theta = None
        if need_theta:
            theta = _quotient_degree(colon(self.I, Ideal(self.ring, polys)))
        return hyp, theta, polys

    def _primes_cell(self, d, r, need_theta) -> _Cell:
        primes = self.primes()
        if primes is None:
            raise ValueError("associated primes are not available")
        p = self.field.p
        spaces = []
        for P in primes:
            V = self._prime_subspace(d, P)
            if V.shape[0] >= r:
                spaces.append(V)
        need = sum(gaussian_binomial(V.shape[0], r, p) for V in spaces)
        if need > self.budget:
            return _Cell(None, None, None, need, "primes", skipped=True)
        best = None
        seen: dict = {}
        for V in spaces:
            for C in rref_matrices(V.shape[0], r, p):
                F = rref_key(np.array(C, dtype=np.int64) @ V % p, p)
                if F in seen:
                    continue
                seen[F] = self._value(d, F, need_theta)
        return self._best(seen, need, "primes")

    def _best(self, values: dict, need: int, method: str) -> _Cell:
        if not values:
            return _Cell(None, None, None, need, method)
        order = sorted(values, key=_rref_stream_key)
        hyp = max(v[0] for v in values.values())
        wit = next(F for F in order if values[F][0] == hyp)
        thetas = [v[1] for v in values.values() if v[1] is not None]
        theta = min(thetas) if thetas else None
        return _Cell(hyp, theta, values[wit][2], need, method)

    # generic route: grow qualifying subspaces one vector at a time
    def _qualifies(self, d, F_rows, force_colon):
        key = (d, F_rows, force_colon)
        if key in self._qual:
            return self._qual[key]
        polys = [self.poly(d, row) for row in F_rows]
        I = self.I
        if not force_colon and I.unmixed().holds():
            # unmixed: (F) lies in an associated prime iff adding it keeps the dimension
            J = I.add(polys)
            ok = not J.is_unit() and J.dim == I.dim
        else:
            ok = not ideal_equal(colon(I, Ideal(self.ring, polys)), I)
        self._qual[key] = ok
        return ok

    def _extend_cell(self, d, r, need_theta, force_colon=False) -> _Cell:
        p = self.field.p
        H = self.H(d)
        need = (p ** H - 1) // (p - 1)
        if need > self.budget:
            return _Cell(None, None, None, need, "extend", skipped=True)
        count = need
        vecs = [row[0] for row in rref_matrices(H, 1, p)]
        good = [v for v in vecs if self._qualifies(d, (v,), force_colon)]
        goodset = set(good)
        level = [(v,) for v in good]
        for k in range(2, r + 1):
            nxt = {}
            rejected = set()
            for U in level:
                for v in good:
                    W = rref_key(list(U) + [v], p)
                    if len(W) != k or W in nxt or W in rejected:
                        continue
                    count += 1
                    if count > self.budget:
                        return _Cell(None, None, None, count, "extend", skipped=True)
                    if all(x in goodset for x in span_vectors(W, p)) and \
                            self._qualifies(d, W, force_colon):
                        nxt[W] = True
                    else:
                        rejected.add(W)
            level = sorted(nxt, key=_rref_stream_key)
            if not level:
                break
        values = {F: self._value(d, F, need_theta) for F in level if len(F) == r}
        return self._best(values, count, "extend")

    # ---------------------------------------------------------- matrices
    def matrix(self, kind: str, d_max: int, r_max: int) -> InvariantMatrix:
        if kind not in KINDS:
            raise ValueError(f"unknown kind {kind!r}")
        order = self.ring.describe_order() if kind == "fp" else "order-independent"
        m = InvariantMatrix(kind, order, d_max, r_max)
        for d in range(1, d_max + 1):
            for r in range(1, r_max + 1):
                m.entries[(d, r)] = self.entry(kind, d, r)
        return m


def _comb(n, k):
    from math import comb
    return comb(n, k) if 0 <= k <= n else 0


def _quotient_degree(J: Ideal) -> int:
    return 0 if J.is_unit() else J.degree


# --------------------------------------------------- module-level helpers

def delta(I: Ideal, d: int, r: int, **kw) -> Entry:
    return GMD(I, **kw).delta(d, r)


def hyp(I: Ideal, d: int, r: int, **kw) -> Entry:
    return GMD(I, **kw).hyp(d, r)


def footprint_value(I: Ideal, d: int, r: int, **kw) -> Entry:
    return GMD(I, **kw).footprint(d, r)


def vasconcelos(I: Ideal, d: int, r: int, **kw) -> Entry:
    return GMD(I, **kw).vasconcelos(d, r)


def matrix(I: Ideal, d_max: int, r_max: int, kind: str = "delta", **kw) -> InvariantMatrix:
    return GMD(I, **kw).matrix(kind, d_max, r_max)


def enumerate_subspaces(I: Ideal, d: int, r: int):
    """RREF bases of the r-dimensional subspaces of S_d / I_d, lifted to standard polynomials."""
    if not I.ring.field.finite:
        raise InfiniteFieldError("enumeration requires finite field")
    g = GMD(I)
    H = g.H(d)
    for C in rref_matrices(H, r, I.ring.field.p):
        yield [g.poly(d, row) for row in C]


def delta_upper_bound_linear_products(I: Ideal, d: int, r: int) -> Optional[int]:
    """Upper bound for delta from sets of squarefree degree-d products of variables.

    Candidates are r products whose normal forms are nonzero with pairwise
    distinct leading monomials and (I : (F)) != I.
    """
    ring = I.ring
    s = ring.s
    gb = I.groebner_basis()
    from .groebner import normal_form
    prods = []
    for sub in combinations(range(s), d):
        m = tuple(1 if i in sub else 0 for i in range(s))
        f = normal_form(ring.monomial(m), gb)
        if f:
            prods.append(f)
    best = None
    for F in combinations(prods, r):
        lms = {f.leading_monomial for f in F}
        if len(lms) != r:
            continue
        J = Ideal(ring, list(F))
        if ideal_equal(colon(I, J), I):
            continue
        K = I.add(F)
        v = 0 if K.is_unit() else K.degree
        if best is None or v > best:
            best = v
    return None if best is None else I.degree - best
