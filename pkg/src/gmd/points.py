"""Projective point sets over GF(p), vanishing ideals and evaluation codes."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import product

import numpy as np

from .fields import PrimeField
from .groebner import Ideal, intersect
from .linalg import nullspace_mod, rank_mod
from .monomials import MonomialOrder
from .parsing import ParseError, parse_points_text
from .polynomial import PolyRing, Polynomial
from .subspaces import batch_supports, gaussian_binomial, rref_batches, support_masks


class BudgetExceeded(RuntimeError):
    def __init__(self, needed: int, budget: int):
        super().__init__(f"enumeration needs {needed} candidates, budget is {budget}")
        self.needed = needed
        self.budget = budget


def normalize_point(coords, p: int) -> tuple:
    coords = [int(c) % p for c in coords]
    first = next((c for c in coords if c), None)
    if first is None:
        raise ValueError("the zero vector is not a projective point")
    inv = pow(first, p - 2, p)
    return tuple(c * inv % p for c in coords)


class ProjectivePointSet:
    """Distinct points of P^{s-1}(GF(p)), each scaled so its first nonzero coordinate is 1."""

    def __init__(self, p: int, s: int, points):
        self.field = PrimeField(p)
        self.p = p
        self.s = s
        pts = []
        seen = set()
        for P in points:
            if len(P) != s:
                raise ValueError(f"point {tuple(P)} does not have {s} coordinates")
            Q = normalize_point(P, p)
            if Q in seen:
                raise ValueError(f"duplicate point {Q}")
            seen.add(Q)
            pts.append(Q)
        if not pts:
            raise ValueError("empty point set")
        self.points = tuple(pts)

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __repr__(self):
        return f"ProjectivePointSet(GF({self.p}), s={self.s}, n={len(self)})"

    def default_ring(self, order="grevlex") -> PolyRing:
        names = [f"t{i + 1}" for i in range(self.s)]
        return PolyRing(names, self.field, MonomialOrder(order, self.s) if isinstance(order, str) else order)

    def without(self, P) -> "ProjectivePointSet":
        return ProjectivePointSet(self.p, self.s, [Q for Q in self.points if Q != P])

    def to_text(self) -> str:
        lines = [f"points GF({self.p}) dim={self.s}"]
        lines += ["(" + " : ".join(str(c) for c in P) + ")" for P in self.points]
        return "\n".join(lines) + "\n"


def parse_points(text: str) -> ProjectivePointSet:
    field, s, rows = parse_points_text(text)
    pts = []
    seen = {}
    for coords, line in rows:
        if not any(coords):
            raise ParseError("the zero vector is not a projective point", line, 1)
        Q = normalize_point(coords, field.p)
        if Q in seen:
            raise ParseError(f"duplicate point {Q} (same as line {seen[Q]})", line, 1)
        seen[Q] = line
        pts.append(Q)
    if not pts:
        raise ParseError("no points given", 1, 1)
    return ProjectivePointSet(field.p, s, pts)


def load_points(path) -> ProjectivePointSet:
    with open(path, encoding="utf-8") as fh:
        return parse_points(fh.read())


def generate_projective_space(p: int, s: int) -> ProjectivePointSet:
    if s < 2:
        raise ValueError("need s >= 2")
    pts = [v for v in product(range(p), repeat=s)
           if any(v) and v[next(i for i, x in enumerate(v) if x)] == 1]
    return ProjectivePointSet(p, s, pts)


def point_prime(P, ring: PolyRing) -> Ideal:
    """The ideal of [P]: s-1 independent linear forms spanning the kernel of evaluation at P."""
    p = ring.field.p
    K = nullspace_mod(np.array([P], dtype=np.int64), p)
    forms = []
    for row in K:
        forms.append(ring.from_terms({tuple(int(i == j) for j in range(ring.s)): int(c)
                                      for i, c in enumerate(row) if c}))
    return Ideal(ring, forms, linear_prime=True)


def vanishing_ideal(X: ProjectivePointSet, ring: PolyRing | None = None) -> Ideal:
    """I(X) as the intersection of the point primes, flagged radical and unmixed."""
    ring = ring or X.default_ring()
    if ring.s != X.s or not ring.field.finite or ring.field.p != X.p:
        raise ValueError("ring does not match the point set")
    I = None
    for P in X.points:
        q = point_prime(P, ring)
        I = q if I is None else intersect(I, q)
    out = Ideal(ring, I.groebner_basis(), _gb=I.groebner_basis(), points=X)
    if out.degree != len(X):
        raise AssertionError("vanishing ideal degree differs from the number of points")
    return out


def evaluate_monomial(e, P, p: int) -> int:
    v = 1
    for x, k in zip(P, e):
        if k:
            v = v * pow(x, k, p) % p
    return v


def evaluation_matrix(monos, X: ProjectivePointSet) -> np.ndarray:
    p = X.p
    return np.array([[evaluate_monomial(m, P, p) for P in X.points] for m in monos],
                    dtype=np.int64).reshape(len(monos), len(X))


@dataclass
class EvaluationCode:
    X: ProjectivePointSet
    d: int
    monomials: list       # standard monomials indexing the rows
    matrix: np.ndarray    # k x n generator matrix

    @property
    def length(self) -> int:
        return len(self.X)

    @property
    def dimension(self) -> int:
        return self.matrix.shape[0]

    @cached_property
    def support_size(self) -> int:
        return int(np.count_nonzero(self.matrix.any(axis=0)))


def code(X: ProjectivePointSet, d: int, ideal: Ideal | None = None) -> EvaluationCode:
    if d < 1:
        raise ValueError("degree must be at least 1")
    I = ideal if ideal is not None else vanishing_ideal(X)
    order = I.ring.order
    monos = sorted(I.initial_ideal().standard_monomials(d), key=order.key, reverse=True)
    G = evaluation_matrix(monos, X)
    if rank_mod(G, X.p) != len(monos):
        raise AssertionError("evaluations of standard monomials are not independent")
    return EvaluationCode(X, d, monos, G)


def generalized_hamming_weight(C: EvaluationCode, r: int, budget: int | None = None) -> int:
    """Minimum support of an r-dimensional subcode, by enumerating RREF coefficient matrices."""
    k = C.dimension
    if r < 1 or r > k:
        raise ValueError(f"r must lie in 1..{k}")
    p = C.X.p
    if r == k:
        return C.support_size
    needed = gaussian_binomial(k, r, p)
    if budget is not None and needed > budget:
        raise BudgetExceeded(needed, budget)
    G = C.matrix
    best = C.length
    masks = support_masks(G, p)
    for batch in rref_batches(k, r, p):
        if masks is not None:
            # support of a span is the union of the supports of its rows
            supp = batch_supports(batch, masks, p)
        else:
            sub = np.einsum("brk,kn->brn", batch, G) % p
            supp = np.count_nonzero(sub.any(axis=1), axis=1)
        m = int(supp.min())
        if m < best:
            best = m
    return best


def weight_hierarchy(X: ProjectivePointSet, d: int, budget: int | None = None,
                     ideal: Ideal | None = None) -> list:
    """(delta_1, ..., delta_k); entries over budget are None."""
    C = code(X, d, ideal)
    out = []
    for r in range(1, C.dimension + 1):
        try:
            out.append(generalized_hamming_weight(C, r, budget))
        except BudgetExceeded:
            out.append(None)
    return out


def cross_check(X: ProjectivePointSet, d: int, r: int, budget: int | None = None,
                ideal: Ideal | None = None) -> dict:
    """Code-side weight against ideal-side delta for one cell."""
    from .invariants import GMD
    I = ideal if ideal is not None else vanishing_ideal(X)
    C = code(X, d, I)
    report = {"d": d, "r": r, "n": C.length, "k": C.dimension}
    if r > C.dimension:
        report.update(status="skipped", reason="r exceeds the code dimension")
        return report
    try:
        code_side = generalized_hamming_weight(C, r, budget)
    except BudgetExceeded as exc:
        report.update(status="skipped", reason=str(exc))
        return report
    e = GMD(I, budget=budget).delta(d, r)
    report["code"] = code_side
    report["ideal"] = e.value
    if e.skipped:
        report.update(status="skipped", reason="ideal side over budget")
    else:
        report["status"] = "pass" if e.value == code_side else "fail"
    return report


def column_decrease_check(values: list, r: int) -> bool:
    """delta(d, r) strictly decreases in d until it reaches r, then stays at r."""
    seen_r = False
    for a, b in zip(values, values[1:]):
        if a is None or b is None:
            continue
        if a == r:
            seen_r = True
        if seen_r:
            if b != r:
                return False
        elif not b < a:
            if not (b == a == r):
                return False
    return all(v is None or v >= r for v in values)


def polynomial_from_vector(ring: PolyRing, monos, vec) -> Polynomial:
    return ring.from_terms({m: int(c) for m, c in zip(monos, vec) if c})
