"""v-number, local v-numbers, minimum socle degree and the Cayley-Bacharach test."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .groebner import Ideal, _Basis, colon, find_regular_linear_form
from .linalg import rank_exact

DEFAULT_CAP = 50


class BoundExceeded(RuntimeError):
    pass


class NoRegularForm(RuntimeError):
    pass


@dataclass
class VNumber:
    v: int
    locals: list          # [(prime Ideal, v_p)]
    bound: int

    def local_values(self) -> list:
        return [vp for _, vp in self.locals]


def _hf(J: Ideal, d: int) -> int:
    return 0 if J.is_unit() else J.hilbert_function(d)


def _is_maximal(I: Ideal) -> bool:
    return I.is_prime_linear() and I.dim == 0


def _search_bound(I: Ideal, bound: Optional[int]) -> int:
    if bound is not None:
        return bound
    reg = I.hilbert_data().cm_regularity
    return reg + 1 if reg is not None else DEFAULT_CAP


def local_v_number(I: Ideal, P: Ideal, bound: Optional[int] = None) -> int:
    """Least d >= 1 with H_I(d) > H_(I:P)(d), i.e. the initial degree of (I:P)/I."""
    bound = _search_bound(I, bound)
    J = colon(I, P)
    for d in range(1, bound + 1):
        if _hf(I, d) > _hf(J, d):
            return d
    raise BoundExceeded(f"no degree up to {bound} separates (I:p) from I")


def v_number(I: Ideal, primes: Optional[list] = None, bound: Optional[int] = None) -> VNumber:
    if _is_maximal(I):
        return VNumber(0, [(I, 0)], 0)
    if primes is None:
        primes = I.associated_primes()
    if not primes:
        raise ValueError("no primes available")
    b = _search_bound(I, bound)
    locs = [(P, local_v_number(I, P, b)) for P in primes]
    return VNumber(min(v for _, v in locs), locs, b)


def reg_delta(I: Ideal, primes: Optional[list] = None, bound: Optional[int] = None) -> int:
    """Regularity index of delta; 1 for a prime ideal by convention."""
    if I.is_prime_linear():
        return 1
    return v_number(I, primes, bound).v


def reg_delta_brute(I: Ideal, d_max: int, budget: Optional[int] = None) -> Optional[int]:
    """Least d <= d_max with delta(d) = 1 from direct enumeration, or None."""
    from .invariants import GMD
    g = GMD(I, budget=budget)
    for d in range(1, d_max + 1):
        e = g.delta(d, 1)
        if e.skipped:
            return None
        if e.value == 1:
            return d
    return None


def socle_dimensions(J: Ideal, upto: int) -> list:
    """dim_K of the degree-d part of (J : m)/J for d = 0..upto.

    That equals H_J(d) - H_(J:m)(d): a standard monomial combination f is a socle
    element when every t_i f reduces to zero.
    """
    ring = J.ring
    field = ring.field
    gb = J.groebner_basis()
    B = _Basis(ring.order, field)
    for g in gb:
        B.add(g.terms, g.degree())
    M = J.initial_ideal()
    out = []
    for d in range(upto + 1):
        std = M.standard_monomials(d)
        if not std:
            out.append(0)
            continue
        nxt = {m: k for k, m in enumerate(M.standard_monomials(d + 1))}
        rows = []
        for m in std:
            row = [0] * (ring.s * len(nxt))
            for i in range(ring.s):
                e = tuple(x + (1 if j == i else 0) for j, x in enumerate(m))
                rem = B.reduce({e: field.one})
                for mono, c in rem.items():
                    row[i * len(nxt) + nxt[mono]] = c
            rows.append(row)
        out.append(len(std) - (rank_exact(rows, field) if nxt else 0))
    return out


def artinian_reduction(I: Ideal, h=None):
    """(I, h) for a regular linear form h (found if not given); returns (J, h)."""
    dim = I.dim
    if dim == 0:
        return I, None
    if dim > 1:
        raise ValueError("dimension > 1 unsupported")
    if h is None:
        h, tried = find_regular_linear_form(I)
        if h is None:
            raise NoRegularForm(f"no regular linear form found ({tried} forms tried)")
    return I.add([h]), h


def socle_degree(I: Ideal, h=None) -> int:
    """Minimum socle degree s(I): initial degree of ((I,h):m)/(I,h)."""
    if _is_maximal(I):
        return 0
    J, _ = artinian_reduction(I, h)
    top = J.hilbert_data().h_degree
    dims = socle_dimensions(J, top)
    for d, k in enumerate(dims):
        if k:
            return d
    raise AssertionError("an Artinian quotient always has a socle")


def socle_degree_by_colon(I: Ideal, h=None) -> int:
    """Same quantity through the colon ideal (J : m) and a Hilbert-function comparison."""
    if _is_maximal(I):
        return 0
    J, _ = artinian_reduction(I, h)
    ring = J.ring
    K = colon(J, Ideal(ring, ring.gens()))
    top = J.hilbert_data().h_degree
    for d in range(top + 1):
        if _hf(J, d) > _hf(K, d):
            return d
    raise AssertionError("an Artinian quotient always has a socle")


def cayley_bacharach(I: Ideal, primes: Optional[list] = None, vn: Optional[VNumber] = None) -> bool:
    reg = I.hilbert_data().cm_regularity
    if reg is None:
        raise ValueError("regularity not available (Cohen-Macaulay property not established)")
    vn = vn or v_number(I, primes)
    return all(vp == reg for _, vp in vn.locals)

