"""Hilbert series, Hilbert function and the data read off the h-polynomial.

Everything is computed from a monomial ideal; for a general ideal the initial
ideal is used, which has the same Hilbert function.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Optional

from .monomial_ideal import MonomialIdeal

# numerators are integer coefficient lists, index = power of x


def _add(a, b):
    n = max(len(a), len(b))
    out = [0] * n
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i] += c
    return _trim(out)


def _mul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def _shift(a, k):
    return [0] * k + list(a) if a else []


def _trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _one_minus_xk(k):
    out = [0] * (k + 1)
    out[0] = 1
    out[k] -= 1
    return _trim(out)


_CACHE: dict = {}
_CACHE_LIMIT = 200_000


def hilbert_numerator(M: MonomialIdeal | None, s: int | None = None) -> list:
    """Integer coefficients of N(x) with HS(S/M) = N(x) / (1 - x)^s.

    ``None`` stands for the zero ideal.  Pivot recursion:
    N(M) = N(M + (p)) + x^deg(p) N(M : p) with p a power of a variable.
    """
    if M is None:
        return [1]
    return list(_numerator(tuple(sorted(M.gens))))


def _numerator(gens: tuple) -> tuple:
    if not gens:
        return (1,)
    if any(sum(g) == 0 for g in gens):
        return ()
    hit = _CACHE.get(gens)
    if hit is not None:
        return hit
    s = len(gens[0])
    # pairwise coprime generators: the quotient is a tensor product
    used = [0] * s
    coprime = True
    for g in gens:
        for i, e in enumerate(g):
            if e:
                if used[i]:
                    coprime = False
                used[i] += 1
    if coprime:
        out = [1]
        for g in gens:
            out = _mul(out, _one_minus_xk(sum(g)))
        res = tuple(out)
    else:
        # pivot: most frequent variable, at its largest exponent among mixed generators
        var = max(range(s), key=lambda i: (used[i], -i))
        e = max(g[var] for g in gens if g[var] and sum(g) > g[var])
        p = tuple(e if j == var else 0 for j in range(s))
        plus = MonomialIdeal(s, list(gens) + [p])
        col = MonomialIdeal(s, [tuple(0 if j == var else g[j] for j in range(s))
                                if g[var] <= e else
                                tuple(g[j] - e if j == var else g[j] for j in range(s))
                                for g in gens])
        res = tuple(_add(list(_numerator(tuple(sorted(plus.gens)))),
                         _shift(_numerator(tuple(sorted(col.gens))), e)))
    if len(_CACHE) > _CACHE_LIMIT:
        _CACHE.clear()
    _CACHE[gens] = res
    return res


def _divide_one_minus_x(a):
    """Exact division by (1 - x); None if 1 is not a root."""
    if sum(a) != 0:
        return None
    out = []
    acc = 0
    for c in a[:-1]:
        acc += c
        out.append(acc)
    return _trim(out)


def _gbinom(n: int, k: int) -> int:
    """binomial(n, k) as a polynomial in n (valid for negative n as well)."""
    if k < 0:
        return 0
    num = 1
    for t in range(k):
        num *= n - t
    den = 1
    for t in range(2, k + 1):
        den *= t
    return num // den


@dataclass(frozen=True)
class HilbertData:
    nvars: int
    dim: int
    degree: int
    h_vector: tuple
    a_invariant: int
    reg_index: int
    cm_regularity: Optional[int]
    numerator: tuple

    def hilbert_function(self, d: int) -> int:
        if d < 0:
            return 0
        k = self.dim
        if k == 0:
            return self.h_vector[d] if d < len(self.h_vector) else 0
        return sum(h * comb(d - i + k - 1, k - 1) for i, h in enumerate(self.h_vector) if i <= d)

    def hilbert_polynomial(self, d: int) -> int:
        k = self.dim
        if k == 0:
            return 0
        return sum(h * _gbinom(d - i + k - 1, k - 1) for i, h in enumerate(self.h_vector))

    @property
    def h_degree(self) -> int:
        return len(self.h_vector) - 1

    def as_dict(self) -> dict:
        return {
            "dim": self.dim,
            "degree": self.degree,
            "h_vector": list(self.h_vector),
            "a_invariant": self.a_invariant,
            "reg_index": self.reg_index,
            "cm_regularity": self.cm_regularity,
        }


def hilbert_data_monomial(M: MonomialIdeal | None, s: int | None = None,
                          cohen_macaulay: Optional[bool] = None) -> HilbertData:
    """``cohen_macaulay`` left as None means: decide from dimension and unmixedness of M.

    That automatic rule is only sound when M itself is the ideal of interest;
    callers working through an initial ideal pass an explicit value.
    """
    if M is None:
        if s is None:
            raise ValueError("variable count needed for the zero ideal")
    else:
        s = M.s
        if M.is_unit():
            raise ValueError("the unit ideal has an empty quotient")
    N = hilbert_numerator(M)
    h = list(N)
    mult = 0
    while True:
        q = _divide_one_minus_x(h)
        if q is None:
            break
        h = q
        mult += 1
    k = s - mult
    degree = sum(h)
    a_inv = len(h) - 1 - k
    data = HilbertData(s, k, degree, tuple(h), a_inv, 0, None, tuple(N))
    # reg_index: scan down from a + 1 while H agrees with the Hilbert polynomial
    n = max(a_inv + 1, 0)
    while n > 0 and data.hilbert_function(n - 1) == data.hilbert_polynomial(n - 1):
        n -= 1
    if cohen_macaulay is None and M is not None:
        cohen_macaulay = k == 0 or (k == 1 and M.is_unmixed())
    cm_reg = len(h) - 1 if cohen_macaulay else None
    return HilbertData(s, k, degree, tuple(h), a_inv, n, cm_reg, tuple(N))


def hilbert_function_monomial(M: MonomialIdeal | None, d: int, s: int | None = None) -> int:
    """Coefficient of x^d in N(x) / (1 - x)^s."""
    if d < 0:
        return 0
    s = M.s if M is not None else s
    N = hilbert_numerator(M)
    return sum(c * comb(d - i + s - 1, s - 1) for i, c in enumerate(N) if i <= d)


def hilbert_series_terms(N, s: int, upto: int) -> list:
    """H(0..upto) from a numerator over (1 - x)^s."""
    return [sum(c * comb(d - i + s - 1, s - 1) for i, c in enumerate(N) if i <= d)
            for d in range(upto + 1)]


def hilbert_data(I, cohen_macaulay: Optional[bool] = None) -> HilbertData:
    """Accepts a MonomialIdeal or an Ideal (which caches its own data)."""
    if isinstance(I, MonomialIdeal):
        return hilbert_data_monomial(I, cohen_macaulay=cohen_macaulay)
    return I.hilbert_data() if cohen_macaulay is None else I.hilbert_data(cohen_macaulay)


def hilbert_function(I, d: int) -> int:
    if isinstance(I, MonomialIdeal):
        return hilbert_function_monomial(I, d)
    return hilbert_function_monomial(I.initial_ideal(), d)
