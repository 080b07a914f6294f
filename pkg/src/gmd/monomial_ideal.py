"""Monomial ideals as antichains of exponent vectors.

Nothing here touches coefficients; the same object serves every field.
"""

from __future__ import annotations

from functools import cached_property
from typing import Iterable

from .monomials import divides, gcd, lcm, quotient


def _minimal(gens: Iterable[tuple]) -> tuple:
    """Drop every monomial divisible by another; result sorted by degree then lex."""
    pool = sorted(set(tuple(g) for g in gens), key=lambda a: (sum(a), a))
    kept: list = []
    for g in pool:
        if not any(divides(k, g) for k in kept):
            kept.append(g)
    return tuple(kept)


class MonomialIdeal:
    """A nonzero monomial ideal in ``s`` variables given by its minimal generators."""

    __slots__ = ("s", "gens", "__dict__")

    def __init__(self, s: int, gens: Iterable[tuple], _minimal_ok: bool = False):
        gens = tuple(gens) if _minimal_ok else _minimal(gens)
        if not gens:
            raise ValueError("the zero ideal is not allowed here")
        for g in gens:
            if len(g) != s:
                raise ValueError("exponent vector length mismatch")
        self.s = s
        self.gens = gens

    @classmethod
    def unit(cls, s: int) -> "MonomialIdeal":
        return cls(s, [(0,) * s], True)

    @classmethod
    def maximal(cls, s: int) -> "MonomialIdeal":
        return cls(s, [tuple(int(i == j) for j in range(s)) for i in range(s)], True)

    @classmethod
    def variables(cls, s: int, support) -> "MonomialIdeal":
        return cls(s, [tuple(int(i == j) for j in range(s)) for i in sorted(support)], True)

    def __repr__(self):
        return f"MonomialIdeal({self.s}, {list(self.gens)})"

    def __eq__(self, other):
        return isinstance(other, MonomialIdeal) and self.s == other.s and set(self.gens) == set(other.gens)

    def __hash__(self):
        return hash((self.s, frozenset(self.gens)))

    def __len__(self):
        return len(self.gens)

    def is_unit(self) -> bool:
        return any(sum(g) == 0 for g in self.gens)

    def contains(self, m) -> bool:
        return any(divides(g, m) for g in self.gens)

    __contains__ = contains

    def contains_ideal(self, other: "MonomialIdeal") -> bool:
        return all(self.contains(g) for g in other.gens)

    def add(self, monos: Iterable[tuple]) -> "MonomialIdeal":
        return MonomialIdeal(self.s, list(self.gens) + [tuple(m) for m in monos])

    def __add__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        return self.add(other.gens)

    def colon(self, m) -> "MonomialIdeal":
        """(M : t^m) is generated by g / gcd(g, m)."""
        m = tuple(m)
        return MonomialIdeal(self.s, [quotient(g, gcd(g, m)) for g in self.gens])

    def colon_ideal(self, other: "MonomialIdeal") -> "MonomialIdeal":
        out = None
        for m in other.gens:
            c = self.colon(m)
            out = c if out is None else out.intersect(c)
        return out

    def intersect(self, other: "MonomialIdeal") -> "MonomialIdeal":
        return MonomialIdeal(self.s, [lcm(a, b) for a in self.gens for b in other.gens])

    def max_degree(self) -> int:
        return max(sum(g) for g in self.gens)

    def is_squarefree(self) -> bool:
        return all(max(g) <= 1 for g in self.gens)

    # ------------------------------------------------------ decompositions
    @cached_property
    def irreducible_components(self) -> tuple:
        return irreducible_decomposition(self)

    @cached_property
    def associated_primes(self) -> tuple:
        """Supports of the irreducible components, as sorted index tuples."""
        return tuple(sorted({tuple(sorted(c)) for c in self.irreducible_components},
                            key=lambda p: (len(p), p)))

    def minimal_primes(self) -> tuple:
        ps = self.associated_primes
        return tuple(p for p in ps if not any(set(q) < set(p) for q in ps))

    def height(self) -> int:
        return min(len(p) for p in self.associated_primes)

    def is_unmixed(self) -> bool:
        return len({len(p) for p in self.associated_primes}) == 1

    # ---------------------------------------------------- standard monomials
    def standard_monomials(self, d: int) -> list:
        """Degree-d monomials outside the ideal, lex-decreasing (t1 largest)."""
        if d < 0:
            return []
        s = self.s
        gens = self.gens
        out: list = []
        exps = [0] * s

        def rec(i, left, active):
            # active: generators still compatible with the prefix exps[:i]
            if i == s - 1:
                exps[i] = left
                e = tuple(exps)
                if not any(all(g[j] <= e[j] for j in range(i, s)) for g in active):
                    out.append(e)
                return
            for k in range(left, -1, -1):
                exps[i] = k
                nxt = [g for g in active if g[i] <= k]
                # a generator supported on the prefix alone already divides
                if any(not any(g[i + 1:]) for g in nxt):
                    continue
                rec(i + 1, left - k, nxt)

        rec(0, d, list(gens))
        return out

    def hilbert_function(self, d: int) -> int:
        from .hilbert import hilbert_function_monomial
        return hilbert_function_monomial(self, d)


def irreducible_decomposition(M: MonomialIdeal) -> tuple:
    """Irredundant irreducible components as dicts {variable index: exponent}.

    Generators are added one at a time.  Monomial ideals form a distributive
    lattice and (g) is the intersection of the pure powers t_i^{g_i}, so a
    component C either contains g or is replaced by the ideals C + (t_i^{g_i}).
    """
    if M.is_unit():
        return ()
    comps: list = [{}]
    for g in M.gens:
        support = [(i, e) for i, e in enumerate(g) if e]
        nxt = []
        for c in comps:
            if any(c.get(i, 0) and c[i] <= e for i, e in support):
                nxt.append(c)
                continue
            for i, e in support:
                d = dict(c)
                d[i] = min(d.get(i, e), e)
                nxt.append(d)
        comps = _irredundant(nxt)
    comps.sort(key=lambda c: (len(c), sorted(c.items())))
    return tuple(comps)


def _irredundant(comps: list) -> list:
    # an irreducible component is redundant iff it contains another component
    uniq = list({tuple(sorted(c.items())): c for c in comps}.values())
    uniq.sort(key=len)
    keep: list = []
    for a in uniq:
        if not any(_irr_contains(a, b) for b in keep):
            keep = [b for b in keep if not _irr_contains(b, a)]
            keep.append(a)
    return keep


def _irr_contains(big: dict, small: dict) -> bool:
    """True iff the irreducible ideal ``small`` is contained in ``big``."""
    return all(i in big and big[i] <= e for i, e in small.items())


def component_ideal(s: int, comp: dict) -> MonomialIdeal:
    return MonomialIdeal(s, [tuple(e if j == i else 0 for j in range(s)) for i, e in comp.items()])


def intersect_all(ideals: list) -> MonomialIdeal:
    out = ideals[0]
    for J in ideals[1:]:
        out = out.intersect(J)
    return out

