"""Exponent-vector monomials and monomial orders.

A monomial is a tuple of non-negative ints.  Orders are expressed as sort
keys: ``order.key(a) < order.key(b)`` iff ``a`` is smaller than ``b``.  All key
components are ints, so negating them componentwise reverses the order, which
is what the reduction heaps rely on.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Sequence

Monomial = tuple

ORDER_KINDS = ("lex", "grlex", "grevlex")


def degree(a: Monomial) -> int:
    return sum(a)


def mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def divides(a: Monomial, b: Monomial) -> bool:
    """True iff t^a divides t^b."""
    return all(x <= y for x, y in zip(a, b))


def quotient(b: Monomial, a: Monomial) -> Monomial:
    return tuple(y - x for x, y in zip(a, b))


def lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x if x > y else y for x, y in zip(a, b))


def gcd(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x if x < y else y for x, y in zip(a, b))


def coprime(a: Monomial, b: Monomial) -> bool:
    return not any(x and y for x, y in zip(a, b))


def monomials_of_degree(s: int, d: int):
    """All exponent vectors of length s and total degree d (lex-decreasing)."""
    if s == 1:
        yield (d,)
        return
    for first in range(d, -1, -1):
        for rest in monomials_of_degree(s - 1, d - first):
            yield (first,) + rest


def _lex(a):
    return a


def _grlex(a):
    return (sum(a),) + a


def _grevlex(a):
    return (sum(a),) + tuple(-x for x in reversed(a))


_KEYS = {"lex": _lex, "grlex": _grlex, "grevlex": _grevlex}


class MonomialOrder:
    """lex, grlex or grevlex with respect to a variable ranking.

    ``permutation[i]`` is the index of the i-th largest variable; the default
    is declaration order, t1 > t2 > ... > ts.
    """

    def __init__(self, kind: str = "grevlex", nvars: int = 1,
                 permutation: Sequence[int] | None = None):
        if kind not in _KEYS:
            raise ValueError(f"unknown monomial order {kind!r}")
        if permutation is None:
            permutation = tuple(range(nvars))
        permutation = tuple(permutation)
        if sorted(permutation) != list(range(nvars)):
            raise ValueError("variable permutation is not a permutation")
        self.kind = kind
        self.nvars = nvars
        self.permutation = permutation
        base = _KEYS[kind]
        if permutation == tuple(range(nvars)):
            raw = base
        else:
            perm = permutation

            def raw(a):
                return base(tuple(a[i] for i in perm))
        self.key = lru_cache(maxsize=1 << 18)(raw)

    def __repr__(self):
        if self.permutation == tuple(range(self.nvars)):
            return f"MonomialOrder({self.kind!r}, {self.nvars})"
        return f"MonomialOrder({self.kind!r}, {self.nvars}, {self.permutation})"

    def __eq__(self, other):
        return (isinstance(other, MonomialOrder) and self.kind == other.kind
                and self.permutation == other.permutation)

    def __hash__(self):
        return hash((self.kind, self.permutation))

    def __getstate__(self):
        return {"kind": self.kind, "nvars": self.nvars, "permutation": self.permutation}

    def __setstate__(self, state):
        self.__init__(state["kind"], state["nvars"], state["permutation"])

    def describe(self, names: Sequence[str]) -> str:
        ranked = " > ".join(names[i] for i in self.permutation)
        return f"{self.kind} ({ranked})"

    def neg_key(self, a: Monomial) -> tuple:
        return tuple(-c for c in self.key(a))


class EliminationOrder:
    """Block order: lex on the first ``k`` variables, then ``base`` on the rest."""

    def __init__(self, k: int, base: MonomialOrder):
        self.k = k
        self.base = base
        self.nvars = base.nvars + k
        self.kind = "elim"
        bkey = base.key

        def raw(a):
            return a[:k] + bkey(a[k:])
        self.key = lru_cache(maxsize=1 << 18)(raw)

    def __eq__(self, other):
        return (isinstance(other, EliminationOrder) and other.k == self.k
                and other.base == self.base)

    def __hash__(self):
        return hash(("elim", self.k, self.base))

    def neg_key(self, a):
        return tuple(-c for c in self.key(a))


def compare_monomials(a: Monomial, b: Monomial, order) -> int:
    """-1, 0 or 1 as a is less than, equal to or greater than b."""
    if len(a) != len(b):
        raise ValueError("exponent vectors of different length")
    ka, kb = order.key(tuple(a)), order.key(tuple(b))
    return (ka > kb) - (ka < kb)
