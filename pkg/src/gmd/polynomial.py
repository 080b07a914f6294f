"""Polynomial rings and exact multivariate polynomials."""

from __future__ import annotations

from typing import Iterable, Mapping, Sequence

from . import monomials as mono
from .fields import QQ, PrimeField, RationalField
from .monomials import MonomialOrder


class PolyRing:
    """K[t_1, ..., t_s] with a fixed monomial order."""

    def __init__(self, variables: Sequence[str], field=QQ, order: str | MonomialOrder = "grevlex"):
        variables = tuple(variables)
        if not variables:
            raise ValueError("a ring needs at least one variable")
        if any(not v for v in variables):
            raise ValueError("empty variable name")
        if len(set(variables)) != len(variables):
            dup = next(v for v in variables if variables.count(v) > 1)
            raise ValueError(f"duplicate variable {dup!r}")
        if isinstance(order, str):
            order = MonomialOrder(order, len(variables))
        if order.nvars != len(variables):
            raise ValueError("order and variable count disagree")
        self.variables = variables
        self.field = field
        self.order = order

    @property
    def s(self) -> int:
        return len(self.variables)

    ngens = s

    def __repr__(self):
        return f"PolyRing({self.field!r}[{','.join(self.variables)}], {self.order.kind})"

    def __str__(self):
        text = f"ring {self.field!r}[{','.join(self.variables)}] order={self.order.kind}"
        if self.order.permutation != tuple(range(self.s)):
            text += " vars=" + ",".join(self.variables[i] for i in self.order.permutation)
        return text

    def __eq__(self, other):
        return (isinstance(other, PolyRing) and self.variables == other.variables
                and self.field == other.field and self.order == other.order)

    def __hash__(self):
        return hash((self.variables, self.field, self.order))

    def with_order(self, order: str | MonomialOrder, permutation=None) -> "PolyRing":
        if isinstance(order, str):
            order = MonomialOrder(order, self.s, permutation)
        return PolyRing(self.variables, self.field, order)

    def describe_order(self) -> str:
        return self.order.describe(self.variables)

    # constructors
    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return self.constant(1)

    def constant(self, c) -> "Polynomial":
        c = self.field(c)
        return Polynomial(self, {(0,) * self.s: c} if c else {})

    def gen(self, i: int) -> "Polynomial":
        e = [0] * self.s
        e[i] = 1
        return Polynomial(self, {tuple(e): self.field.one})

    def gens(self) -> list["Polynomial"]:
        return [self.gen(i) for i in range(self.s)]

    def var(self, name: str) -> "Polynomial":
        return self.gen(self.variables.index(name))

    def monomial(self, exps, coeff=1) -> "Polynomial":
        exps = tuple(exps)
        if len(exps) != self.s:
            raise ValueError("exponent vector length mismatch")
        c = self.field(coeff)
        return Polynomial(self, {exps: c} if c else {})

    def from_terms(self, terms: Mapping | Iterable) -> "Polynomial":
        """Build from ``{exps: coeff}`` or ``[(coeff, exps), ...]``; coefficients reduced."""
        out: dict = {}
        items = terms.items() if isinstance(terms, Mapping) else ((e, c) for c, e in terms)
        norm = self.field
        for e, c in items:
            e = tuple(e)
            v = norm(out.get(e, 0) + norm(c))
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return Polynomial(self, out)

    def parse(self, text: str) -> "Polynomial":
        from .parsing import parse_polynomial
        return parse_polynomial(text, self)

    def monomial_str(self, e) -> str:
        parts = []
        for name, k in zip(self.variables, e):
            if k == 1:
                parts.append(name)
            elif k > 1:
                parts.append(f"{name}^{k}")
        return "*".join(parts) if parts else "1"


class Polynomial:
    """Immutable polynomial; ``terms`` maps exponent tuples to nonzero coefficients."""

    __slots__ = ("ring", "_terms", "_sorted", "_hash")

    def __init__(self, ring: PolyRing, terms: dict):
        self.ring = ring
        self._terms = terms
        self._sorted = None
        self._hash = None

    # ------------------------------------------------------------------ access
    @property
    def terms(self) -> dict:
        return self._terms

    def sorted_terms(self) -> list[tuple]:
        """(coefficient, exponents) pairs, strictly decreasing in the ring order."""
        if self._sorted is None:
            key = self.ring.order.key
            self._sorted = [(self._terms[e], e)
                            for e in sorted(self._terms, key=key, reverse=True)]
        return self._sorted

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    @property
    def leading_monomial(self):
        if not self._terms:
            raise ValueError("zero polynomial has no leading monomial")
        return self.sorted_terms()[0][1]

    @property
    def leading_coefficient(self):
        if not self._terms:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.sorted_terms()[0][0]

    def degree(self) -> int:
        if not self._terms:
            return -1
        return max(sum(e) for e in self._terms)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self._terms}) <= 1

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def monic(self) -> "Polynomial":
        if not self._terms:
            return self
        f = self.ring.field
        inv = f.inv(self.leading_coefficient)
        return Polynomial(self.ring, {e: f.norm(c * inv) for e, c in self._terms.items()})

    def evaluate(self, point: Sequence):
        field = self.ring.field
        total = field.zero
        for e, c in self._terms.items():
            v = c
            for x, k in zip(point, e):
                if k:
                    v = v * x ** k
            total = total + v
        return field.norm(total)

    # -------------------------------------------------------------- arithmetic
    def _check(self, other):
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise ValueError("ring mismatch")
            return other
        return self.ring.constant(other)

    def __add__(self, other):
        other = self._check(other)
        norm = self.ring.field.norm
        out = dict(self._terms)
        for e, c in other._terms.items():
            v = norm(out.get(e, 0) + c)
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return Polynomial(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        norm = self.ring.field.norm
        return Polynomial(self.ring, {e: norm(-c) for e, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-self._check(other))

    def __rsub__(self, other):
        return self._check(other) - self

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            c = self.ring.field(other)
            if not c:
                return self.ring.zero()
            norm = self.ring.field.norm
            return Polynomial(self.ring, {e: norm(v * c) for e, v in self._terms.items()})
        other = self._check(other)
        norm = self.ring.field.norm
        out: dict = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return Polynomial(self.ring, {e: v for e, v in ((e, norm(v)) for e, v in out.items()) if v})

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative exponent")
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self._terms == other._terms
        if other == 0:
            return not self._terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __repr__(self):
        return f"Polynomial({self})"

    def __str__(self):
        if not self._terms:
            return "0"
        ring = self.ring
        field = ring.field
        out = []
        for c, e in self.sorted_terms():
            neg = False
            if isinstance(field, RationalField) and c < 0:
                neg, c = True, -c
            m = ring.monomial_str(e)
            if m == "1":
                body = str(c)
            elif c == 1:
                body = m
            else:
                body = f"{c}*{m}"
            if not out:
                out.append("-" + body if neg else body)
            else:
                out.append(("- " if neg else "+ ") + body)
        return " ".join(out)


def linear_form(ring: PolyRing, coeffs: Sequence) -> Polynomial:
    return ring.from_terms({tuple(int(i == j) for j in range(ring.s)): c
                            for i, c in enumerate(coeffs) if ring.field(c)})


def is_prime_field(ring: PolyRing) -> bool:
    return isinstance(ring.field, PrimeField)


__all__ = ["PolyRing", "Polynomial", "linear_form", "mono", "is_prime_field"]
