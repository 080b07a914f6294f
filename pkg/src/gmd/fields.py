"""Coefficient fields: prime fields GF(p) and the rationals QQ."""

from __future__ import annotations

from fractions import Fraction
from itertools import product

try:  # gmpy2 rationals are several times faster than Fraction
    from gmpy2 import mpq as _rational
except ImportError:  # pragma: no cover
    _rational = Fraction


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    k = 3
    while k * k <= n:
        if n % k == 0:
            return False
        k += 2
    return True


class PrimeField:
    """GF(p); elements are plain ints in [0, p)."""

    finite = True

    def __init__(self, p: int):
        if not is_prime(p):
            raise ValueError(f"composite characteristic {p}")
        self.p = p
        self.zero = 0
        self.one = 1

    def __repr__(self):
        return f"GF({self.p})"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    @property
    def characteristic(self) -> int:
        return self.p

    @property
    def order(self) -> int:
        return self.p

    def __call__(self, value) -> int:
        if isinstance(value, Fraction):
            return self(value.numerator) * self.inv(self(value.denominator)) % self.p
        return int(value) % self.p

    def norm(self, a: int) -> int:
        return a % self.p

    def inv(self, a: int) -> int:
        a %= self.p
        if a == 0:
            raise ZeroDivisionError("inverse of zero in GF(%d)" % self.p)
        return pow(a, self.p - 2, self.p)

    def div(self, a, b):
        return a * self.inv(b) % self.p

    def elements(self):
        return range(self.p)

    def vectors(self, n: int):
        """All length-n vectors over the field, in lexicographic order."""
        return product(range(self.p), repeat=n)

    def to_str(self, a) -> str:
        return str(a)


class RationalField:
    """QQ with arbitrary-precision rationals."""

    finite = False
    characteristic = 0

    def __init__(self):
        self.zero = _rational(0)
        self.one = _rational(1)

    def __repr__(self):
        return "QQ"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")

    def __call__(self, value):
        if isinstance(value, Fraction):
            return _rational(value.numerator, value.denominator)
        return _rational(value)

    @staticmethod
    def norm(a):
        return a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero in QQ")
        return 1 / _rational(a)

    def div(self, a, b):
        return _rational(a) / b

    def elements(self):
        raise TypeError("enumeration requires finite field")

    def vectors(self, n: int):
        raise TypeError("enumeration requires finite field")

    def to_str(self, a) -> str:
        return str(a)


QQ = RationalField()


def GF(p: int) -> PrimeField:
    return PrimeField(p)
