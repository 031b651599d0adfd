"""Exact coefficient fields: the rationals and prime fields GF(p).

Field elements stay unboxed: ``int``/``Fraction`` for Q, ``int`` residues in
``[0, p)`` for GF(p).  A field object is a small strategy that normalizes raw
arithmetic results (``reduce``) and performs exact division, so polynomial and
series inner loops run on native numbers.  Floating point is rejected
everywhere.
"""

from __future__ import annotations

import functools
from fractions import Fraction

# Scalars handled by RationalField; GF(p) uses plain ints.
Scalar = int | Fraction

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, valid for every n below 3.3e24."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class RationalField:
    """The field Q.  Elements are ``int`` or ``Fraction``, always exact."""

    name = "Q"
    characteristic = 0
    zero = 0
    one = 1

    def coerce(self, value):
        if isinstance(value, bool) or not isinstance(value, (int, Fraction)):
            raise TypeError(f"not an exact rational: {value!r}")
        return _as_int(value) if isinstance(value, Fraction) else value

    def reduce(self, value):
        return value

    def reduce_coeffs(self, coeffs):
        return coeffs

    def div(self, a, b):
        if b == 0:
            raise ZeroDivisionError("zero divisor")
        return _as_int(Fraction(a) / b)

    def invert(self, a):
        return self.div(1, a)

    def format_scalar(self, value) -> str:
        return str(value)

    def parse_scalar(self, text: str):
        return _as_int(Fraction(text))

    def __repr__(self):
        return "QQ"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash(RationalField)


def _as_int(value: Fraction):
    # Keep denominator-1 values as plain ints: cheaper in later arithmetic.
    return value.numerator if value.denominator == 1 else value


class PrimeField:
    """The field GF(p), p prime.  Elements are int residues in [0, p)."""

    def __init__(self, p: int):
        if not isinstance(p, int) or not is_prime(p):
            raise ValueError(f"modulus must be prime, got {p!r}")
        self.p = p
        self.name = f"GF({p})"
        self.characteristic = p
        self.zero = 0
        self.one = 1 % p

    def coerce(self, value):
        if isinstance(value, bool) or not isinstance(value, int):
            raise TypeError(f"GF({self.p}) element must be an int: {value!r}")
        return value % self.p

    def reduce(self, value):
        return value % self.p

    def reduce_coeffs(self, coeffs):
        p = self.p
        return [c % p for c in coeffs]

    def div(self, a, b):
        p = self.p
        if b % p == 0:
            raise ZeroDivisionError("zero divisor")
        return a * pow(b, -1, p) % p

    def invert(self, a):
        return self.div(1, a)

    def format_scalar(self, value) -> str:
        return str(value)

    def parse_scalar(self, text: str):
        return int(text, 10) % self.p

    def __repr__(self):
        return f"GF({self.p})"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash((PrimeField, self.p))


QQ = RationalField()


@functools.lru_cache(maxsize=None)
def GF(p: int) -> PrimeField:
    """Cached constructor for GF(p); primality is checked once."""
    return PrimeField(p)


def check_same_field(a, b):
    """Mixed-field arithmetic is an error, never a coercion."""
    if a != b:
        raise ValueError(f"mixed fields: {a!r} and {b!r}")
