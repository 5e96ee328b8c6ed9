"""Exact scalar arithmetic: the rationals and prime fields F_p.

A field descriptor carries the operations; scalars themselves are plain
values (Fraction for the rationals, int in [0, p) for F_p).  No floating
point anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import ParseError


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class Rationals:
    """Descriptor for exact rational scalars (fractions in lowest terms)."""

    @property
    def label(self) -> str:
        return "q"

    @property
    def zero(self):
        return Fraction(0)

    @property
    def one(self):
        return Fraction(1)

    def of(self, value):
        return Fraction(value)

    def parse(self, text: str):
        try:
            return Fraction(text)
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"invalid rational coefficient {text!r}") from exc

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return Fraction(1) / a

    def sort_key(self, a):
        return a

    def to_str(self, a) -> str:
        return str(a)


@dataclass(frozen=True)
class PrimeField:
    """Descriptor for the prime field F_p, scalars stored as ints in [0, p)."""

    p: int

    def __post_init__(self):
        if self.p >= 2**31:
            raise ValueError(f"prime {self.p} too large (must be < 2^31)")
        if not _is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")

    @property
    def label(self) -> str:
        return f"fp:{self.p}"

    @property
    def zero(self):
        return 0

    @property
    def one(self):
        return 1

    def of(self, value):
        if isinstance(value, Fraction):
            den = value.denominator % self.p
            if den == 0:
                raise ZeroDivisionError(f"denominator divisible by {self.p}")
            return value.numerator * pow(den, -1, self.p) % self.p
        return int(value) % self.p

    def parse(self, text: str):
        try:
            return self.of(Fraction(text))
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"invalid coefficient {text!r} over F_{self.p}") from exc

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return a * b % self.p

    def neg(self, a):
        return -a % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, -1, self.p)

    def sort_key(self, a):
        return a

    def to_str(self, a) -> str:
        return str(a)


RATIONALS = Rationals()


def field_from_label(label: str):
    """Parse a field flag: ``q`` for the rationals, ``fp:P`` for F_P."""
    if label == "q":
        return RATIONALS
    if label.startswith("fp:"):
        try:
            p = int(label[3:])
        except ValueError as exc:
            raise ParseError(f"invalid field label {label!r}") from exc
        try:
            return PrimeField(p)
        except ValueError as exc:
            raise ParseError(str(exc)) from exc
    raise ParseError(f"invalid field label {label!r} (expected 'q' or 'fp:P')")
