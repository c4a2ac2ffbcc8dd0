"""Exact scalar arithmetic over the rationals or a prime field GF(p).

Scalar values are plain Python objects: ``Fraction`` for Q and int
residues in ``range(p)`` for GF(p).  A ``Field`` instance supplies the
operations, so the polynomial layer stays field-agnostic.  Everything
is exact; no floats appear anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DivisorNotInvertible, ZeroInverse

Scalar = Fraction | int


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class Field:
    """The rationals (kind ``"Q"``) or a prime field (kind ``"GF"``, modulus p)."""

    kind: str
    p: int | None = None

    def __post_init__(self):
        if self.kind == "Q":
            if self.p is not None:
                raise ValueError("the rationals take no modulus")
        elif self.kind == "GF":
            if not isinstance(self.p, int) or not _is_prime(self.p):
                raise ValueError(f"GF modulus must be a prime, got {self.p!r}")
        else:
            raise ValueError(f"unknown field kind {self.kind!r}")

    def characteristic(self) -> int:
        return 0 if self.kind == "Q" else self.p

    # -- construction -----------------------------------------------------

    def zero(self) -> Scalar:
        return Fraction(0) if self.kind == "Q" else 0

    def one(self) -> Scalar:
        return Fraction(1) if self.kind == "Q" else 1

    def of(self, value) -> Scalar:
        """Coerce an int or Fraction into a canonical field value."""
        if self.kind == "Q":
            return Fraction(value)
        if isinstance(value, Fraction):
            return self.frac(value.numerator, value.denominator)
        return value % self.p

    def frac(self, num: int, den: int) -> Scalar:
        """The quotient num/den, if den is invertible."""
        if self.kind == "Q":
            if den == 0:
                raise DivisorNotInvertible("division by zero")
            return Fraction(num, den)
        if den % self.p == 0:
            raise DivisorNotInvertible(
                f"{num}/{den} has no meaning in GF({self.p}): denominator is 0 mod {self.p}"
            )
        return (num * self.inv(den % self.p)) % self.p

    # -- arithmetic --------------------------------------------------------

    def add(self, a: Scalar, b: Scalar) -> Scalar:
        return a + b if self.kind == "Q" else (a + b) % self.p

    def sub(self, a: Scalar, b: Scalar) -> Scalar:
        return a - b if self.kind == "Q" else (a - b) % self.p

    def mul(self, a: Scalar, b: Scalar) -> Scalar:
        return a * b if self.kind == "Q" else (a * b) % self.p

    def neg(self, a: Scalar) -> Scalar:
        return -a if self.kind == "Q" else (-a) % self.p

    def inv(self, a: Scalar) -> Scalar:
        if self.is_zero(a):
            raise ZeroInverse("zero has no multiplicative inverse")
        if self.kind == "Q":
            return Fraction(1) / a
        return pow(a, self.p - 2, self.p)

    def div(self, a: Scalar, b: Scalar) -> Scalar:
        return self.mul(a, self.inv(b))

    def is_zero(self, a: Scalar) -> bool:
        return a == 0

    # -- rendering ---------------------------------------------------------

    def to_str(self, a: Scalar) -> str:
        return str(a)

    def split_sign(self, a: Scalar) -> tuple[bool, Scalar]:
        """(negative?, magnitude) used by the polynomial printer.

        GF(p) residues are canonical in 0..p-1 and never print a sign.
        """
        if self.kind == "Q" and a < 0:
            return True, -a
        return False, a


QQ = Field("Q")


def GF(p: int) -> Field:
    return Field("GF", p)
