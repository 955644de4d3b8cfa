"""Exact points on the unit circle.

Every evaluation point used by the signature machinery is a root of unity, so
angles are stored as reduced fractions num/den of a full turn: the angle a/m
represents the complex number exp(2*pi*i*a/m).  Keeping them exact is what
makes jump detection exact; there is deliberately no floating-point angle
type.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ._intutil import gcd, mod


@dataclass(frozen=True)
class RationalAngle:
    """The root of unity exp(2*pi*i*num/den), stored reduced with 0 <= num < den.

    Construction normalizes: any integer numerator is taken mod den and the
    fraction is reduced, so ``RationalAngle(-3, 10) == RationalAngle(7, 10)``.
    den == 1 is exactly the trivial angle (the number 1).
    """

    num: int
    den: int

    def __post_init__(self):
        if self.den == 0:
            raise ValueError("angle denominator must be nonzero")
        if self.den < 0:
            raise ValueError("angle denominator must be positive")
        num = mod(self.num, self.den)
        g = gcd(num, self.den)
        object.__setattr__(self, "num", num // g)
        object.__setattr__(self, "den", self.den // g)

    @classmethod
    def parse(cls, text: str) -> "RationalAngle":
        """Parse the text form "a/m"; unreduced input is normalized."""
        parts = text.strip().split("/")
        if len(parts) != 2:
            raise ValueError(f"expected an angle of the form 'a/m', got {text!r}")
        try:
            a, m = int(parts[0]), int(parts[1])
        except ValueError:
            raise ValueError(f"expected integers in 'a/m', got {text!r}") from None
        return cls(a, m)

    @property
    def is_trivial(self) -> bool:
        return self.den == 1

    @property
    def order(self) -> int:
        """Multiplicative order of the represented root of unity."""
        return self.den

    def power(self, k: int) -> "RationalAngle":
        """The angle of omega**k; k = -1 is complex conjugation."""
        return RationalAngle(self.num * k, self.den)

    def conjugate(self) -> "RationalAngle":
        return self.power(-1)

    def as_fraction(self) -> Fraction:
        return Fraction(self.num, self.den)

    def __str__(self) -> str:
        return f"{self.num}/{self.den}"


def normalize(a: int, m: int) -> RationalAngle:
    """Reduced representative of the angle a/m; m >= 1, any integer a."""
    return RationalAngle(a, m)


def power(theta: RationalAngle, k: int) -> RationalAngle:
    return theta.power(k)


def order(theta: RationalAngle) -> int:
    return theta.order
