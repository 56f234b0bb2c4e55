"""Exact arithmetic in a real quadratic extension Q(sqrt(d)).

Scalars are u + v*sqrt(d) with rational u, v and a fixed positive
rational, non-square radicand d.  Signs and comparisons are decided
exactly by comparing u^2 against v^2 d, so no floating point enters the
factorization identities built on top of this.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction


def _is_square(x: Fraction) -> bool:
    if x < 0:
        return False
    n, d = x.numerator, x.denominator
    return math.isqrt(n) ** 2 == n and math.isqrt(d) ** 2 == d


@dataclass(frozen=True)
class QuadExtScalar:
    u: Fraction
    v: Fraction
    d: Fraction

    def __post_init__(self):
        object.__setattr__(self, "u", Fraction(self.u))
        object.__setattr__(self, "v", Fraction(self.v))
        object.__setattr__(self, "d", Fraction(self.d))
        if self.d <= 0:
            raise ValueError(f"radicand must be positive, got {self.d}")

    @classmethod
    def rational(cls, x, d) -> "QuadExtScalar":
        return cls(Fraction(x), Fraction(0), Fraction(d))

    def _coerce(self, other) -> "QuadExtScalar":
        if isinstance(other, QuadExtScalar):
            if other.d != self.d:
                raise ValueError(f"mixed radicands {self.d} and {other.d}")
            return other
        return QuadExtScalar.rational(Fraction(other), self.d)

    def __add__(self, other):
        o = self._coerce(other)
        return QuadExtScalar(self.u + o.u, self.v + o.v, self.d)

    __radd__ = __add__

    def __neg__(self):
        return QuadExtScalar(-self.u, -self.v, self.d)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        return QuadExtScalar(self.u * o.u + self.v * o.v * self.d,
                             self.u * o.v + self.v * o.u, self.d)

    __rmul__ = __mul__

    def sign(self) -> int:
        """Exact sign of u + v*sqrt(d)."""
        if self.v == 0:
            return 0 if self.u == 0 else (1 if self.u > 0 else -1)
        if self.u == 0:
            return 1 if self.v > 0 else -1
        if self.u > 0 and self.v > 0:
            return 1
        if self.u < 0 and self.v < 0:
            return -1
        gap = self.u * self.u - self.v * self.v * self.d
        if gap == 0:
            return 0  # possible only when d is a rational square
        big_is_u = gap > 0
        return (1 if self.u > 0 else -1) if big_is_u else (1 if self.v > 0 else -1)

    def __eq__(self, other):
        try:
            o = self._coerce(other)
        except (ValueError, TypeError):
            return NotImplemented
        diff = self - o
        if diff.u == 0 and diff.v == 0:
            return True
        # u + v sqrt(d) = 0 with v != 0 needs d = (u/v)^2 a rational square
        return diff.sign() == 0

    def __lt__(self, other):
        return (self - self._coerce(other)).sign() < 0

    def __le__(self, other):
        return (self - self._coerce(other)).sign() <= 0

    def __gt__(self, other):
        return (self - self._coerce(other)).sign() > 0

    def __ge__(self, other):
        return (self - self._coerce(other)).sign() >= 0

    def __hash__(self):
        return hash((self.u, self.v, self.d))

    def is_rational(self) -> bool:
        return self.v == 0 or _is_square(self.d)

    def __float__(self) -> float:
        return float(self.u) + float(self.v) * math.sqrt(float(self.d))

    def __repr__(self) -> str:
        return f"({self.u} + {self.v}*sqrt({self.d}))"
