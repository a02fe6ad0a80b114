"""2x2 integer matrices up to sign, acting on the extended real line by Moebius maps."""

from __future__ import annotations

import re
from fractions import Fraction

from .surd import INF, QuadSurd


class Mat:
    """Integer matrix [[a, b], [c, d]] stored with its first nonzero entry positive.

    Equality is projective: M and -M are the same element. Matrices with
    |det| != 1 are allowed for evaluation only; ``is_unimodular`` tells them apart.
    """

    __slots__ = ("a", "b", "c", "d")

    def __init__(self, a: int, b: int, c: int, d: int):
        for v in (a, b, c, d):
            if v:
                if v < 0:
                    a, b, c, d = -a, -b, -c, -d
                break
        self.a, self.b, self.c, self.d = a, b, c, d

    @classmethod
    def parse(cls, text: str) -> "Mat":
        nums = re.findall(r"-?\d+", text)
        if len(nums) != 4 or not re.fullmatch(r"\s*\[\s*\[[-\d\s,]+\]\s*,\s*\[[-\d\s,]+\]\s*\]\s*", text):
            raise ValueError(f"bad matrix literal: {text!r}")
        return cls(*map(int, nums))

    def rows(self):
        return [[self.a, self.b], [self.c, self.d]]

    def __repr__(self):
        return f"Mat({self.a}, {self.b}, {self.c}, {self.d})"

    def __str__(self):
        return f"[[{self.a},{self.b}],[{self.c},{self.d}]]"

    def __eq__(self, other):
        return isinstance(other, Mat) and (self.a, self.b, self.c, self.d) == (other.a, other.b, other.c, other.d)

    def __hash__(self):
        return hash((self.a, self.b, self.c, self.d))

    def __matmul__(self, other: "Mat") -> "Mat":
        return Mat(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def __pow__(self, n: int) -> "Mat":
        base = self if n >= 0 else self.inverse()
        n = abs(n)
        out = IDENTITY
        while n:
            if n & 1:
                out = out @ base
            base = base @ base
            n >>= 1
        return out

    def det(self) -> int:
        return self.a * self.d - self.b * self.c

    def trace(self) -> int:
        # only defined up to sign projectively; the stored sign is canonical
        return self.a + self.d

    def is_unimodular(self) -> bool:
        return abs(self.det()) == 1

    def inverse(self) -> "Mat":
        """Inverse up to sign (the adjugate), valid for unimodular matrices."""
        return Mat(self.d, -self.b, -self.c, self.a)

    def is_identity(self) -> bool:
        return self == IDENTITY

    def __call__(self, x):
        return mobius_apply(self, x)


IDENTITY = Mat(1, 0, 0, 1)


def mobius_apply(m: Mat, x):
    """(a x + b) / (c x + d) on Fractions, ints, QuadSurds and infinity."""
    a, b, c, d = m.a, m.b, m.c, m.d
    if x is INF:
        return INF if c == 0 else Fraction(a, c)
    if isinstance(x, QuadSurd):
        num = x * a + b
        den = x * c + d
        return num / den
    x = Fraction(x)
    num, den = a * x + b, c * x + d
    if den == 0:
        return INF
    return num / den


def translation(k: int) -> Mat:
    return Mat(1, k, 0, 1)
