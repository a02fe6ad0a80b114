"""Ends of the Farey tree as eventually periodic binary words.

Bit 0 is a left turn (L) and bit 1 a double turn (L^2). A nonnegative real
[n0; n1, n2, ...] is the word 0^n0 1^n1 0^n2 ...; a negative real x is stored
as the word of -1/x behind a leading S (``neg=True``).
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Iterable, Iterator

from .cf import (
    ContinuedFraction,
    DomainError,
    cf_neg,
    cf_recip,
    periodic_cf_to_surd,
    rational_to_cf,
    to_cf,
)
from .matrix import IDENTITY, Mat, mobius_apply
from .surd import INF, QuadSurd


def _minimal(period):
    n = len(period)
    for k in range(1, n + 1):
        if n % k == 0 and period[:k] * (n // k) == period:
            return period[:k]
    return period


@dataclass(frozen=True)
class BoundaryWord:
    neg: bool
    head: tuple
    period: tuple

    def __post_init__(self):
        head = list(self.head)
        per = list(self.period)
        if not per:
            raise ValueError("tail period must be nonempty")
        if any(b not in (0, 1) for b in head + per):
            raise ValueError("bits must be 0 or 1")
        per = _minimal(per)
        while head and head[-1] == per[-1]:
            head.pop()
            per = per[-1:] + per[:-1]
        object.__setattr__(self, "head", tuple(head))
        object.__setattr__(self, "period", tuple(per))

    @classmethod
    def parse(cls, text: str) -> "BoundaryWord":
        s = text.replace(" ", "")
        m = re.fullmatch(r"(-?)([01]*)(?:\(([01]+)\)|([01])\.\.\.)", s)
        if not m:
            raise ValueError(f"bad word literal: {text!r}")
        sign, head, per, const = m.groups()
        if const is not None:
            per = const
        return cls(bool(sign), tuple(map(int, head)), tuple(map(int, per)))

    def __str__(self):
        h = "".join(map(str, self.head))
        if len(self.period) == 1:
            body = h + f"{self.period[0]}..."
        else:
            body = h + "(" + "".join(map(str, self.period)) + ")"
        return ("-" if self.neg else "") + body

    def is_rational(self) -> bool:
        return len(self.period) == 1

    def is_noble(self) -> bool:
        return self.period in ((0, 1), (1, 0))

    def bit(self, i: int) -> int:
        if i < len(self.head):
            return self.head[i]
        return self.period[(i - len(self.head)) % len(self.period)]

    def bits(self) -> Iterator[int]:
        return itertools.chain(self.head, itertools.cycle(self.period))

    def prefix(self, n: int) -> tuple:
        return tuple(self.bit(i) for i in range(n))

    def unsigned(self) -> "BoundaryWord":
        return BoundaryWord(False, self.head, self.period)

    def negated(self) -> "BoundaryWord":
        """Bitwise negation (the map x -> 1/x on the positive sector)."""
        return BoundaryWord(self.neg, tuple(1 - b for b in self.head), tuple(1 - b for b in self.period))


PHI_WORD = BoundaryWord(False, (), (0, 1))
PHI_STAR_WORD = BoundaryWord(False, (), (1, 0))
ZERO_TAIL = (0,)
ONE_TAIL = (1,)


def quotient_bits(quotients: Iterable[int]) -> Iterator[int]:
    """Bits 0^n0 1^n1 0^n2 ... of a nonnegative continued fraction."""
    bit = 0
    for i, a in enumerate(quotients):
        if i == 0 and a < 0:
            raise DomainError("quotient_bits needs a nonnegative number")
        for _ in range(a):
            yield bit
        bit ^= 1


def _blocks(quotients, start_bit=0):
    out = []
    bit = start_bit
    for a in quotients:
        out.extend([bit] * a)
        bit ^= 1
    return out, bit


def cf_to_word(cf: ContinuedFraction) -> BoundaryWord:
    if cf.kind == "stream":
        raise DomainError("use quotient_bits for streams")
    first = next(cf.quotients())
    if cf.kind == "finite":
        return number_to_word(cf.value())
    if first < 0:
        y = cf_recip(cf_neg(cf))
        return BoundaryWord(True, *_positive_periodic_bits(y))
    return BoundaryWord(False, *_positive_periodic_bits(cf))


def _positive_periodic_bits(cf):
    head, bit = _blocks(cf.preperiod)
    per = list(cf.period)
    if len(per) % 2:
        per = per * 2
    tail, _ = _blocks(per, bit)
    return tuple(head), tuple(tail)


def _rational_word(q: Fraction) -> BoundaryWord:
    """Default representative a.0.1^w style: blocks of the canonical CF, then the opposite constant."""
    terms = rational_to_cf(q).terms
    head, nxt = _blocks(terms)
    return BoundaryWord(False, tuple(head), (nxt,))


def number_to_word(x) -> BoundaryWord:
    if x is INF:
        return BoundaryWord(False, (), ZERO_TAIL)
    if isinstance(x, QuadSurd):
        return cf_to_word(to_cf(x))
    x = Fraction(x)
    if x >= 0:
        return _rational_word(x)
    w = _rational_word(-1 / x)
    return BoundaryWord(True, w.head, w.period)


def _runs(bits):
    runs = []
    for b in bits:
        if runs and runs[-1][0] == b:
            runs[-1][1] += 1
        else:
            runs.append([b, 1])
    return runs


def _run_quotients(bits):
    runs = _runs(bits)
    qs = [n for _, n in runs]
    if runs and runs[0][0] == 1:
        qs.insert(0, 0)
    return qs


def _unsigned_value(w: BoundaryWord):
    if w.is_rational():
        c = w.period[0]
        head = list(w.head)
        # the final (infinite) run is made of c; drop the matching trailing bits
        while head and head[-1] == c:
            head.pop()
        qs = _run_quotients(head)
        if not qs:
            # the whole word is constant
            return INF if c == 0 else Fraction(0)
        if (len(qs) % 2 == 1) != (c == 1):
            # the constant tail would extend the last run: impossible after stripping
            raise AssertionError("run parity mismatch")
        return ContinuedFraction.finite(qs).value()
    return periodic_cf_to_surd(_unsigned_periodic_cf(w))


def _unsigned_periodic_cf(w: BoundaryWord) -> ContinuedFraction:
    n, p = len(w.head), len(w.period)
    i = next(j for j in range(n + 1, n + p + 1) if w.bit(j - 1) != w.bit(j))
    head = [w.bit(j) for j in range(i)]
    per = [w.bit(j) for j in range(i, i + p)]
    pre = _run_quotients(head)
    per_q = [k for _, k in _runs(per)]
    return ContinuedFraction.periodic(pre, per_q)


def word_value(w: BoundaryWord):
    """The point of the extended real line the word converges to."""
    v = _unsigned_value(w.unsigned())
    if not w.neg:
        return v
    if v is INF:
        return Fraction(0)
    if v == 0:
        return INF
    return -1 / v


def word_to_cf(w: BoundaryWord):
    """Continued fraction of the word (run-length decoding); infinity is returned as ``INF``."""
    if w.is_rational():
        v = word_value(w)
        return INF if v is INF else to_cf(v)
    cf = _unsigned_periodic_cf(w.unsigned())
    if w.neg:
        # -1/y
        cf = cf_neg(cf_recip(cf))
    return cf


def xor_words(a: BoundaryWord, b: BoundaryWord) -> BoundaryWord:
    """Termwise XOR of the unsigned parts (the sign of ``a`` is kept)."""
    n = max(len(a.head), len(b.head))
    p = lcm(len(a.period), len(b.period))
    head = tuple(a.bit(i) ^ b.bit(i) for i in range(n))
    per = tuple(a.bit(i) ^ b.bit(i) for i in range(n, n + p))
    return BoundaryWord(a.neg, head, per)


def rational_two_words(q) -> tuple[BoundaryWord, BoundaryWord]:
    """(from-below, from-above) words of a finite rational."""
    if q is INF:
        raise DomainError("infinity is handled separately")
    q = Fraction(q)
    if q == 0:
        return BoundaryWord(True, (), ZERO_TAIL), BoundaryWord(False, (), ONE_TAIL)
    neg = q < 0
    y = -1 / q if neg else q
    terms = list(rational_to_cf(y).terms)
    h1, nxt = _blocks(terms)
    w_a = BoundaryWord(neg, tuple(h1), (nxt,))
    alt = terms[:-1] + [terms[-1] - 1, 1]
    h2, nxt2 = _blocks(alt)
    w_b = BoundaryWord(neg, tuple(h2), (nxt2,))
    # increasing the last quotient moves up iff its index is even
    above_is_a = (len(terms) - 1) % 2 == 0
    return (w_b, w_a) if above_is_a else (w_a, w_b)


@dataclass(frozen=True)
class FareyInterval:
    lo: object
    hi: object

    def __post_init__(self):
        if not is_unimodular_pair(self.lo, self.hi):
            raise ValueError(f"[{self.lo}, {self.hi}] is not a Farey interval")

    def contains(self, x) -> bool:
        if self.hi is INF:
            return x is INF or x >= self.lo
        if x is INF:
            return False
        return self.lo <= x <= self.hi

    def width(self):
        return INF if self.hi is INF else self.hi - self.lo

    def __str__(self):
        return f"[{self.lo}, {self.hi}]"


def _pq(x):
    if x is INF:
        return 1, 0
    x = Fraction(x)
    return x.numerator, x.denominator


def is_unimodular_pair(a, b) -> bool:
    p, q = _pq(a)
    r, s = _pq(b)
    return abs(p * s - q * r) == 1


BIT_MATRICES = {0: Mat(1, 1, 0, 1), 1: Mat(1, 0, 1, 1)}  # x+1 and x/(x+1)


def prefix_matrix(bits: Iterable[int]) -> Mat:
    m = IDENTITY
    for b in bits:
        m = m @ BIT_MATRICES[b]
    return m


def interval_of_prefix(head: Iterable[int], neg: bool = False) -> FareyInterval:
    """All reals whose word begins with ``head`` (after the optional S)."""
    g = prefix_matrix(head)
    lo, hi = mobius_apply(g, Fraction(0)), mobius_apply(g, INF)
    if neg:
        lo, hi = _neg_recip(lo), _neg_recip(hi)
        if hi is INF or (lo is not INF and lo > hi):
            lo, hi = hi, lo
    if lo is INF:
        lo, hi = hi, lo
    return FareyInterval(lo, hi)


def _neg_recip(x):
    if x is INF:
        return Fraction(0)
    if x == 0:
        return INF
    return -1 / x


def word_cmp(a: BoundaryWord, b: BoundaryWord, depth: int = 4096) -> int:
    """Order of the points by comparing words (0 is the upper branch at every vertex)."""
    if a.neg != b.neg:
        return -1 if a.neg else 1
    for i in range(depth):
        x, y = a.bit(i), b.bit(i)
        if x != y:
            return 1 if x == 0 else -1
    return 0
