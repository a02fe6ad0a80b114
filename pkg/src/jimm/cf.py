"""Regular continued fractions: finite, eventually periodic, and lazy streams."""

from __future__ import annotations

import itertools
from fractions import Fraction
from math import isqrt
from typing import Callable, Iterable, Iterator

from .matrix import IDENTITY, Mat, mobius_apply
from .surd import INF, QuadSurd, fib


class DomainError(ValueError):
    """An input outside the domain of an operation (rational where irrational is needed, etc.)."""


def _check_tail(qs: Iterable[int]):
    for a in qs:
        if a < 1:
            raise ValueError(f"partial quotients after the first must be >= 1, got {a}")


def _minimal_period(period: list[int]) -> list[int]:
    n = len(period)
    for k in range(1, n + 1):
        if n % k == 0 and period[:k] * (n // k) == period:
            return period[:k]
    return period


class ContinuedFraction:
    """A regular continued fraction [a0; a1, a2, ...].

    ``kind`` is "finite", "periodic" or "stream". The first quotient may be any
    integer; all later ones are >= 1. Finite and periodic values are kept in a
    canonical form so that == means equality of the numbers they denote.
    """

    __slots__ = ("kind", "terms", "preperiod", "period", "_source", "label")

    def __init__(self, kind, terms=(), preperiod=(), period=(), source=None, label=None):
        self.kind = kind
        self.terms = tuple(terms)
        self.preperiod = tuple(preperiod)
        self.period = tuple(period)
        self._source = source
        self.label = label

    # constructors -----------------------------------------------------------------

    @classmethod
    def finite(cls, terms: Iterable[int]) -> "ContinuedFraction":
        t = [int(a) for a in terms]
        if not t:
            raise ValueError("empty continued fraction")
        _check_tail(t[1:])
        if len(t) > 1 and t[-1] == 1:
            t.pop()
            t[-1] += 1
        return cls("finite", terms=t)

    @classmethod
    def periodic(cls, preperiod: Iterable[int], period: Iterable[int]) -> "ContinuedFraction":
        pre = [int(a) for a in preperiod]
        per = [int(a) for a in period]
        if not per:
            raise ValueError("period must be nonempty")
        _check_tail(pre[1:])
        _check_tail(per)
        per = _minimal_period(per)
        while pre and pre[-1] == per[-1]:
            pre.pop()
            per = per[-1:] + per[:-1]
        return cls("periodic", preperiod=pre, period=per)

    @classmethod
    def stream(cls, source: Callable[[], Iterator[int]], label: str | None = None) -> "ContinuedFraction":
        """Wrap a zero-argument factory returning a fresh iterator of quotients."""
        return cls("stream", source=source, label=label)

    @classmethod
    def from_prefix(cls, prefix: Iterable[int], label: str | None = None) -> "ContinuedFraction":
        """A stream that is only known up to a finite prefix."""
        p = tuple(prefix)
        return cls.stream(lambda: iter(p), label=label)

    # access ---------------------------------------------------------------------------

    def quotients(self) -> Iterator[int]:
        if self.kind == "finite":
            return iter(self.terms)
        if self.kind == "periodic":
            return itertools.chain(self.preperiod, itertools.cycle(self.period))
        return iter(self._source())

    def prefix(self, n: int) -> list[int]:
        return list(itertools.islice(self.quotients(), n))

    def is_finite(self):
        return self.kind == "finite"

    def is_periodic(self):
        return self.kind == "periodic"

    def is_stream(self):
        return self.kind == "stream"

    def value(self):
        if self.kind == "finite":
            return cf_to_rational(self)
        if self.kind == "periodic":
            return periodic_cf_to_surd(self)
        raise DomainError("a stream has no exact value; use convergents")

    def __eq__(self, other):
        if not isinstance(other, ContinuedFraction) or self.kind != other.kind:
            return False
        if self.kind == "stream":
            return self is other
        return (self.terms, self.preperiod, self.period) == (other.terms, other.preperiod, other.period)

    def __hash__(self):
        return hash((self.kind, self.terms, self.preperiod, self.period))

    def __repr__(self):
        return f"ContinuedFraction({self})"

    def __str__(self):
        if self.kind == "finite":
            return _fmt(list(self.terms), None)
        if self.kind == "periodic":
            return _fmt(list(self.preperiod), list(self.period))
        return _fmt(self.prefix(8), None, more=True)


def _fmt(head: list[int], period: list[int] | None, more: bool = False) -> str:
    items = [str(a) for a in head]
    tail = []
    if period is not None:
        tail.append("(" + ",".join(map(str, period)) + ")")
    if more:
        tail.append("...")
    if not items:
        return "[" + ",".join(tail) + "]"
    rest = items[1:] + tail
    return "[" + items[0] + (";" + ",".join(rest) if rest else "") + "]"


# finite and rational ----------------------------------------------------------------


def rational_to_cf(q) -> ContinuedFraction:
    if q is INF:
        raise DomainError("infinity has no finite continued fraction")
    q = Fraction(q)
    n, d = q.numerator, q.denominator
    out = []
    while d:
        a, r = divmod(n, d)
        out.append(a)
        n, d = d, r
    return ContinuedFraction.finite(out)


def cf_matrix(quotients: Iterable[int]) -> Mat:
    """Product of [[a, 1], [1, 0]] over the quotients (convergent matrix).

    Runs of 1's are folded into a single Fibonacci matrix, which keeps long
    runs (common in jimm images) cheap.
    """
    p0, p1, q0, q1 = 1, 0, 0, 1  # columns hold (p_k, q_k), (p_{k-1}, q_{k-1})
    ones = 0
    for a in itertools.chain(quotients, [None]):
        if a == 1:
            ones += 1
            continue
        if ones:
            f1, f0, fm = fib(ones + 1), fib(ones), fib(ones - 1)
            p0, p1 = p0 * f1 + p1 * f0, p0 * f0 + p1 * fm
            q0, q1 = q0 * f1 + q1 * f0, q0 * f0 + q1 * fm
            ones = 0
        if a is None:
            break
        p0, p1 = a * p0 + p1, p0
        q0, q1 = a * q0 + q1, q0
    return Mat(p0, p1, q0, q1)


def cf_to_rational(cf) -> Fraction:
    if isinstance(cf, ContinuedFraction):
        if cf.kind != "finite":
            raise DomainError("cf_to_rational needs a finite continued fraction")
        terms = cf.terms
    else:
        terms = list(cf)
    p, pp, q, qq = 1, 0, 0, 1
    for a in terms:
        p, pp = a * p + pp, p
        q, qq = a * q + qq, q
    return Fraction(p, q)


def split_last(cf: ContinuedFraction) -> ContinuedFraction:
    """The other continued fraction of the same rational, ending in 1."""
    if cf.kind != "finite":
        raise DomainError("only finite continued fractions have two forms")
    t = list(cf.terms)
    t[-1] -= 1
    t.append(1)
    c = ContinuedFraction("finite", terms=t)
    return c


def convergents(quotients: Iterable[int]) -> Iterator[Fraction]:
    p, pp, q, qq = 1, 0, 0, 1
    for a in quotients:
        p, pp = a * p + pp, p
        q, qq = a * q + qq, q
        yield Fraction(p, q)


# quadratic surds ------------------------------------------------------------------------


class _SurdExpansion:
    """Exact complete quotients (P + sqrt(D)) / Q of a surd, with Q | D - P^2."""

    def __init__(self, x: QuadSurd):
        p, q, d, r = x.p, x.q, x.d, x.r
        D = q * q * d
        if q > 0:
            P, Q = p, r
        else:
            P, Q = -p, -r
        if (D - P * P) % Q:
            P, D, Q = P * abs(Q), D * Q * Q, Q * abs(Q)
        self.P, self.Q, self.D = P, Q, D
        self.s = isqrt(D)

    def state(self):
        return self.P, self.Q

    def step(self) -> int:
        P, Q, D, s = self.P, self.Q, self.D, self.s
        if Q > 0:
            a = (P + s) // Q
        else:
            a = (-P - s - 1) // (-Q)
        P = a * Q - P
        self.Q = (D - P * P) // Q
        self.P = P
        return a

    def complete_quotient(self) -> QuadSurd:
        return QuadSurd(self.P, 1, self.D, self.Q)


def surd_quotients(x: QuadSurd) -> Iterator[int]:
    """Lazy partial quotients of a surd, computed exactly."""
    e = _SurdExpansion(x)
    while True:
        yield e.step()


def surd_to_periodic_cf(x: QuadSurd) -> ContinuedFraction:
    if not isinstance(x, QuadSurd):
        raise DomainError("surd_to_periodic_cf needs an irrational quadratic surd")
    e = _SurdExpansion(x)
    seen = {}
    out = []
    # reduced states satisfy 0 < P < sqrt(D), 0 < Q < 2 sqrt(D); bound the search accordingly
    bound = 2 * e.D + 4 * e.s + 1000
    while e.state() not in seen:
        if len(out) > bound:
            raise AssertionError("period not found within the Lagrange bound")
        seen[e.state()] = len(out)
        out.append(e.step())
    i = seen[e.state()]
    return ContinuedFraction.periodic(out[:i], out[i:])


def periodic_cf_to_surd(cf: ContinuedFraction) -> QuadSurd:
    if cf.kind != "periodic":
        raise DomainError("periodic_cf_to_surd needs a periodic continued fraction")
    m = cf_matrix(cf.period)
    a, b, c, d = m.a, m.b, m.c, m.d
    assert (a + d) ** 2 - 4 * m.det() > 0 and c != 0, "period matrix must be hyperbolic"
    # fixed points of x -> (a x + b)/(c x + d): c x^2 + (d - a) x - b = 0; the positive root attracts
    y = QuadSurd.from_quadratic(c, d - a, -b, larger=True)
    return mobius_apply(cf_matrix(cf.preperiod), y)


# lazy transforms on quotient sequences ----------------------------------------------------


def neg_quotients(it: Iterator[int]) -> Iterator[int]:
    """Quotients of -x from those of an irrational x."""
    it = iter(it)
    a0 = next(it)
    a1 = next(it)
    if a1 == 1:
        yield -a0 - 1
        yield next(it) + 1
    else:
        yield -a0 - 1
        yield 1
        yield a1 - 1
    yield from it


def recip_quotients(it: Iterator[int]) -> Iterator[int]:
    """Quotients of 1/x from those of an irrational x > 0."""
    it = iter(it)
    a0 = next(it)
    if a0 < 0:
        raise DomainError("recip_quotients needs x > 0")
    if a0 == 0:
        yield from it
    else:
        yield 0
        yield a0
        yield from it


def _periodic_map(cf: ContinuedFraction, fn: Callable[[Iterator[int]], Iterator[int]], lookahead: int = 3):
    """Apply a transform that only rewrites the first few quotients to a periodic CF."""
    pre = list(cf.preperiod)
    per = list(cf.period)
    while len(pre) < lookahead + 1:
        pre.append(per[0])
        per = per[1:] + per[:1]
    head = list(fn(iter(pre)))
    return ContinuedFraction.periodic(head, per)


def cf_neg(cf: ContinuedFraction) -> ContinuedFraction:
    if cf.kind == "periodic":
        return _periodic_map(cf, neg_quotients)
    if cf.kind == "finite":
        return rational_to_cf(-cf_to_rational(cf))
    return ContinuedFraction.stream(lambda: neg_quotients(cf.quotients()))


def cf_recip(cf: ContinuedFraction) -> ContinuedFraction:
    first = next(cf.quotients())
    if first < 0:
        return cf_neg(cf_recip(cf_neg(cf)))
    if cf.kind == "periodic":
        return _periodic_map(cf, recip_quotients)
    if cf.kind == "finite":
        return rational_to_cf(1 / cf_to_rational(cf))
    return ContinuedFraction.stream(lambda: recip_quotients(cf.quotients()))


def cf_shift(cf: ContinuedFraction, n: int) -> ContinuedFraction:
    """x + n for an integer n."""
    if cf.kind == "finite":
        return ContinuedFraction.finite([cf.terms[0] + n, *cf.terms[1:]])
    if cf.kind == "periodic":
        return _periodic_map(cf, lambda it: _add_first(it, n), lookahead=0)
    return ContinuedFraction.stream(lambda: _add_first(cf.quotients(), n))


def _add_first(it, n):
    it = iter(it)
    yield next(it) + n
    yield from it


def to_cf(x) -> ContinuedFraction:
    """Canonical continued fraction of a Fraction, int or QuadSurd."""
    if isinstance(x, QuadSurd):
        return surd_to_periodic_cf(x)
    return rational_to_cf(x)


def cf_value(cf: ContinuedFraction):
    return cf.value()
