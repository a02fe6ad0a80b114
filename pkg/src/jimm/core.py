"""The involution jimm on quadratic surds, continued fractions, rationals and matrices."""

from __future__ import annotations

import itertools
from collections import OrderedDict
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from .boundary import (
    PHI_STAR_WORD,
    PHI_WORD,
    BoundaryWord,
    cf_to_word,
    quotient_bits,
    rational_two_words,
    word_to_cf,
    word_value,
    xor_words,
)
from .cf import (
    ContinuedFraction,
    DomainError,
    cf_neg,
    cf_recip,
    neg_quotients,
    periodic_cf_to_surd,
    recip_quotients,
    surd_to_periodic_cf,
)
from .matrix import Mat, mobius_apply
from .pgl2 import jimm_matrix
from .surd import INF, QuadSurd, fib


class RepresentationMismatch(AssertionError):
    """Two independent evaluation routes disagreed."""


class InsufficientPrecision(Exception):
    """A finite prefix of a stream ran out before the requested output was certified."""

    def __init__(self, message, digits_so_far=()):
        super().__init__(message)
        self.digits_so_far = list(digits_so_far)


# surd <-> cf cache ------------------------------------------------------------------
# jimm images can have enormous discriminants; re-expanding them is slow, so the
# continued fraction found while computing an image is remembered.

_CF_CACHE: OrderedDict = OrderedDict()
_CACHE_SIZE = 50000


def _remember(x, cf):
    _CF_CACHE[x] = cf
    if len(_CF_CACHE) > _CACHE_SIZE:
        _CF_CACHE.popitem(last=False)


def surd_cf(x: QuadSurd) -> ContinuedFraction:
    cf = _CF_CACHE.get(x)
    if cf is None:
        cf = surd_to_periodic_cf(x)
        _remember(x, cf)
    return cf


def cf_surd(cf: ContinuedFraction) -> QuadSurd:
    x = periodic_cf_to_surd(cf)
    _remember(x, cf)
    return x


# the rewrite rule on partial quotients -------------------------------------------------


def rewrite_runs(quotients: Iterator[int]) -> Iterator[tuple[int, int]]:
    """jimm of x >= 1 as (quotient, multiplicity) pairs, lazily.

    [n0, n1, n2, ...] becomes [1_(n0-1), 2, 1_(n1-2), 2, 1_(n2-2), ...]; a
    block 1_0 vanishes and a block 1_(-1) merges its neighbours m, n into m+n-1.
    """
    it = iter(quotients)
    n0 = next(it)
    if n0 < 1:
        raise DomainError("the rewrite rule needs a first quotient >= 1")
    if n0 > 1:
        yield 1, n0 - 1
    cur = 2
    for n in it:
        if n == 1:
            cur += 1
        else:
            yield cur, 1
            if n > 2:
                yield 1, n - 2
            cur = 2


def _expand_runs(runs):
    for v, k in runs:
        for _ in range(k):
            yield v


def rewrite_quotients(quotients: Iterator[int]) -> Iterator[int]:
    return _expand_runs(rewrite_runs(quotients))


def _rewrite_periodic_positive(cf: ContinuedFraction):
    """Rewrite rule on a periodic CF with first quotient >= 1; returns a CF or a rational/INF."""
    pre, per = list(cf.preperiod), list(cf.period)
    if per == [1]:
        # noble: the pending separator grows without bound, so the image is rational
        seq = pre + [1]
        out = list(rewrite_quotients(seq))
        return INF if not out else ContinuedFraction.finite(out).value()
    out = []
    seen = {}
    seq = itertools.chain(pre, itertools.cycle(per))
    n0 = next(seq)
    if n0 > 1:
        out.extend([1] * (n0 - 1))
    cur = 2
    i = 1
    L = len(per)
    while True:
        k = i - len(pre)
        if k >= 0 and k % L == 0:
            if cur in seen:
                start = seen[cur]
                return ContinuedFraction.periodic(out[:start], out[start:])
            seen[cur] = len(out)
        n = next(seq)
        if n == 1:
            cur += 1
        else:
            out.append(cur)
            out.extend([1] * (n - 2))
            cur = 2
        i += 1


def jimm_cf(x: ContinuedFraction):
    """jimm by the rewrite rule. Periodic input gives a periodic CF (or a rational
    Fraction / INF for noble input); stream input gives a lazy stream."""
    if x.kind == "finite":
        raise DomainError("jimm is two-valued at rationals; use jump() or jimm_q_rational()")
    if x.kind == "stream":
        return ContinuedFraction.stream(lambda: _jimm_quotients_any(x.quotients()), label="jimm")
    first = x.preperiod[0] if x.preperiod else x.period[0]
    if first < 0:
        inner = jimm_cf(cf_neg(x))  # jimm(-y) = -1/jimm(y)
        if isinstance(inner, ContinuedFraction):
            return cf_neg(cf_recip(inner))
        return _neg_recip(inner)
    if first == 0:
        inner = jimm_cf(cf_recip(x))  # jimm(1/y) = 1/jimm(y)
        if isinstance(inner, ContinuedFraction):
            return cf_recip(inner)
        return _recip(inner)
    return _rewrite_periodic_positive(x)


def _recip(v):
    if v is INF:
        return Fraction(0)
    if v == 0:
        return INF
    return 1 / v


def _neg_recip(v):
    if v is INF:
        return Fraction(0)
    if v == 0:
        return INF
    return -1 / v


def _jimm_quotients_any(it):
    it = iter(it)
    a0 = next(it)
    it = itertools.chain([a0], it)
    if a0 < 0:
        return neg_quotients(recip_quotients(_jimm_quotients_any(neg_quotients(it))))
    if a0 == 0:
        return recip_quotients(rewrite_quotients(recip_quotients(it)))
    return rewrite_quotients(it)


# the XOR route ----------------------------------------------------------------------------------


def jimm_boundary_word(w: BoundaryWord) -> BoundaryWord:
    return xor_words(w, PHI_STAR_WORD if w.neg else PHI_WORD)


def jimm_xor_cf(x: ContinuedFraction):
    """jimm of a periodic CF through its boundary word; CF, Fraction or INF."""
    w = jimm_boundary_word(cf_to_word(x))
    if w.is_rational():
        return word_value(w)
    return word_to_cf(w)


# surds ------------------------------------------------------------------------------------


@dataclass(frozen=True)
class JimmResult:
    input: object
    value: object  # QuadSurd, Fraction or INF
    noble: bool
    cf: ContinuedFraction | None
    agreement: bool


def jimm_surd_detail(x: QuadSurd, cross_check: bool = True) -> JimmResult:
    if not isinstance(x, QuadSurd):
        raise DomainError("jimm_surd needs an irrational quadratic surd")
    cf = surd_cf(x)
    primary = jimm_xor_cf(cf)
    agree = True
    if cross_check:
        other = jimm_cf(cf)
        agree = _same(primary, other)
        if not agree:
            raise RepresentationMismatch(f"XOR and rewrite disagree at {x}: {primary} vs {other}")
    if isinstance(primary, ContinuedFraction):
        return JimmResult(x, cf_surd(primary), False, primary, agree)
    return JimmResult(x, primary, True, None, agree)


def _same(a, b):
    if isinstance(a, ContinuedFraction) or isinstance(b, ContinuedFraction):
        return a == b
    return a is b if (a is INF or b is INF) else a == b


def jimm_surd(x: QuadSurd):
    """Exact jimm of a quadratic surd. Nobles map to rationals (or INF)."""
    return jimm_surd_detail(x).value


def jimm(x):
    """jimm of a QuadSurd or an irrational ContinuedFraction."""
    if isinstance(x, QuadSurd):
        return jimm_surd(x)
    if isinstance(x, ContinuedFraction):
        return jimm_cf(x)
    raise DomainError("jimm is two-valued at rationals; use jump() or jimm_q_rational()")


def is_noble(x) -> bool:
    if isinstance(x, QuadSurd):
        return surd_cf(x).period == (1,)
    if isinstance(x, ContinuedFraction):
        return x.kind == "periodic" and x.period == (1,)
    return False


# streams --------------------------------------------------------------------------------


def jimm_stream_bits(quotients: Iterator[int]) -> Iterator[int]:
    """Certified partial quotients of jimm(x) for x >= 0 via the XOR of boundary bits.

    A run of output bits is reported only once a differing bit closes it, so
    each emitted quotient is shared by every real with the consumed input prefix.
    Raises InsufficientPrecision when the input runs out.
    """
    emitted = []
    it = iter(quotients)
    bits = quotient_bits(_with_next_bit(it))
    run_bit, run_len = 0, 0
    for i, b in enumerate(bits):
        o = b ^ (i & 1)
        if o == run_bit:
            run_len += 1
        else:
            emitted.append(run_len)
            yield run_len
            run_bit, run_len = o, 1
    raise InsufficientPrecision("input stream exhausted", emitted)


def _with_next_bit(it):
    """Quotients followed by a single 1: the next block is known to start."""
    yield from it
    yield 1


def jimm_stream(x: ContinuedFraction, max_quotients: int | None = None) -> Iterator[int]:
    """Certified quotients of jimm(x) for a stream (or periodic) x >= 0.

    The XOR route produces the quotients and the rewrite rule re-derives each
    one from the same input; any disagreement raises RepresentationMismatch.
    """
    a0 = next(x.quotients())
    if a0 < 0:
        raise DomainError("jimm_stream handles x >= 0; use jimm(-x) = -1/jimm(x)")
    primary = jimm_stream_bits(x.quotients())
    check = _jimm_quotients_any(x.quotients())
    n = 0
    while max_quotients is None or n < max_quotients:
        q = next(primary)  # may raise InsufficientPrecision
        try:
            r = next(check)
        except StopIteration:
            r = None
        if r is not None and r != q:
            raise RepresentationMismatch(f"stream quotient {n}: XOR gives {q}, rewrite gives {r}")
        n += 1
        yield q


def stream_interval(quotients, max_terms: int | None = None):
    """Yield the nested Farey intervals [lo, hi] holding an infinite CF after each quotient."""
    p, pp, q, qq = 1, 0, 0, 1
    for k, a in enumerate(quotients):
        if max_terms is not None and k >= max_terms:
            return
        p, pp = a * p + pp, p
        q, qq = a * q + qq, q
        if k == 0:
            continue  # the tail t in [1, inf] is only meaningful after a0
        # x = (p t + pp)/(q t + qq), t in [1, inf]
        a1, a2 = Fraction(p, q), Fraction(p + pp, q + qq)
        yield (a1, a2) if a1 <= a2 else (a2, a1)


def certified_decimal(quotients, digits: int) -> str:
    """Decimal string of an infinite CF, truncated, certified from a finite prefix."""
    scale = 10**digits
    last = None
    try:
        for lo, hi in stream_interval(quotients):
            flo, fhi = (lo * scale).__floor__(), (hi * scale).__floor__()
            last = (lo, hi)
            if flo == fhi and hi * scale != fhi:
                return _fmt_fixed(flo, digits)
    except InsufficientPrecision as e:
        raise InsufficientPrecision(f"could not certify {digits} digits", e.digits_so_far) from None
    raise InsufficientPrecision(f"could not certify {digits} digits (last interval {last})")


def _fmt_fixed(n: int, digits: int) -> str:
    neg = n < 0
    n = abs(n)
    whole, frac = divmod(n, 10**digits)
    s = f"{whole}.{frac:0{digits}d}" if digits else str(whole)
    return "-" + s if neg else s


def jimm_stream_decimal(x: ContinuedFraction, digits: int) -> str:
    return certified_decimal(jimm_stream(x), digits)


# rationals ---------------------------------------------------------------------------------


def jimm_q_rational(q) -> Fraction:
    """The tree bijection jimm_Q on positive rationals.

    Uses jimm_Q(1) = 1, jimm_Q(1 + x) = 1 + 1/jimm_Q(x), jimm_Q(1/x) = 1/jimm_Q(x),
    folding k-fold steps x -> x - k into the Fibonacci matrix of x -> 1 + 1/x.
    """
    if q is INF:
        raise DomainError("jimm_Q is defined on positive rationals")
    q = Fraction(q)
    if q <= 0:
        raise DomainError("jimm_Q is defined on positive rationals")
    m = Mat(1, 0, 0, 1)
    while q != 1:
        if q > 1:
            k = q.__floor__()
            if k == q:
                k -= 1
            # k applications of x -> 1 + 1/x
            m = m @ Mat(fib(k + 1), fib(k), fib(k), fib(k - 1))
            q -= k
        else:
            m = m @ Mat(0, 1, 1, 0)
            q = 1 / q
    return mobius_apply(m, Fraction(1))


# jumps -----------------------------------------------------------------------------------


@dataclass(frozen=True)
class JumpData:
    at: Fraction
    left: QuadSurd
    right: QuadSurd
    delta: QuadSurd


def jump(q) -> JumpData:
    """One-sided limits of jimm at a rational, via the two boundary words of q."""
    if q is INF:
        raise DomainError("jump is not defined at infinity")
    q = Fraction(q)
    if q == 0:
        raise DomainError("jump is not defined at 0")
    below, above = rational_two_words(q)
    left = word_value(jimm_boundary_word(below))
    right = word_value(jimm_boundary_word(above))
    delta = right - left
    return JumpData(q, left, right, delta)


def delta_integer_formula(n: int) -> QuadSurd:
    """(-1)^(n+1) sqrt(5) / (F_n^2 + F_(n-1) F_(n-2))."""
    if n < 1:
        raise DomainError("delta_integer_formula needs n >= 1")
    den = fib(n) ** 2 + fib(n - 1) * fib(n - 2)
    return QuadSurd(0, 1 if n % 2 else -1, 5, den)


# fixed points of x -> M x composed with jimm -------------------------------------------------


@dataclass(frozen=True)
class OrbitFixedPoint:
    m: Mat
    x: QuadSurd


def _fixed_points(n: Mat):
    a, b, c, d = n.a, n.b, n.c, n.d
    disc = (a + d) ** 2 - 4 * n.det()
    if c == 0 or disc <= 0:
        raise DomainError(f"{n} has no irrational fixed points")
    roots = [QuadSurd.make(a - d, s, disc, 2 * c) for s in (1, -1)]
    if not all(isinstance(r, QuadSurd) for r in roots):
        raise DomainError(f"{n} has rational fixed points")

    def rate(x):  # |derivative| at x is |det| / (c x + d)^2; attracting iff |c x + d| > 1
        v = x * c + d
        return abs(v.sign()) and (v * v > 1)

    roots.sort(key=lambda r: not rate(r))
    return roots


def orbit_fixed_point(m: Mat) -> OrbitFixedPoint:
    """A surd x with jimm(x) = m(x): a fixed point of jimm(m) m, attracting one preferred."""
    n = jimm_matrix(m) @ m
    if abs(n.trace()) <= 2 and n.det() == 1:
        raise DomainError(f"jimm(M) M = {n} is not hyperbolic")
    for x in _fixed_points(n):
        if not is_noble(x) and jimm_surd(x) == mobius_apply(m, x):
            return OrbitFixedPoint(m, x)
    raise AssertionError(f"no fixed point of {n} satisfies jimm(x) = M x")


def galois_commute_check(x: QuadSurd):
    """True/False for jimm(x*) == jimm(x)*; None when x or x* is noble."""
    xc = x.conjugate()
    if is_noble(x) or is_noble(xc):
        return None
    a = jimm_surd(xc)
    b = jimm_surd(x)
    if not isinstance(a, QuadSurd) or not isinstance(b, QuadSurd):
        return None
    return a == b.conjugate()
