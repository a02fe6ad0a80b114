"""Continued fraction streams of a few classical constants."""

from __future__ import annotations

from functools import lru_cache
from importlib import resources
from itertools import count

from .cf import ContinuedFraction


@lru_cache(maxsize=1)
def pi_quotients() -> tuple[int, ...]:
    """The bundled partial quotients of pi (10^4 terms)."""
    text = resources.files("jimm").joinpath("data/pi_cf.txt").read_text()
    return tuple(int(t) for t in text.split())


def pi_cf() -> ContinuedFraction:
    return ContinuedFraction.from_prefix(pi_quotients(), label="pi")


def e_quotients():
    """[2; 1, 2, 1, 1, 4, 1, 1, 6, ...], unbounded."""
    yield 2
    for k in count(1):
        yield 1
        yield 2 * k
        yield 1


def e_cf() -> ContinuedFraction:
    return ContinuedFraction.stream(e_quotients, label="e")


def _eval(coeffs, x):
    v = 0
    for c in coeffs:
        v = v * x + c
    return v


def _taylor_shift(coeffs, a):
    """Coefficients (highest first) of p(x + a)."""
    c = list(coeffs)
    n = len(c)
    for i in range(n - 1):
        for j in range(1, n - i):
            c[j] += a * c[j - 1]
    return c


def real_root_quotients(coeffs):
    """Partial quotients of the unique real root > 1 of an integer polynomial
    (highest coefficient first) that has exactly one real root above 1."""
    p = list(coeffs)
    while True:
        lo = 1
        while _eval(p, lo) * _eval(p, 2 * lo) > 0:
            lo *= 2
        hi = 2 * lo
        if _eval(p, lo) == 0:
            yield lo
            return
        # invariant: sign change in (lo, hi]
        while hi - lo > 1:
            mid = (lo + hi) // 2
            if _eval(p, lo) * _eval(p, mid) <= 0:
                hi = mid
            else:
                lo = mid
        if _eval(p, hi) == 0:
            yield hi
            return
        a = lo
        yield a
        # root = a + 1/y with y > 1: y^n p(a + 1/y) reversed
        p = _taylor_shift(p, a)[::-1]
        if p[0] < 0:
            p = [-c for c in p]


def cbrt2_quotients():
    # the root of x^3 - 2 lies in (1, 2), so peel the leading 1 by hand
    return real_root_quotients([1, 0, 0, -2])


def cbrt2_cf() -> ContinuedFraction:
    return ContinuedFraction.stream(cbrt2_quotients, label="cbrt2")


NAMED = {"pi": pi_cf, "e": e_cf, "cbrt2": cbrt2_cf}
