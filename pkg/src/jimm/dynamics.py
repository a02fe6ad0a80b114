"""Gauss map, Farey map and their jimm-conjugates on the unit interval."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .cf import ContinuedFraction, DomainError
from .core import cf_surd, is_noble, jimm_surd, surd_cf
from .matrix import Mat, mobius_apply
from .surd import QuadSurd, fib

HALF = Fraction(1, 2)


def gauss_map(x):
    """Fractional part of 1/x on (0, 1]; CF shift [0; n1, n2, ...] -> [0; n2, ...]."""
    if isinstance(x, ContinuedFraction):
        return _gauss_cf(x)
    if x == 0:
        raise DomainError("the Gauss map is undefined at 0")
    if not 0 < x <= 1:
        raise DomainError("gauss_map needs 0 < x <= 1")
    y = 1 / x
    return y - (y.floor() if isinstance(y, QuadSurd) else y.__floor__())


def _gauss_cf(cf: ContinuedFraction) -> ContinuedFraction:
    it = cf.quotients()
    if next(it) != 0:
        raise DomainError("gauss_map needs 0 < x < 1")
    if cf.kind == "periodic":
        pre, per = list(cf.preperiod), list(cf.period)
        while len(pre) < 2:
            pre.append(per[0])
            per = per[1:] + per[:1]
        return ContinuedFraction.periodic([0] + pre[2:], per)
    if cf.kind == "finite":
        t = list(cf.terms)
        if len(t) < 2:
            raise DomainError("the Gauss map is undefined at 0")
        return ContinuedFraction.finite([0] + t[2:]) if len(t) > 2 else ContinuedFraction.finite([0])
    return ContinuedFraction.stream(lambda: _drop_second(cf.quotients()))


def _drop_second(it):
    yield next(it)
    next(it)
    yield from it


def farey_map(x, with_branch: bool = False):
    """x/(1-x) on [0, 1/2), (1-x)/x on [1/2, 1]; at 1/2 both give 1 and the second label is used."""
    if not 0 <= x <= 1:
        raise DomainError("farey_map needs 0 <= x <= 1")
    if x < HALF:
        y, branch = x / (1 - x), "low"
    else:
        y, branch = (1 - x) / x, "high"
    return (y, branch) if with_branch else y


def t_jimm(x):
    """[0; 1_k, n, rest] -> [0; n - 1, rest] on irrational x in (0, 1)."""
    if isinstance(x, QuadSurd):
        if not 0 < x < 1:
            raise DomainError("t_jimm needs 0 < x < 1")
        return cf_surd(_t_jimm_cf(surd_cf(x)))
    if isinstance(x, ContinuedFraction):
        return _t_jimm_cf(x)
    raise DomainError("t_jimm needs an irrational point (surd or continued fraction)")


def _t_jimm_cf(cf: ContinuedFraction) -> ContinuedFraction:
    if cf.kind == "finite":
        raise DomainError("t_jimm needs an irrational point")
    if cf.kind == "periodic":
        if cf.period == (1,):
            raise DomainError("noble point: the orbit leaves the domain")
        it = cf.quotients()
        if next(it) != 0:
            raise DomainError("t_jimm needs 0 < x < 1")
        pre, per = list(cf.preperiod[1:]), list(cf.period)
        if not cf.preperiod:
            raise DomainError("t_jimm needs 0 < x < 1")
        # unroll until the first quotient != 1 sits in the preperiod
        while not any(a != 1 for a in pre):
            pre.append(per[0])
            per = per[1:] + per[:1]
        k = next(i for i, a in enumerate(pre) if a != 1)
        return ContinuedFraction.periodic([0, pre[k] - 1] + pre[k + 1 :], per)
    return ContinuedFraction.stream(lambda: _t_jimm_stream(cf.quotients()))


def _t_jimm_stream(it):
    if next(it) != 0:
        raise DomainError("t_jimm needs 0 < x < 1")
    for a in it:
        if a != 1:
            yield 0
            yield a - 1
            yield from it
            return


def inverse_branch_matrix(k: int) -> Mat:
    """b_k(y) = (F_(k+1) y + F_k) / (F_(k+2) y + F_(k+1)) = [0; 1_k, 1 + 1/y], k >= 0."""
    return Mat(fib(k + 1), fib(k), fib(k + 2), fib(k + 1))


def inverse_branch(k: int, y):
    return mobius_apply(inverse_branch_matrix(k), y)


def density(t):
    """The infinite invariant density 1/(t(t+1))."""
    return 1 / (t * (t + 1))


@dataclass(frozen=True)
class MeasureResidual:
    y: Fraction
    cutoff: int
    residual: float
    tail_bound: float

    @property
    def total(self):
        return self.residual + self.tail_bound


def invariant_measure_residual(y, K: int = 40) -> MeasureResidual:
    """|sum_{k<=K} |b_k'(y)| rho(b_k(y)) - rho(y)| plus a bound on the omitted terms.

    The term for branch k equals 1/((F_(k+1) y + F_k)(F_(k+3) y + F_(k+2))), which is
    at most 1/(F_k F_(k+2)) <= phi^(2 - 2k); the tail is summed as a geometric series.
    The partial sum is computed exactly for rational y.
    """
    y = Fraction(y)
    if not 0 < y < 1:
        raise DomainError("y must lie in (0, 1)")
    total = Fraction(0)
    for k in range(K + 1):
        m = inverse_branch_matrix(k)
        b = mobius_apply(m, y)
        deriv = Fraction(1, (m.c * y + m.d) ** 2)  # |det| = 1
        total += deriv * density(b)
    residual = abs(total - density(y))
    phi = (1 + math.sqrt(5)) / 2
    tail = phi ** (2 - 2 * (K + 1)) / (1 - phi**-2)
    return MeasureResidual(y, K, float(residual), tail)


def cutoff_for(tolerance: float) -> int:
    """Smallest K whose geometric tail bound is below tolerance."""
    phi = (1 + math.sqrt(5)) / 2
    k = 1
    while phi ** (2 - 2 * (k + 1)) / (1 - phi**-2) >= tolerance:
        k += 1
    return k


def measure_mass(eps) -> float:
    """Exact integral of 1/(t(t+1)) over [eps, 1], which is log((1 + eps) / (2 eps))."""
    eps = Fraction(eps)
    return math.log((1 + eps) / (2 * eps))


@dataclass(frozen=True)
class ConjugacyRecord:
    x: QuadSurd
    equal: bool
    branch_x: str
    branch_jx: str


def farey_conjugacy_check(x: QuadSurd):
    """Compare jimm(T_F(jimm x)) with T_F(x); returns None for nobles."""
    if is_noble(x):
        return None
    jx = jimm_surd(x)
    if not isinstance(jx, QuadSurd):
        return None
    fx, bx = farey_map(x, with_branch=True)
    fjx, bjx = farey_map(jx, with_branch=True)
    lhs = jimm_surd(fjx) if isinstance(fjx, QuadSurd) else None
    return ConjugacyRecord(x, lhs == fx, bx, bjx)


def gauss_conjugacy_check(x: QuadSurd) -> bool:
    """jimm(T_G(jimm x)) == T_jimm(x), exactly."""
    jx = jimm_surd(x)
    return jimm_surd(gauss_map(jx)) == t_jimm(x)


def iterate(map_name: str, start, steps: int):
    fn = {"gauss": gauss_map, "farey": farey_map, "tjimm": t_jimm}[map_name]
    orbit = [start]
    x = start
    for _ in range(steps):
        x = fn(x)
        orbit.append(x)
    return orbit
