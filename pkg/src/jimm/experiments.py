"""Statistical and analytical experiments around jimm.

All sampling is driven by ``random.Random`` seeded from (seed, sample index),
so identical configurations give identical reports.
"""

from __future__ import annotations

import math
import random
import statistics
from dataclasses import asdict, dataclass, field
from fractions import Fraction

from .cf import ContinuedFraction, DomainError, surd_quotients
from .core import (
    is_noble,
    jimm_stream,
    jimm_surd,
    rewrite_runs,
    stream_interval,
    surd_cf,
)
from .surd import QuadSurd, fib


@dataclass(frozen=True)
class ExperimentConfig:
    seed: int = 1
    samples: int = 500
    depth: int = 2000
    tolerance: float = 0.01

    def __post_init__(self):
        if self.samples <= 0 or self.depth <= 0 or self.tolerance <= 0:
            raise ValueError("samples, depth and tolerance must be positive")

    def rng(self, index: int) -> random.Random:
        return random.Random(f"{self.seed}:{index}")


def gauss_kuzmin_quotient(rng: random.Random) -> int:
    """A partial quotient with P(a >= k) = log2(1 + 1/k)."""
    u = 1.0 - rng.random()  # in (0, 1]
    return int(1.0 / (2.0**u - 1.0))


def gauss_kuzmin_sample(rng: random.Random, depth: int) -> list[int]:
    return [gauss_kuzmin_quotient(rng) for _ in range(depth)]


def gauss_kuzmin_law(k: int) -> float:
    return math.log2(1 + 1 / (k * (k + 2)))


def _summary(values):
    n = len(values)
    mean = statistics.fmean(values)
    sd = statistics.stdev(values) if n > 1 else 0.0
    half = 1.96 * sd / math.sqrt(n) if n > 1 else 0.0
    return {"mean": mean, "stdev": sd, "ci95": [mean - half, mean + half], "min": min(values), "max": max(values)}


# density of 1's ------------------------------------------------------------------------


def ones_density(quotients) -> tuple[int, int]:
    """(number of 1's, number of quotients) among the certified quotients of
    jimm([0; q1, q2, ...]) = 1/jimm([q1; q2, ...]); the leading 0 is not counted."""
    ones = total = 0
    for v, k in rewrite_runs(iter(quotients)):
        total += k
        if v == 1:
            ones += k
    return ones, total


def density_of_ones(cfg: ExperimentConfig) -> dict:
    """Fraction of 1's among the quotients of jimm(X), X with i.i.d. Gauss-Kuzmin quotients."""
    per_sample = []
    for i in range(cfg.samples):
        qs = gauss_kuzmin_sample(cfg.rng(i), cfg.depth)
        ones, total = ones_density(qs)
        per_sample.append(ones / total)
    report = {"experiment": "density", "gate": "soft", "config": asdict(cfg)}
    report.update(_summary(per_sample))
    return report


# derivative probes ------------------------------------------------------------------------


@dataclass
class DerivativeProbe:
    a: str
    offsets: list = field(default_factory=list)
    slopes: list = field(default_factory=list)
    mu_k: list = field(default_factory=list)
    N_k: list = field(default_factory=list)


def _jimm_near(x: QuadSurd, width: Fraction) -> Fraction:
    """A rational within ``width`` of jimm(x), from certified quotients."""
    src = ContinuedFraction.stream(lambda: surd_quotients(x))
    for lo, hi in stream_interval(jimm_stream(src)):
        if hi - lo < width:
            return (lo + hi) / 2
    raise AssertionError("unreachable: surd streams are infinite")


def derivative_probe(a: QuadSurd, ks=range(4, 13), extra_digits: int = 12) -> DerivativeProbe:
    """|jimm(a + h) - jimm(a)| / |h| for h = +-10^-k, evaluated exactly up to rendering."""
    if not isinstance(a, QuadSurd):
        raise DomainError("derivative_probe needs an irrational base point")
    if is_noble(a):
        raise DomainError("noble base point: jimm(a) is rational")
    ja = jimm_surd(a)
    probe = DerivativeProbe(str(a))
    qs = surd_cf(a).prefix(64)
    running = 0
    for i, n in enumerate(qs[1:], start=1):
        running += n
        probe.N_k.append(running)
        probe.mu_k.append(running / i)
    for k in ks:
        for sign in (1, -1):
            h = Fraction(sign, 10**k)
            width = Fraction(1, 10 ** (k + extra_digits))
            v = _jimm_near(a + h, width)
            scale = 10 ** (k + extra_digits + 4)
            exact = Fraction(ja.scaled_floor(scale), scale)
            probe.offsets.append(h)
            probe.slopes.append(float(abs(v - exact) / abs(h)))
    return probe


def random_surd_point(rng: random.Random, prefix: int = 40) -> QuadSurd:
    """[0; a1..a_prefix, (2)] with Gauss-Kuzmin a_i: a surd whose first quotients are typical."""
    qs = [max(1, min(gauss_kuzmin_quotient(rng), 10**6)) for _ in range(prefix)]
    return ContinuedFraction.periodic([0] + qs, [2]).value()


def derivative_report(cfg: ExperimentConfig, k: int = 12) -> dict:
    base = ContinuedFraction.periodic([0], [5]).value()
    points = [("[0;(5)]", base)] + [(f"random[{i}]", random_surd_point(cfg.rng(i))) for i in range(cfg.samples)]
    rows = []
    for label, a in points:
        pr = derivative_probe(a, ks=[k])
        rows.append({"point": label, "max_slope": max(pr.slopes), "slopes": pr.slopes})
    return {
        "experiment": "derivative",
        "gate": "soft",
        "h": f"1e-{k}",
        "config": asdict(cfg),
        "worst": max(r["max_slope"] for r in rows),
        "points": rows,
    }


# integral --------------------------------------------------------------------------------


_PHI = (1 + math.sqrt(5)) / 2
_FIB_EXACT = 75  # F(76) < 2**53


def _run_matrix(k: int):
    """[[F(k+1), F(k)], [F(k), F(k-1)]] up to scale, as floats."""
    if k <= _FIB_EXACT:
        return float(fib(k + 1)), float(fib(k)), float(fib(k - 1))
    return _PHI, 1.0, 1 / _PHI


def _jimm_unit_value(x: Fraction) -> float:
    """jimm at a rational point of (0,1), through its CF taken as a stream prefix.

    Only the ratio q/p matters, so the convergent matrix is carried projectively
    in floats and rescaled after every block.
    """
    n, d = x.numerator, x.denominator
    qs = []
    while d:
        a, r = divmod(n, d)
        qs.append(a)
        n, d = d, r
    # jimm(x) = 1 / jimm(1/x) with 1/x = [q1; q2, ...]
    p, pp, q, qq = 1.0, 0.0, 0.0, 1.0
    for v, k in rewrite_runs(iter(qs[1:])):
        if v == 1:
            f1, f0, fm = _run_matrix(k)
            p, pp = p * f1 + pp * f0, p * f0 + pp * fm
            q, qq = q * f1 + qq * f0, q * f0 + qq * fm
        else:
            p, pp = v * p + pp, p
            q, qq = v * q + qq, q
        m = max(abs(p), abs(pp), abs(q), abs(qq))
        p, pp, q, qq = p / m, pp / m, q / m, qq / m
    if p == 0:
        return 1.0
    return q / p


def integral_symmetry(cfg: ExperimentConfig) -> dict:
    """Monte-Carlo estimate of the integral of jimm over [0, 1], plain and antithetic."""
    plain, paired = [], []
    for i in range(cfg.samples):
        rng = cfg.rng(i)
        x = Fraction(rng.getrandbits(62) | 1, 1 << 62)
        a, b = _jimm_unit_value(x), _jimm_unit_value(1 - x)
        plain.append(a)
        paired.append((a + b) / 2)
    s = _summary(plain)
    t = _summary(paired)
    return {
        "experiment": "integral",
        "gate": "soft",
        "config": asdict(cfg),
        "estimate": s["mean"],
        "stderr": s["stdev"] / math.sqrt(len(plain)),
        "antithetic_estimate": t["mean"],
        "antithetic_max_pair_error": max(abs(v - 0.5) for v in paired),
    }


# Gauss-Kuzmin frequencies --------------------------------------------------------------------


def gauss_kuzmin_freq(cfg: ExperimentConfig, kmax: int = 10) -> dict:
    counts_x = [0] * (kmax + 1)
    counts_j = [0] * (kmax + 1)
    nx = nj = 0
    for i in range(cfg.samples):
        qs = gauss_kuzmin_sample(cfg.rng(i), cfg.depth)
        for a in qs:
            nx += 1
            if a <= kmax:
                counts_x[a] += 1
        for v, k in rewrite_runs(iter(qs)):
            nj += k
            if v <= kmax:
                counts_j[v] += k
    rows = [
        {
            "k": k,
            "law": gauss_kuzmin_law(k),
            "sample": counts_x[k] / nx,
            "jimm": counts_j[k] / nj,
        }
        for k in range(1, kmax + 1)
    ]
    return {"experiment": "gk", "gate": "soft", "config": asdict(cfg), "table": rows}


# Beatty / Rayleigh ------------------------------------------------------------------------------


def beatty_set(x, limit: int) -> list[int]:
    out = []
    n = 1
    while True:
        v = (x * n).floor() if isinstance(x, QuadSurd) else math.floor(x * n)
        if v > limit:
            return out
        out.append(v)
        n += 1


def is_partition(x, y, limit: int) -> bool:
    a, b = beatty_set(x, limit), beatty_set(y, limit)
    sa, sb = set(a), set(b)
    return len(sa) == len(a) and len(sb) == len(b) and not (sa & sb) and (sa | sb) == set(range(1, limit + 1))


def beatty_duality(x: QuadSurd, limit: int) -> dict:
    """Rayleigh partitions for (x, x/(x-1)) and for their jimm images."""
    if not isinstance(x, QuadSurd) or not x > 1:
        raise DomainError("beatty_duality needs an irrational x > 1")
    if is_noble(x):
        raise DomainError("noble x: jimm(x) is rational and the dual Beatty pair degenerates")
    y = x / (x - 1)
    jx, jy = jimm_surd(x), jimm_surd(y)
    if not (isinstance(jx, QuadSurd) and isinstance(jy, QuadSurd)):
        raise DomainError("a jimm image is rational")
    harmonic = (1 / jx + 1 / jy) == 1
    return {
        "x": str(x),
        "y": str(y),
        "jimm_x": str(jx),
        "jimm_y": str(jy),
        "limit": limit,
        "partition": is_partition(x, y, limit),
        "harmonic": harmonic,
        "dual_partition": harmonic and is_partition(jx, jy, limit),
    }
