"""Property suites run by ``jimm verify``.

Each suite returns a SuiteReport: one Check per property with pass/fail
counts and the first few counterexamples. Random inputs come from
``random.Random(f"{seed}:{suite}:{i}")`` so a report is reproducible from its seed.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

from .cf import ContinuedFraction
from .core import (
    delta_integer_formula,
    galois_commute_check,
    is_noble,
    jimm_cf,
    jimm_q_rational,
    jimm_surd,
    jimm_xor_cf,
    jump,
    surd_cf,
)
from .dynamics import gauss_conjugacy_check, invariant_measure_residual
from .experiments import beatty_duality
from .matrix import Mat, mobius_apply
from .pgl2 import Word, jimm_matrix, jimm_word, word_to_matrix
from .surd import INF, QuadSurd, squarefree_split

MAX_COUNTEREXAMPLES = 5

# (M, jimm(M)) pairs of the worked matrix table
MATRIX_TABLE = [
    (Mat(1, 0, 1, 1), Mat(0, 1, 1, 1)),
    (Mat(15, 1, 14, 1), Mat(610, 987, 233, 377)),
    (Mat(14, 1, 13, 1), Mat(377, 610, 144, 233)),
    (Mat(27, 2, 13, 1), Mat(521, 843, 377, 610)),
    (Mat(16, 1, 15, 1), Mat(987, 1597, 377, 610)),
    (Mat(29, 2, 14, 1), Mat(843, 1364, 610, 987)),
    (Mat(41, 3, 27, 2), Mat(665, 1076, 144, 233)),
    (Mat(40, 3, 13, 1), Mat(898, 1453, 521, 843)),
]

RAYLEIGH_POINTS = [QuadSurd(0, 1, 2), QuadSurd(2, 1, 3), QuadSurd(5, 1, 10, 3)]


@dataclass
class Check:
    name: str
    passed: int = 0
    failed: int = 0
    counterexamples: list = field(default_factory=list)
    informational: bool = False  # reported, but does not decide the suite

    def record(self, ok: bool, witness=None):
        if ok:
            self.passed += 1
        else:
            self.failed += 1
            if len(self.counterexamples) < MAX_COUNTEREXAMPLES:
                self.counterexamples.append(str(witness))

    @property
    def ok(self):
        return self.failed == 0 and self.passed > 0

    def to_dict(self):
        return {
            "name": self.name,
            "ok": self.ok,
            "informational": self.informational,
            "passed": self.passed,
            "failed": self.failed,
            "counterexamples": self.counterexamples,
        }


@dataclass
class SuiteReport:
    suite: str
    seed: int
    checks: list = field(default_factory=list)

    @property
    def ok(self):
        return all(c.ok for c in self.checks if not c.informational)

    def check(self, name, informational=False) -> Check:
        c = Check(name, informational=informational)
        self.checks.append(c)
        return c

    def to_dict(self):
        return {"suite": self.suite, "seed": self.seed, "ok": self.ok, "checks": [c.to_dict() for c in self.checks]}


def _guard(check: Check, fn, witness):
    """Record fn() as a check outcome; exceptions count as failures."""
    try:
        ok = bool(fn())
    except Exception as e:  # noqa: BLE001 - report, don't crash the suite
        check.record(False, f"{witness}: {type(e).__name__}: {e}")
        return
    check.record(ok, witness)


# random inputs ----------------------------------------------------------------------------


def random_surd(rng: random.Random) -> QuadSurd:
    """A non-noble quadratic surd, from a random periodic CF or a random (p+q sqrt d)/r."""
    while True:
        if rng.random() < 0.5:
            a0 = rng.randint(-6, 6)
            pre = [rng.randint(1, 7) for _ in range(rng.randint(0, 3))]
            per = [rng.randint(1, 7) for _ in range(rng.randint(1, 4))]
            if all(a == 1 for a in per):
                continue
            x = ContinuedFraction.periodic([a0] + pre, per).value()
        else:
            d = rng.randint(2, 60)
            q = rng.choice([-1, 1]) * rng.randint(1, 6)
            x = QuadSurd.make(rng.randint(-20, 20), q, d, rng.randint(1, 15))
            if not isinstance(x, QuadSurd):
                continue
        if not is_noble(x):
            return x


def random_noble(rng: random.Random) -> QuadSurd:
    a0 = rng.randint(-4, 4)
    pre = [rng.randint(1, 6) for _ in range(rng.randint(0, 4))]
    return ContinuedFraction.periodic([a0] + pre, [1]).value()


def random_word(rng: random.Random, max_len: int = 12) -> Word:
    gens = ["S", "L", "L2", "V", "T", "Ttilde", "U", "K"]
    letters = []
    for _ in range(rng.randint(1, max_len)):
        g = rng.choice(gens)
        e = rng.randint(-3, 3) if g in ("T", "Ttilde") else 1
        letters.append((g, e or 1))
    return Word(letters)


def random_positive_rational(rng: random.Random, bound: int = 500) -> Fraction:
    return Fraction(rng.randint(1, bound), rng.randint(1, bound))


def _rng(seed, suite, i):
    return random.Random(f"{seed}:{suite}:{i}")


def same_orbit(x: QuadSurd, y: QuadSurd) -> bool:
    """PGL(2,Z)-equivalence of surds: their CF periods agree up to rotation."""
    a, b = surd_cf(x).period, surd_cf(y).period
    if len(a) != len(b):
        return False
    return any(a[i:] + a[:i] == b for i in range(len(a)))


# suites -----------------------------------------------------------------------------------


def suite_fe(seed: int = 0, surds: int = 1000, rationals: int = 10000) -> SuiteReport:
    rep = SuiteReport("fe", seed)
    names = [
        "involution",
        "jimm(1/x) = 1/jimm(x)",
        "jimm(-x) = -1/jimm(x)",
        "jimm(-1/x) = -jimm(x)",
        "jimm(1-x) = 1-jimm(x)",
        "jimm(1+x) = 1+1/jimm(x)",
        "jimm(M jimm(x)) = jimm(M)(x)",
        "jimm(M x) = jimm(M)(jimm(x))",
        "jimm(1-1/x) = 1-1/jimm(x)",
        "jimm(x/(x+1)) + jimm(1/(x+1)) = 1",
        "pair: jimm(x)=y iff jimm(y)=x",
        "pair: xy=1 iff jimm(x)jimm(y)=1",
        "pair: x+y=0 iff jimm(x)jimm(y)=-1",
        "pair: x+y=1 iff jimm(x)+jimm(y)=1",
        "pair: 1/x+1/y=1 iff 1/jimm(x)+1/jimm(y)=1",
        "word automorphism agrees with jimm_matrix",
    ]
    c = {n: rep.check(n) for n in names}
    j = jimm_surd
    for i in range(surds):
        rng = _rng(seed, "fe", i)
        x = random_surd(rng)
        w = random_word(rng)
        m = word_to_matrix(w)
        jm = jimm_matrix(m)
        jx = j(x)
        _guard(c[names[0]], lambda: j(jx) == x, x)
        _guard(c[names[1]], lambda: j(1 / x) == 1 / jx, x)
        _guard(c[names[2]], lambda: j(-x) == -1 / jx, x)
        _guard(c[names[3]], lambda: j(-1 / x) == -jx, x)
        _guard(c[names[4]], lambda: j(1 - x) == 1 - jx, x)
        _guard(c[names[5]], lambda: j(1 + x) == 1 + 1 / jx, x)
        _guard(c[names[6]], lambda: j(mobius_apply(m, jx)) == mobius_apply(jm, x), (x, w))
        _guard(c[names[7]], lambda: j(mobius_apply(m, x)) == mobius_apply(jm, jx), (x, w))
        _guard(c[names[8]], lambda: j(1 - 1 / x) == 1 - 1 / jx, x)
        _guard(c[names[9]], lambda: j(x / (x + 1)) + j(1 / (x + 1)) == 1, x)
        # two-variable laws, y determined by x, checked in both directions
        y = jx
        _guard(c[names[10]], lambda: (j(x) == y) == (j(y) == x), x)
        _guard(c[names[11]], lambda: j(x) * j(1 / x) == 1, x)
        _guard(c[names[12]], lambda: j(x) * j(-x) == -1, x)
        _guard(c[names[13]], lambda: j(x) + j(1 - x) == 1, x)
        _guard(c[names[14]], lambda: 1 / j(x) + 1 / j(x / (x - 1)) == 1, x)
        _guard(c[names[15]], lambda: word_to_matrix(jimm_word(w)) == jm, w)
    q_names = [
        "jimm_Q involution",
        "jimm_Q(1/x) = 1/jimm_Q(x)",
        "jimm_Q(1+x) = 1+1/jimm_Q(x)",
    ]
    qc = {n: rep.check(n) for n in q_names}
    for i in range(rationals):
        q = random_positive_rational(_rng(seed, "fe-q", i))
        jq = jimm_q_rational(q)
        _guard(qc[q_names[0]], lambda: jimm_q_rational(jq) == q, q)
        _guard(qc[q_names[1]], lambda: jimm_q_rational(1 / q) == 1 / jq, q)
        _guard(qc[q_names[2]], lambda: jimm_q_rational(1 + q) == 1 + 1 / jq, q)
    return rep


def suite_involution(seed: int = 0, n: int = 1000) -> SuiteReport:
    rep = SuiteReport("involution", seed)
    inv = rep.check("jimm(jimm(x)) = x")
    agree = rep.check("rewrite and XOR agree")
    unit = rep.check("jimm maps (0,1) into [0,1]")
    orbit = rep.check("jimm(M x) and jimm(x) in the same orbit")
    noble = rep.check("nobles map to rationals, 2-to-1")
    fixed = rep.check("[(1_k, k+2)] orbit is preserved")
    for i in range(n):
        rng = _rng(seed, "involution", i)
        x = random_surd(rng)
        cf = surd_cf(x)
        _guard(inv, lambda: jimm_surd(jimm_surd(x)) == x, x)
        _guard(agree, lambda: jimm_cf(cf) == jimm_xor_cf(cf), x)
        u = x - x.floor()
        _guard(unit, lambda: 0 <= jimm_surd(u) <= 1, u)
        m = word_to_matrix(random_word(rng))
        _guard(orbit, lambda: same_orbit(jimm_surd(mobius_apply(m, x)), jimm_surd(x)), (x, m))
        nb = random_noble(rng)
        # a noble and its partner across the rational jimm(nb) share one image
        _guard(noble, lambda: _noble_partner_ok(nb), nb)
    for k in range(0, 8):
        x = ContinuedFraction.periodic([], [1] * k + [k + 2]).value()
        _guard(fixed, lambda: same_orbit(jimm_surd(x), x), x)
    return rep


def _noble_partner_ok(x: QuadSurd) -> bool:
    """jimm(x) is rational and has exactly two preimages, one of them x."""
    v = jimm_surd(x)
    if isinstance(v, QuadSurd):
        return False
    phi = QuadSurd(1, 1, 5, 2)
    if v is INF:
        pre = (phi, -1 / phi)
    elif v == 0:
        pre = (1 / phi, -phi)
    else:
        jd = jump(v)  # the preimages of a rational are its one-sided limits
        pre = (jd.left, jd.right)
    return pre[0] != pre[1] and x in pre and all(jimm_surd(p) == v for p in pre)


def suite_galois(seed: int = 0, n: int = 1000) -> SuiteReport:
    rep = SuiteReport("galois", seed)
    g = rep.check("jimm(x*) = jimm(x)*")
    for i in range(n):
        x = random_surd(_rng(seed, "galois", i))
        _guard(g, lambda: galois_commute_check(x) in (True, None), x)
    for x in (QuadSurd(0, 1, 11), QuadSurd(3, 5, 2, 7)):
        _guard(g, lambda: galois_commute_check(x) is True, x)
    return rep


def suite_matrix_table(seed: int = 0) -> SuiteReport:
    rep = SuiteReport("matrix-table", seed)
    for strategy in ("floor", "ceil"):
        c = rep.check(f"table rows ({strategy} decomposition)")
        for m, expected in MATRIX_TABLE:
            _guard(c, lambda: jimm_matrix(m, strategy) == expected, f"{m} -> {jimm_matrix(m, strategy)}")
    inv = rep.check("jimm_matrix is an involution on the table")
    for m, expected in MATRIX_TABLE:
        _guard(inv, lambda: jimm_matrix(expected) == m, m)
    return rep


def mcmullen_input(k: int) -> QuadSurd:
    """[(1_(k+1), 4, 5, 1_k, 3)]."""
    return ContinuedFraction.periodic([], [1] * (k + 1) + [4, 5] + [1] * k + [3]).value()


def mcmullen_image(k: int) -> QuadSurd:
    """[k+2; (1_2, 2, 1_3, k+2, 1, k+3)]."""
    return ContinuedFraction.periodic([k + 2], [1, 1, 2, 1, 1, 1, k + 2, 1, k + 3]).value()


def mcmullen_image_as_printed(k: int) -> QuadSurd:
    """[k+2; (2, 2, 3, k+2, 1, k+3)]: the run lengths written as plain quotients."""
    return ContinuedFraction.periodic([k + 2], [2, 2, 3, k + 2, 1, k + 3]).value()


def unit_family_input(n: int, a: int) -> QuadSurd:
    """[0; (1_(n-1), a)]."""
    return ContinuedFraction.periodic([0], [1] * (n - 1) + [a]).value()


def unit_family_image(n: int, a: int) -> QuadSurd:
    """[0; n, (1_(a-2), n+1)]."""
    return ContinuedFraction.periodic([0, n], [1] * (a - 2) + [n + 1]).value()


def unit_family_image_as_printed(n: int, a: int) -> QuadSurd:
    """[0; n, (a-2, n+1)]; agrees with unit_family_image only at a = 3."""
    return ContinuedFraction.periodic([0, n], [a - 2, n + 1]).value()


def suite_mcmullen(seed: int = 0) -> SuiteReport:
    rep = SuiteReport("mcmullen", seed)
    mc = rep.check("McMullen family k=1..6: [k+2;(1_2,2,1_3,k+2,1,k+3)]")
    mc_lit = rep.check("McMullen family k=1..6: [k+2;(2,2,3,k+2,1,k+3)] read literally", informational=True)
    cores = []
    for k in range(1, 7):
        x = mcmullen_input(k)
        _guard(mc, lambda: jimm_surd(x) == mcmullen_image(k), (k, x))
        _guard(mc_lit, lambda: jimm_surd(x) == mcmullen_image_as_printed(k), (k, x))
        cores.append(squarefree_split(jimm_surd(x).discriminant())[1])
    fields = rep.check("McMullen images lie in distinct quadratic fields")
    fields.record(len(set(cores)) == len(cores), cores)
    fam = rep.check("[0;(1_(n-1),a)] -> [0;n,(1_(a-2),n+1)], n=2..5, a=3..6")
    fam_lit = rep.check("[0;(1_(n-1),a)] -> [0;n,(a-2,n+1)] read literally", informational=True)
    for n in range(2, 6):
        for a in range(3, 7):
            x = unit_family_input(n, a)
            _guard(fam, lambda: jimm_surd(x) == unit_family_image(n, a), (n, a))
            _guard(fam_lit, lambda: jimm_surd(x) == unit_family_image_as_printed(n, a), (n, a))
    n1 = rep.check("jimm(p+sqrt(p^2-1)) has norm 1")
    for p in range(2, 30):
        x = QuadSurd(p, 1, p * p - 1)
        _guard(n1, lambda: _norm_form(jimm_surd(x), 1), x)
    nm1 = rep.check("jimm(sqrt(q)) has norm -1")
    for q in range(2, 60):
        if int(q**0.5) ** 2 == q:
            continue
        x = QuadSurd(0, 1, q)
        _guard(nm1, lambda: _norm_form(jimm_surd(x), -1), x)
    return rep


def _norm_form(y, norm) -> bool:
    """y = X + sqrt(X^2 - norm) with X rational: y*y' = norm and y is the larger root."""
    return isinstance(y, QuadSurd) and y.norm() == norm and y > y.conjugate()


def suite_delta(seed: int = 0, n_max: int = 30) -> SuiteReport:
    rep = SuiteReport("delta", seed)
    formula = rep.check("jump(n).delta = closed formula, n=1..30")
    monotone = rep.check("|delta(n)| strictly decreasing for n >= 2")
    limits = rep.check("one-sided limits match jimm at nearby surds")
    eps = 1 / (QuadSurd(0, 1, 2) + 40)  # [0; 41, (2)], far from any noble
    tol = Fraction(1, 10**12)
    prev = None
    for n in range(1, n_max + 1):
        jd = jump(n)
        _guard(formula, lambda: jd.delta == delta_integer_formula(n), n)
        if n >= 2:
            if prev is not None:
                monotone.record(abs(jd.delta) < prev, n)
            prev = abs(jd.delta)
        # jimm(n +- eps) and the limits live in different fields: compare, don't subtract
        _guard(limits, lambda: jd.right - tol < jimm_surd(n + eps) < jd.right + tol, (n, "+"))
        _guard(limits, lambda: jd.left - tol < jimm_surd(n - eps) < jd.left + tol, (n, "-"))
    return rep


def suite_dynamics(seed: int = 0, n: int = 1000, points: int = 50) -> SuiteReport:
    rep = SuiteReport("dynamics", seed)
    conj = rep.check("jimm T_G jimm = T_jimm")
    done = 0
    i = 0
    while done < n:
        x = random_surd(_rng(seed, "dynamics", i))
        i += 1
        u = x - x.floor()
        if is_noble(u) or is_noble(jimm_surd(u)) or not isinstance(jimm_surd(u), QuadSurd):
            continue
        if not 0 < jimm_surd(u) < 1:
            continue
        _guard(conj, lambda: gauss_conjugacy_check(u), u)
        done += 1
    meas = rep.check("invariant measure residual + tail < 1e-10")
    for k in range(1, points + 1):
        y = Fraction(k, points + 1)
        _guard(meas, lambda: invariant_measure_residual(y, 40).total < 1e-10, y)
    return rep


def suite_rayleigh(seed: int = 0, limit: int = 10000) -> SuiteReport:
    rep = SuiteReport("rayleigh", seed)
    part = rep.check("Beatty pair partitions 1..N")
    harm = rep.check("jimm images are harmonic")
    dual = rep.check("jimm-dual Beatty pair partitions 1..N")
    for x in RAYLEIGH_POINTS:
        r = beatty_duality(x, limit)
        part.record(r["partition"], x)
        harm.record(r["harmonic"], x)
        dual.record(r["dual_partition"], x)
    return rep


SUITES = {
    "fe": suite_fe,
    "involution": suite_involution,
    "galois": suite_galois,
    "matrix-table": suite_matrix_table,
    "mcmullen": suite_mcmullen,
    "delta": suite_delta,
    "dynamics": suite_dynamics,
    "rayleigh": suite_rayleigh,
}


def run_suite(name: str, seed: int = 0) -> list[SuiteReport]:
    if name == "all":
        return [fn(seed) for fn in SUITES.values()]
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join(SUITES)} or all")
    return [SUITES[name](seed)]
