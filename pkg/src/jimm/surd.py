"""Exact rationals with a point at infinity, Fibonacci numbers and real quadratic surds."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd, isqrt


class Infinity:
    """The projective point 1/0. Compares above every finite value."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "inf"

    __str__ = __repr__

    def __eq__(self, other):
        return other is self

    def __hash__(self):
        return hash("jimm-infinity")

    def __lt__(self, other):
        return False

    def __le__(self, other):
        return other is self

    def __gt__(self, other):
        return other is not self

    def __ge__(self, other):
        return True


INF = Infinity()


def is_inf(x) -> bool:
    return x is INF


def fib(n: int) -> int:
    """F_n for any integer n, with F_{-n} = (-1)^(n+1) F_n."""
    if n < 0:
        v = fib(-n)
        return v if n % 2 else -v
    a, b = 0, 1  # F_k, F_{k+1}
    for bit in bin(n)[2:]:
        c = a * (2 * b - a)
        e = a * a + b * b
        a, b = (e, c + e) if bit == "1" else (c, e)
    return a


def _small_primes(limit):
    sieve = bytearray([1]) * (limit + 1)
    sieve[0:2] = b"\x00\x00"
    for i in range(2, isqrt(limit) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(sieve[i * i :: i]))
    return [i for i, v in enumerate(sieve) if v]


_TRIAL_LIMIT = 2000
_PRIMES = _small_primes(_TRIAL_LIMIT)


@lru_cache(maxsize=4096)
def squarefree_split(n: int) -> tuple[int, int, bool]:
    """Write n > 0 as s^2 * core. Returns (s, core, certified).

    Square factors are removed by trial division up to a fixed bound; the
    leftover cofactor is tested for being a perfect square. When the cofactor
    is below the cube of the bound it has at most two prime factors, so the
    result is certified squarefree. Beyond that only the perfect-square test
    is applied and ``certified`` is False.
    """
    if n <= 0:
        raise ValueError("squarefree_split needs a positive integer")
    s, core, m = 1, 1, n
    for p in _PRIMES:
        if p * p > m:
            break
        if m % p:
            continue
        e = 0
        while m % p == 0:
            m //= p
            e += 1
        s *= p ** (e // 2)
        if e % 2:
            core *= p
    certified = m < _TRIAL_LIMIT**3 or m == 1
    if m > 1:
        t = isqrt(m)
        if t * t == m:
            s *= t
        else:
            core *= m
    return s, core, certified


def is_square(n: int) -> bool:
    return n >= 0 and isqrt(n) ** 2 == n


def _floor_div_real(p, q, d, r):
    """floor((p + q*sqrt(d)) / r) for r > 0 and d not a perfect square."""
    s = isqrt(q * q * d)
    t = s if q >= 0 else -s - 1
    if q == 0:
        t = 0
    return (p + t) // r


class QuadSurd:
    """The real quadratic irrational (p + q*sqrt(d)) / r.

    Stored with d reduced by its square factors, r > 0 and gcd(p, q, r) = 1.
    Equality and ordering are exact. Arithmetic between two surds is only
    defined when they live in the same quadratic field.
    """

    __slots__ = ("p", "q", "d", "r", "certified")

    def __init__(self, p: int, q: int, d: int, r: int = 1):
        if r == 0:
            raise ZeroDivisionError("surd denominator is zero")
        if d <= 1 or q == 0:
            raise ValueError("not an irrational surd")
        s, core, cert = squarefree_split(d)
        if core == 1:
            raise ValueError(f"sqrt({d}) is rational")
        q *= s
        if r < 0:
            p, q, r = -p, -q, -r
        g = gcd(gcd(p, q), r)
        self.p, self.q, self.d, self.r = p // g, q // g, core, r // g
        self.certified = cert

    # construction helpers -------------------------------------------------

    @classmethod
    def make(cls, p: int, q: int, d: int, r: int = 1):
        """Like the constructor, but degrades to a Fraction when the value is rational."""
        if r == 0:
            raise ZeroDivisionError("surd denominator is zero")
        if q == 0 or d == 0:
            return Fraction(p, r)
        if is_square(d):
            return Fraction(p + q * isqrt(d), r)
        return cls(p, q, d, r)

    @classmethod
    def sqrt(cls, n):
        n = Fraction(n)
        return cls.make(0, 1, n.numerator * n.denominator, n.denominator)

    @classmethod
    def from_quadratic(cls, a: int, b: int, c: int, larger: bool = True):
        """A root of a*x^2 + b*x + c = 0 with positive non-square discriminant."""
        disc = b * b - 4 * a * c
        if disc <= 0 or is_square(disc):
            raise ValueError("quadratic has no irrational real roots")
        q = 1 if (larger == (a > 0)) else -1
        return cls(-b, q, disc, 2 * a)

    # basic queries ----------------------------------------------------------

    def __repr__(self):
        return f"QuadSurd({self.p}, {self.q}, {self.d}, {self.r})"

    def __str__(self):
        sign = "+" if self.q >= 0 else "-"
        return f"({self.p}{sign}{abs(self.q)}*sqrt({self.d}))/{self.r}"

    def conjugate(self) -> "QuadSurd":
        return QuadSurd(self.p, -self.q, self.d, self.r)

    def trace(self) -> Fraction:
        return Fraction(2 * self.p, self.r)

    def norm(self) -> Fraction:
        return Fraction(self.p * self.p - self.q * self.q * self.d, self.r * self.r)

    def minimal_polynomial(self) -> tuple[int, int, int]:
        """Primitive (a, b, c), a > 0, with a*x^2 + b*x + c = 0."""
        a, b, c = self.r * self.r, -2 * self.p * self.r, self.p * self.p - self.q * self.q * self.d
        g = gcd(gcd(a, b), c)
        return a // g, b // g, c // g

    def discriminant(self) -> int:
        a, b, c = self.minimal_polynomial()
        return b * b - 4 * a * c

    def sign(self) -> int:
        lhs, rhs = self.p * self.p, self.q * self.q * self.d
        if self.p >= 0 and self.q > 0:
            return 1
        if self.p <= 0 and self.q < 0:
            return -1
        # p and q have opposite signs: the larger magnitude decides
        if self.p > 0:
            return 1 if lhs > rhs else -1
        return 1 if rhs > lhs else -1

    def floor(self) -> int:
        return _floor_div_real(self.p, self.q, self.d, self.r)

    def __floor__(self):
        return self.floor()

    def scaled_floor(self, scale: int) -> int:
        """floor(self * scale) for a positive integer scale."""
        return _floor_div_real(self.p * scale, self.q * scale, self.d, self.r)

    def to_decimal(self, digits: int) -> str:
        return render_decimal(self, digits)

    def __float__(self):
        k = 64
        return self.scaled_floor(1 << k) / (1 << k)

    # equality and ordering ------------------------------------------------------

    def _key(self):
        qs = self.q * self.q * self.d
        return Fraction(self.p, self.r), Fraction(qs, self.r * self.r), self.q > 0

    def __eq__(self, other):
        if isinstance(other, QuadSurd):
            return self._key() == other._key()
        return False

    def __hash__(self):
        return hash(self._key())

    def _cmp(self, other) -> int:
        if isinstance(other, (int, Fraction)):
            return (self - other).sign()
        if other is INF:
            return -1
        if not isinstance(other, QuadSurd):
            return NotImplemented
        if self == other:
            return 0
        try:
            diff = self - other
        except ValueError:
            diff = None
        if diff is not None:
            return diff.sign() if isinstance(diff, QuadSurd) else (diff > 0) - (diff < 0)
        # different fields: refine exact binary floors until they separate
        k = 1
        while True:
            a, b = self.scaled_floor(1 << k), other.scaled_floor(1 << k)
            if a != b:
                return -1 if a < b else 1
            k *= 2

    def __lt__(self, other):
        c = self._cmp(other)
        return c if c is NotImplemented else c < 0

    def __le__(self, other):
        c = self._cmp(other)
        return c if c is NotImplemented else c <= 0

    def __gt__(self, other):
        c = self._cmp(other)
        return c if c is NotImplemented else c > 0

    def __ge__(self, other):
        c = self._cmp(other)
        return c if c is NotImplemented else c >= 0

    # arithmetic ----------------------------------------------------------------

    def _align(self, other: "QuadSurd"):
        """Return other's (p, q, r) rewritten over self.d, or raise ValueError."""
        if other.d == self.d:
            return other.p, other.q, other.r
        t = self.d * other.d
        s = isqrt(t)
        if s * s != t:
            raise ValueError(f"surds live in different fields: sqrt({self.d}) vs sqrt({other.d})")
        # sqrt(d2) = s / d1 * sqrt(d1)
        return other.p * self.d, other.q * s, other.r * self.d

    def _smaller_field_first(self, other):
        return (self, other) if self.d <= other.d else (other, self)

    def __neg__(self):
        return QuadSurd(-self.p, -self.q, self.d, self.r)

    def __pos__(self):
        return self

    def __abs__(self):
        return -self if self.sign() < 0 else self

    def __add__(self, other):
        if isinstance(other, int):
            other = Fraction(other)
        if isinstance(other, Fraction):
            n, m = other.numerator, other.denominator
            return QuadSurd.make(self.p * m + n * self.r, self.q * m, self.d, self.r * m)
        if isinstance(other, QuadSurd):
            base, o = self._smaller_field_first(other)
            p2, q2, r2 = base._align(o)
            return QuadSurd.make(base.p * r2 + p2 * base.r, base.q * r2 + q2 * base.r, base.d, base.r * r2)
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, (int, Fraction, QuadSurd)):
            return self + (-other)
        return NotImplemented

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            other = Fraction(other)
        if isinstance(other, Fraction):
            n, m = other.numerator, other.denominator
            return QuadSurd.make(self.p * n, self.q * n, self.d, self.r * m)
        if isinstance(other, QuadSurd):
            base, o = self._smaller_field_first(other)
            p2, q2, r2 = base._align(o)
            p1, q1, r1, d = base.p, base.q, base.r, base.d
            return QuadSurd.make(p1 * p2 + q1 * q2 * d, p1 * q2 + q1 * p2, d, r1 * r2)
        return NotImplemented

    __rmul__ = __mul__

    def reciprocal(self) -> "QuadSurd":
        # r / (p + q sqrt d) = r (p - q sqrt d) / (p^2 - q^2 d)
        den = self.p * self.p - self.q * self.q * self.d
        return QuadSurd(self.r * self.p, -self.r * self.q, self.d, den)

    def __truediv__(self, other):
        if isinstance(other, int):
            other = Fraction(other)
        if isinstance(other, Fraction):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return self * (1 / other)
        if isinstance(other, QuadSurd):
            return self * other.reciprocal()
        return NotImplemented

    def __rtruediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.reciprocal() * other
        return NotImplemented


def number_floor(x) -> int:
    """Exact floor of a Fraction, int or QuadSurd."""
    if isinstance(x, QuadSurd):
        return x.floor()
    if x is INF:
        raise ValueError("floor of infinity")
    return Fraction(x).__floor__()


def render_decimal(x, digits: int) -> str:
    """Truncated decimal expansion with ``digits`` digits after the point."""
    if x is INF:
        return "inf"
    scale = 10**digits
    if isinstance(x, QuadSurd):
        neg = x.sign() < 0
        n = (-x if neg else x).scaled_floor(scale)
    else:
        x = Fraction(x)
        neg = x < 0
        n = (abs(x) * scale).__floor__()
    whole, frac = divmod(n, scale)
    s = str(whole) if digits == 0 else f"{whole}.{frac:0{digits}d}"
    return "-" + s if neg else s
