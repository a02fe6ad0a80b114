"""Text literals for numbers: rationals, surds, continued fractions, named constants."""

from __future__ import annotations

import itertools
import re
from fractions import Fraction

from .cf import ContinuedFraction, DomainError
from .constants import NAMED
from .surd import INF, QuadSurd


class ParseError(DomainError):
    pass


_INT = re.compile(r"[+-]?\d+")
_RATIONAL = re.compile(r"([+-]?\d+)\s*/\s*([+-]?\d+)")
# optional outer parens, optional integer part, signed coefficient of sqrt(D), optional /R
_SURD = re.compile(
    r"""
    (?:(?P<neg>-)\s*(?=\())?
    (?P<open>\()?\s*
    (?:(?P<p>[+-]?\s*\d+)\s*)?
    (?P<sign>[+-])?\s*
    (?:(?P<q>\d+)\s*\*?\s*)?
    sqrt\s*\(\s*(?P<d>\d+)\s*\)\s*
    (?P<close>\))?\s*
    (?:/\s*(?P<r>\d+))?
    """,
    re.VERBOSE,
)
_CF = re.compile(r"\[(.*)\]")


def parse_number(text: str):
    """Parse a literal into a Fraction, INF, QuadSurd or ContinuedFraction.

    Accepted forms: ``inf``; ``7``, ``-3/8``; ``(P+Q*sqrt(D))/R`` with the usual
    shorthands (``sqrt(2)``, ``1-2*sqrt(3)``, ``-(1+sqrt(5))/2``); CFs
    ``[a0;a1,a2]``, ``[a0;a1,(p1,p2)]``, ``[(1)]`` and ``[a0;a1,a2,...]`` for a
    stream; and the names ``pi``, ``e``, ``cbrt2``. Periodic CFs are returned
    as ContinuedFraction (use ``.value()`` for the surd).
    """
    s = text.strip()
    low = s.lower()
    if low in ("inf", "infinity", "oo", "∞"):
        return INF
    if low in NAMED:
        return NAMED[low]()
    if _INT.fullmatch(s):
        return Fraction(int(s))
    m = _RATIONAL.fullmatch(s)
    if m:
        den = int(m.group(2))
        if den == 0:
            raise ParseError(f"zero denominator in {text!r}")
        return Fraction(int(m.group(1)), den)
    m = _CF.fullmatch(s)
    if m:
        return _parse_cf(m.group(1), text)
    m = _SURD.fullmatch(s)
    if m and bool(m.group("open")) == bool(m.group("close")):
        return _surd_from_match(m, text)
    raise ParseError(f"cannot parse number literal {text!r}")


def _surd_from_match(m, text):
    p = int(m.group("p").replace(" ", "")) if m.group("p") else 0
    q = int(m.group("q")) if m.group("q") else 1
    if m.group("sign") == "-":
        q = -q
    elif m.group("sign") is None and m.group("p"):
        raise ParseError(f"missing sign before sqrt in {text!r}")
    r = int(m.group("r")) if m.group("r") else 1
    if r == 0:
        raise ParseError(f"zero denominator in {text!r}")
    if m.group("neg"):
        p, q = -p, -q
    if m.group("r") and not m.group("open") and m.group("p"):
        raise ParseError(f"ambiguous surd literal {text!r}; use parentheses")
    try:
        x = QuadSurd.make(p, q, int(m.group("d")), r)
    except ValueError as e:
        raise ParseError(str(e)) from None
    return x


def _ints(items, text):
    try:
        return [int(t) for t in items if t.strip()]
    except ValueError:
        raise ParseError(f"bad continued fraction {text!r}") from None


def _parse_cf(body: str, text: str):
    body = body.replace(" ", "")
    stream = body.endswith("...")
    if stream:
        body = body[:-3].rstrip(",")
    period = None
    pm = re.search(r"\(([^()]*)\)$", body)
    if pm:
        if stream:
            raise ParseError(f"a CF cannot be both periodic and open-ended: {text!r}")
        period = _ints(pm.group(1).split(","), text)
        body = body[: pm.start()].rstrip(",")
    if ";" in body:
        a0, rest = body.split(";", 1)
        head = _ints([a0], text) + _ints(rest.split(","), text)
    else:
        head = _ints(body.split(","), text)
    try:
        if period is not None:
            if not period:
                raise ParseError(f"empty period in {text!r}")
            return ContinuedFraction.periodic(head, period)
        if not head:
            raise ParseError(f"empty continued fraction {text!r}")
        if stream:
            return _stream_from_prefix(head)
        return ContinuedFraction.finite(head)
    except ParseError:
        raise
    except ValueError as e:
        raise ParseError(f"{text!r}: {e}") from None


def _stream_from_prefix(head):
    """An open-ended CF; known constants are recognised from their leading quotients."""
    for name, make in NAMED.items():
        cf = make()
        if len(head) >= 4 and list(itertools.islice(cf.quotients(), len(head))) == head:
            return cf
    return ContinuedFraction.from_prefix(head)
