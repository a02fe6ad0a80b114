"""Regenerate src/jimm/data/pi_cf.txt (first 10^4 partial quotients of pi).

Development-time only: needs mpmath, which the package itself does not import.
Quotients are kept only where two working precisions agree.
"""

import sys
from fractions import Fraction
from pathlib import Path

import mpmath

COUNT = 10_000


def quotients(dps):
    mpmath.mp.dps = dps
    man, exp = mpmath.mp.pi.man_exp
    x = Fraction(man) * Fraction(2) ** exp
    n, d = x.numerator, x.denominator
    out = []
    while d and len(out) < COUNT + 200:
        a, r = divmod(n, d)
        out.append(a)
        n, d = d, r
    return out


def main():
    lo, hi = quotients(11_500), quotients(12_500)
    common = []
    for a, b in zip(lo, hi):
        if a != b:
            break
        common.append(a)
    # the last agreeing quotient may still be truncated
    common = common[:-1]
    if len(common) < COUNT:
        sys.exit(f"only {len(common)} certified quotients; raise the precision")
    path = Path(__file__).resolve().parents[1] / "src" / "jimm" / "data" / "pi_cf.txt"
    path.write_text("\n".join(map(str, common[:COUNT])) + "\n")
    print(f"wrote {COUNT} quotients to {path}")


if __name__ == "__main__":
    main()
