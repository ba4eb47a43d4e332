"""Truncated power series with exact rational coefficients.

A series is a plain list of Fractions, index = power of t.  All helpers
return lists of the requested length, zero-padded.  Everything here is
exact; nothing ever rounds.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial

Series = list


def pad(s, n):
    """Return s truncated/zero-padded to length n."""
    out = list(s[:n])
    out.extend([Fraction(0)] * (n - len(out)))
    return out


def exp_series(k, n):
    """Maclaurin series of exp(k*t) to n coefficients; k may be any rational."""
    k = Fraction(k)
    return [k**j / factorial(j) for j in range(n)]


def mul(a, b, n):
    """Cauchy product truncated to n coefficients."""
    out = [Fraction(0)] * n
    for i, ai in enumerate(a[:n]):
        if not ai:
            continue
        for j, bj in enumerate(b[: n - i]):
            if bj:
                out[i + j] += ai * bj
    return out


def inv(a, n):
    """Reciprocal series; requires a[0] != 0."""
    if not a or a[0] == 0:
        raise ZeroDivisionError("series has zero constant term")
    out = [Fraction(0)] * n
    out[0] = 1 / Fraction(a[0])
    aa = pad(a, n)
    for m in range(1, n):
        acc = Fraction(0)
        for j in range(1, m + 1):
            acc += aa[j] * out[m - j]
        out[m] = -acc / aa[0]
    return out


def power(a, e, n):
    """a**e for a nonnegative integer exponent e."""
    out = pad([Fraction(1)], n)
    for _ in range(e):
        out = mul(out, a, n)
    return out


def shift_down(a, m):
    """Divide by t^m; the first m coefficients must vanish."""
    if any(c != 0 for c in a[:m]):
        raise ValueError("series does not vanish to order %d" % m)
    return list(a[m:])
