"""Named registries: the seven absolute-monotonicity targets, the Theorem-1
complete-monotonicity claims, and the Theorem-2 logarithmic claims.

Keys deliberately match the labels used throughout the verification suite
(f1..f3, h1..h4, theorem1-item1..8, theorem2-item1..8) so reports map
one-to-one onto the claims they check.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

import mpmath
from mpmath import mpf

from . import gamma_ref
from .expoly import parse_expoly
from .gamma_ref import DEFAULT_PRECISION

# ---- absolute-monotonicity targets ---------------------------------------

AM_FUNCTION_TEXT = {
    "f1": "(t+2)*E^(4t) - 2*t*(2*t+1)*E^(3t) - 2*(t+2)*E^(2t) + 2*t*E^(t) + t + 2",
    "f2": ("(t^2+4*t+6)*E^(6t) - 4*t*(2*t^2+2*t+1)*E^(5t) - 3*(t^2+4*t+6)*E^(4t)"
           " - 8*t*(t^2-t-1)*E^(3t) + 3*(t^2+4*t+6)*E^(2t) - 4*t*E^(t) - t^2 - 4*t - 6"),
    "f3": ("(t^3+6*t^2+18*t+24)*E^(8t) - 4*t*(4*t^3+6*t^2+6*t+3)*E^(7t)"
           " - 4*(t^3+6*t^2+18*t+24)*E^(6t) - 4*t*(16*t^3-12*t-9)*E^(5t)"
           " + 6*(t^3+6*t^2+18*t+24)*E^(4t) - 4*t*(4*t^3-6*t^2+6*t+9)*E^(3t)"
           " - 4*(t^3+6*t^2+18*t+24)*E^(2t) + 12*t*E^(t) + t^3+6*t^2+18*t+24"),
    "h1": "E^(4t) - t*(t+1)*E^(3t) - 2*E^(2t) - t*(t-1)*E^(t) + 1",
    "h2": "(t-2)*E^(4t) + 2*t*E^(3t) - 2*(t-2)*E^(2t) + 2*t*(2*t-1)*E^(t) + t - 2",
    "h3": ("(t^2-4*t+6)*E^(6t) - 4*t*E^(5t) - 3*(t^2-4*t+6)*E^(4t)"
           " - 8*t*(t^2+t-1)*E^(3t) + 3*(t^2-4*t+6)*E^(2t)"
           " - 4*t*(2*t^2-2*t+1)*E^(t) - t^2+4*t-6"),
    "h4": ("(t^3-6*t^2+18*t-24)*E^(8t) + 12*t*E^(7t) - 4*(t^3-6*t^2+18*t-24)*E^(6t)"
           " + 4*t*(4*t^3+6*t^2+6*t-9)*E^(5t) + 6*(t^3-6*t^2+18*t-24)*E^(4t)"
           " + 4*t*(16*t^3-12*t+9)*E^(3t) - 4*(t^3-6*t^2+18*t-24)*E^(2t)"
           " + 4*t*(4*t^3-6*t^2+6*t-3)*E^(t) + t^3-6*t^2+18*t-24"),
}

AM_FUNCTION_NAMES = tuple(AM_FUNCTION_TEXT)


@lru_cache(maxsize=None)
def am_function(name):
    return parse_expoly(AM_FUNCTION_TEXT[name])


# ---- Theorem 1: completely monotonic combinations of b(x) ----------------
#
# Each entry: (label, closure of x, open-left domain endpoint).  All eight
# are claimed completely monotonic on their domain.

def _with_ctx(fn):
    """Run a claim closure at its own working precision.

    The combinations below cancel large multiples of b(x) down to tiny
    values, so their arithmetic must not run at the caller's ambient
    mpmath precision.
    """
    def wrapped(x, prec=DEFAULT_PRECISION):
        with mpmath.workdps(prec.working_digits + 10):
            return fn(mpf(x), prec)
    wrapped.__name__ = fn.__name__
    return wrapped


def _b(x, prec):
    return gamma_ref.b(x, prec)


@_with_ctx
def _cm1(x, prec):
    return -_b(x, prec)


@_with_ctx
def _cm2(x, prec):
    return x * _b(x, prec) + mpf(1) / 24


@_with_ctx
def _cm3(x, prec):
    return mpf(1) / 6 - x / 3 - 8 * x ** 2 * _b(x, prec)


@_with_ctx
def _cm4(x, prec):
    return 16 * x ** 3 * _b(x, prec) + mpf(2) / 3 * x ** 2 - x / 3 + mpf(23) / 180


@_with_ctx
def _cm5(x, prec):
    return (2 * x + 1) * _b(x, prec) + mpf(1) / 12


@_with_ctx
def _cm6(x, prec):
    return -(x + 1) * _b(x, prec) - mpf(1) / 24


@_with_ctx
def _cm7(x, prec):
    return -(x + 1) ** 2 * _b(x, prec) - x / 24 - mpf(1) / 16


@_with_ctx
def _cm8(x, prec):
    return -(x + 1) ** 3 * _b(x, prec) - x ** 2 / 24 - 5 * x / 48 - mpf(203) / 2880


THEOREM1 = {
    "theorem1-item1": (_cm1, -0.5),
    "theorem1-item2": (_cm2, 0.0),
    "theorem1-item3": (_cm3, 0.0),
    "theorem1-item4": (_cm4, 0.0),
    "theorem1-item5": (_cm5, -0.5),
    "theorem1-item6": (_cm6, -0.5),
    "theorem1-item7": (_cm7, -0.5),
    "theorem1-item8": (_cm8, -0.5),
}


# ---- Theorem 2: logarithmically completely monotonic functions -----------
#
# Stored as log-forms (the monotonicity engine differences ln f directly,
# which avoids overflow of the huge powers).  The 8th log-form carries the
# exponent -x(2x+5)/48 on the extra factor; this is the one consistent with
# the completely monotonic combination in theorem1-item8 (its derivative
# chain matches), and it is the form that verifies numerically.

@_with_ctx
def _lcm1(x, prec):
    return x * _b(x, prec)


@_with_ctx
def _lcm2(x, prec):
    return -8 * x ** 2 * _b(x, prec) - x / 3


@_with_ctx
def _lcm3(x, prec):
    return 16 * x ** 3 * _b(x, prec) + (2 * x ** 2 - x) / 3


@_with_ctx
def _lcm4(x, prec):
    return -_b(x, prec)


@_with_ctx
def _lcm5(x, prec):
    return (2 * x + 1) * _b(x, prec)


@_with_ctx
def _lcm6(x, prec):
    return -(x + 1) * _b(x, prec)


@_with_ctx
def _lcm7(x, prec):
    return -(x + 1) ** 2 * _b(x, prec) - x / 24


@_with_ctx
def _lcm8(x, prec):
    return -(x + 1) ** 3 * _b(x, prec) - (2 * x ** 2 + 5 * x) / 48


THEOREM2 = {
    "theorem2-item1": (_lcm1, 0.0),
    "theorem2-item2": (_lcm2, 0.0),
    "theorem2-item3": (_lcm3, 0.0),
    "theorem2-item4": (_lcm4, -0.5),
    "theorem2-item5": (_lcm5, -0.5),
    "theorem2-item6": (_lcm6, -0.5),
    "theorem2-item7": (_lcm7, -0.5),
    "theorem2-item8": (_lcm8, -0.5),
}


# Integral representations for theorem1-item2..8: each right-hand side is
# prefactor * integral over (0, inf) of numerator(t) / (t^a (e^2t - 1)^b)
# times e^-(2x+1)t.  The prefactors for items 2 and 8 are 1/4 and 1/16;
# the published statements carry 1/2 and 1, which fail numerically by
# exactly those factors (checked at five points each to 4e-13).
THEOREM1_KERNELS = {
    "theorem1-item2": ("f1", 3, 2, Fraction(1, 4)),
    "theorem1-item3": ("f2", 4, 3, Fraction(1)),
    "theorem1-item4": ("f3", 5, 4, Fraction(1)),
    "theorem1-item5": ("h1", 3, 2, Fraction(1)),
    "theorem1-item6": ("h2", 3, 2, Fraction(1, 4)),
    "theorem1-item7": ("h3", 4, 3, Fraction(1, 8)),
    "theorem1-item8": ("h4", 5, 4, Fraction(1, 16)),
}


def theorem1_claim(key):
    """(closure f(x, prec), left endpoint) for a Theorem-1 CM claim."""
    return THEOREM1[key]


def theorem2_log_claim(key):
    """(closure ln f(x, prec), left endpoint) for a Theorem-2 LCM claim."""
    return THEOREM2[key]
