"""High-precision reference oracle for log-gamma, psi functions and the
remainder/catalog functions of the Stirling and Burnside approximations.

Everything here is defined directly from the recurrence-shifted Stirling
series for ln Gamma (with an explicit alternating-series remainder bound),
never from the Laplace integral representations, so the quadrature module
can be cross-validated against an independent path.

Conventions:
    theta(x)    = ln Gamma(x) - (x - 1/2) ln x + x - ln sqrt(2 pi)      on (0, inf)
    b(x)        = ln Gamma(x+1) - ln sqrt(2 pi) - (x+1/2) ln(x+1/2) + x + 1/2
                                                                        on (-1/2, inf)
    w(x) = 12 x b(x),   vartheta(x) = 12 x theta(x)
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

import mpmath
from mpmath import mpf


@dataclass(frozen=True)
class EvalPrecision:
    working_digits: int = 40
    shift_threshold: float = 30.0

    def __post_init__(self):
        if self.working_digits < 25:
            raise ValueError("working_digits must be at least 25")
        if self.shift_threshold < 10:
            raise ValueError("shift_threshold must be at least 10")


DEFAULT_PRECISION = EvalPrecision()


class DomainError(ValueError):
    pass


def _ctx(prec):
    return mpmath.workdps(prec.working_digits + 10)


def _ln_sqrt_2pi():
    return mpmath.log(mpmath.sqrt(2 * mpmath.pi))


def log_gamma(x, prec=DEFAULT_PRECISION):
    """ln Gamma(x) for x > 0, by upward recurrence + the Stirling series.

    The series is truncated at the smallest term; for the shifted argument
    used here the first omitted term bounds the remainder, and it is driven
    below the precision target.
    """
    with _ctx(prec):
        x = mpf(x)
        if x <= 0:
            raise DomainError("log_gamma requires x > 0, got %s" % x)
        # shift until the Stirling series converges past the working precision
        target = max(prec.shift_threshold, 1.3 * prec.working_digits)
        n = max(0, int(mpmath.ceil(target - x)))
        z = x + n
        correction = mpmath.fsum(mpmath.log(x + k) for k in range(n))
        main = (z - mpf(1) / 2) * mpmath.log(z) - z + _ln_sqrt_2pi()
        tail = mpf(0)
        cutoff = mpf(10) ** (-(prec.working_digits + 5))
        prev = mpmath.inf
        for j in range(1, 120):
            term = mpmath.bernoulli(2 * j) / ((2 * j) * (2 * j - 1) * z ** (2 * j - 1))
            if abs(term) > abs(prev):
                break  # past the smallest term: stop, remainder already bounded
            tail += term
            if abs(term) < cutoff:
                break
            prev = term
        return main + tail - correction


def digamma_trigamma(x, prec=DEFAULT_PRECISION):
    """(psi(x), psi'(x)) for x > 0 via recurrence + asymptotic series."""
    with _ctx(prec):
        x = mpf(x)
        if x <= 0:
            raise DomainError("digamma/trigamma require x > 0, got %s" % x)
        target = max(prec.shift_threshold, 1.3 * prec.working_digits)
        n = max(0, int(mpmath.ceil(target - x)))
        z = x + n
        psi = mpmath.log(z) - 1 / (2 * z)
        psi1 = 1 / z + 1 / (2 * z ** 2)
        cutoff = mpf(10) ** (-(prec.working_digits + 5))
        prev = mpmath.inf
        for j in range(1, 120):
            b2j = mpmath.bernoulli(2 * j)
            t0 = b2j / (2 * j * z ** (2 * j))
            t1 = b2j / z ** (2 * j + 1)
            if abs(t0) > abs(prev):
                break
            psi -= t0
            psi1 += t1
            if abs(t0) < cutoff and abs(t1) < cutoff:
                break
            prev = t0
        # downward recurrence back to x
        psi -= mpmath.fsum(1 / (x + k) for k in range(n))
        psi1 += mpmath.fsum(1 / (x + k) ** 2 for k in range(n))
        return psi, psi1


def remainder(name, x, prec=DEFAULT_PRECISION):
    """theta, vartheta, b or w at x, built from log_gamma only."""
    with _ctx(prec):
        x = mpf(x)
        half = mpf(1) / 2
        if name in ("theta", "vartheta"):
            if x <= 0:
                raise DomainError("%s requires x > 0" % name)
            th = log_gamma(x, prec) - (x - half) * mpmath.log(x) + x - _ln_sqrt_2pi()
            return th if name == "theta" else 12 * x * th
        if name in ("b", "w"):
            if x <= -half:
                raise DomainError("%s requires x > -1/2" % name)
            bb = (log_gamma(x + 1, prec) - _ln_sqrt_2pi()
                  - (x + half) * mpmath.log(x + half) + x + half)
            return bb if name == "b" else 12 * x * bb
        raise ValueError("unknown remainder %r" % name)


def theta(x, prec=DEFAULT_PRECISION):
    return remainder("theta", x, prec)


def b(x, prec=DEFAULT_PRECISION):
    return remainder("b", x, prec)


def lam(x, prec=DEFAULT_PRECISION):
    """lambda(x) = (ln x - 1/(2x) - psi(x)) / 2 for x > 0 (psi-based route)."""
    with _ctx(prec):
        x = mpf(x)
        if x <= 0:
            raise DomainError("lambda requires x > 0")
        psi, _ = digamma_trigamma(x, prec)
        return (mpmath.log(x) - 1 / (2 * x) - psi) / 2


def phi(x, prec=DEFAULT_PRECISION):
    """phi(x) = (psi(x + 1/2) - ln x) / 2 for x > 0 (psi-based route)."""
    with _ctx(prec):
        x = mpf(x)
        if x <= 0:
            raise DomainError("phi requires x > 0")
        psi, _ = digamma_trigamma(x + mpf(1) / 2, prec)
        return (psi - mpmath.log(x)) / 2


def big_f(x, prec=DEFAULT_PRECISION):
    """F(x) = 1 + 4x - 8x(x+1/2) ln(1 + 1/(2x)) on (0, inf)."""
    with _ctx(prec):
        x = mpf(x)
        if x <= 0:
            raise DomainError("F requires x > 0")
        return 1 + 4 * x - 8 * x * (x + mpf(1) / 2) * mpmath.log1p(1 / (2 * x))


def big_g(x, prec=DEFAULT_PRECISION):
    """G(x) = (x+1/2) ln(1 + 1/(2x)) - 1/2 on (0, inf)."""
    with _ctx(prec):
        x = mpf(x)
        if x <= 0:
            raise DomainError("G requires x > 0")
        return (x + mpf(1) / 2) * mpmath.log1p(1 / (2 * x)) - mpf(1) / 2


def h_big(x, prec=DEFAULT_PRECISION, lam_shift=None):
    """H(x) = e^{x + 1/(24(x+shift))} Gamma(x+1) / (x+1/2)^{x+1/2}.

    With shift = 1/2 (default) this is the function whose range is
    (sqrt(2 pi / e), sqrt(2) e^{1/12}) on (0, inf); lam_shift selects the
    one-parameter family variant.
    """
    with _ctx(prec):
        x = mpf(x)
        if x <= 0:
            raise DomainError("H requires x > 0")
        shift = mpf(1) / 2 if lam_shift is None else mpf(lam_shift)
        half = mpf(1) / 2
        lg = log_gamma(x + 1, prec)
        return mpmath.exp(x + 1 / (24 * (x + shift)) + lg - (x + half) * mpmath.log(x + half))


@dataclass(frozen=True)
class CatalogFunction:
    """A named analytic function of x with optional parameters.

    Names: theta, vartheta, b, w, H, H_lambda, F_alpha, g_alpha, BigF,
    BigG, Lambda_pq, Phi_pq, f_pqr.
    """
    name: str
    params: dict = field(default_factory=dict)

    def domain(self):
        p = self.params
        if self.name in ("theta", "vartheta", "H", "H_lambda", "F_alpha",
                         "BigF", "BigG", "Lambda_pq", "Phi_pq", "f_pqr"):
            return (0.0, math.inf)
        if self.name in ("b", "w"):
            return (-0.5, math.inf)
        if self.name == "g_alpha":
            return (max(0.0, -float(p.get("alpha", 0))), math.inf)
        raise ValueError("unknown catalog function %r" % self.name)

    def __call__(self, x, prec=DEFAULT_PRECISION):
        return catalog_eval(self, x, prec)


def catalog_eval(f, x, prec=DEFAULT_PRECISION):
    with _ctx(prec):
        x = mpf(x)
        lo, _ = f.domain()
        if x <= lo:
            raise DomainError("%s requires x > %s, got %s" % (f.name, lo, x))
        p = f.params
        if f.name in ("theta", "vartheta", "b", "w"):
            return remainder(f.name, x, prec)
        if f.name == "H":
            return h_big(x, prec)
        if f.name == "H_lambda":
            return h_big(x, prec, lam_shift=p["lambda"])
        if f.name == "F_alpha":
            alpha = mpf(p["alpha"])
            _, psi1 = digamma_trigamma(x + alpha, prec)
            return mpmath.exp(theta(x, prec) - psi1 / 12)
        if f.name == "g_alpha":
            alpha = mpf(p["alpha"])
            return mpmath.exp(x + log_gamma(x + 1, prec) - (x + alpha) * mpmath.log(x + alpha))
        if f.name == "BigF":
            return big_f(x, prec)
        if f.name == "BigG":
            return big_g(x, prec)
        if f.name == "Lambda_pq":
            pp, q = mpf(p["p"]), mpf(p["q"])
            if pp <= 0:
                raise DomainError("Lambda_pq requires p > 0")
            return lam(pp * x, prec) - q * lam(x, prec)
        if f.name == "Phi_pq":
            pp, q = mpf(p["p"]), mpf(p["q"])
            if pp <= 0:
                raise DomainError("Phi_pq requires p > 0")
            return phi(pp * x, prec) - q * phi(x, prec)
        if f.name == "f_pqr":
            pp, q, r = mpf(p["p"]), mpf(p["q"]), mpf(p["r"])
            if pp <= 0 or r == 0:
                raise DomainError("f_pqr requires p > 0 and r != 0")
            return r * (theta(pp * x, prec) - q * theta(x, prec))
        raise ValueError("unknown catalog function %r" % f.name)


def stirling_variant_remainder(x, prec=DEFAULT_PRECISION):
    """12x [ln Gamma(x+1) - x ln x + x - ln sqrt(2 pi)]: the variant remainder
    in the sqrt(2 pi) (x/e)^x Stirling form.  This (not 12x*theta) is the
    quantity whose unique interior minimum sits near 0.34142."""
    with _ctx(prec):
        x = mpf(x)
        if x <= 0:
            raise DomainError("requires x > 0")
        return 12 * x * (log_gamma(x + 1, prec) - x * mpmath.log(x) + x - _ln_sqrt_2pi())


def _minimizer_equation(x, prec):
    with _ctx(prec):
        x = mpf(x)
        psi, _ = digamma_trigamma(x + 1, prec)
        return (log_gamma(x + 1, prec) + x * psi - _ln_sqrt_2pi()
                - 2 * x * mpmath.log(x) + x)


def vartheta_minimum(prec=DEFAULT_PRECISION, bracket=(0.1, 0.9)):
    """Unique positive critical point beta = 0.34142... of the variant
    Stirling remainder, from the defining equation
    ln Gamma(b+1) + b psi(b+1) - ln sqrt(2 pi) - 2 b ln b + b = 0.

    Bisection on the stated bracket, then secant polish.
    """
    with _ctx(prec):
        a, c = mpf(bracket[0]), mpf(bracket[1])
        fa, fc = _minimizer_equation(a, prec), _minimizer_equation(c, prec)
        if fa * fc > 0:
            raise RuntimeError("bracket %s does not straddle a root" % (bracket,))
        for _ in range(60):
            m = (a + c) / 2
            fm = _minimizer_equation(m, prec)
            if fa * fm <= 0:
                c, fc = m, fm
            else:
                a, fa = m, fm
        # secant polish
        x0, x1 = a, c
        f0, f1 = fa, fc
        for _ in range(40):
            if f1 == f0:
                break
            x2 = x1 - f1 * (x1 - x0) / (f1 - f0)
            x0, f0 = x1, f1
            x1, f1 = x2, _minimizer_equation(x2, prec)
            if abs(x1 - x0) < mpf(10) ** (-(prec.working_digits - 2)):
                break
        return x1


def factorial_shift_error(n, a, prec=DEFAULT_PRECISION):
    """|ln n! - ln approx| for n! ~ sqrt(2 pi n) (n/e)^n exp(psi'(n+a)/12)."""
    with _ctx(prec):
        n = mpf(n)
        _, psi1 = digamma_trigamma(n + mpf(a), prec)
        return abs(theta(n, prec) - psi1 / 12)
